"""Build ordinal names and ask the bounded engine about them.

Names are Zero or a family of already-built names.  Finite families give
finite ordinals; a family indexed by all naturals can reach omega and
beyond.  The comparison engine answers with three values: a definite yes,
a definite no, or unknown when its fuel runs out before the question is
settled.
"""

from ordcalc.compare import Fuel, finitary_fuel, le, lt
from ordcalc.names import ZERO, omega, suc_list, sup_finite, und
from ordcalc.arith import add


def show(tag, verdict):
    label = {True: "yes", False: "no", None: "unknown"}[verdict.value]
    extra = f" ({verdict.reason})" if verdict.value is None else ""
    print(f"  {tag}: {label}{extra}")


def main():
    print("Finite names are just towers over zero:")
    three = und(3)
    five = und(5)
    show("3 < 5", lt(three, (five,), finitary_fuel(three, five)))
    show("5 <= 3", le(five, (three,), finitary_fuel(five, three)))

    print("\nA successor family bundles several names under one roof;")
    print("a sup names the least upper bound instead:")
    bundle = suc_list([three, five])
    flat = sup_finite([three, five])
    show("sup{3,5} < suc{3,5}", lt(flat, (bundle,), finitary_fuel(flat, bundle)))
    show("sup{3,5} <= 5", le(flat, (five,), finitary_fuel(flat, five)))

    print("\nomega is the sup over all naturals.  Every finite name sits")
    print("strictly below it; the engine only needs enough width to scan")
    print("out to the witnessing member:")
    w = omega()
    show("41 < omega, width 8", lt(und(41), (w,), Fuel(width=8, depth=48)))
    show("41 < omega, width 48", lt(und(41), (w,), Fuel(width=48, depth=48)))
    print("(definite verdicts are remembered, so asking the width-8")
    print(" question again now would come back yes)")

    print("\nSome true facts outrun a small fuel budget.  1 + omega equals")
    print("omega, but a narrow scan cannot check every family member:")
    one_plus_w = add(und(1), w)
    show("1+omega <= omega, width 4", le(one_plus_w, (w,), Fuel(width=4, depth=32)))
    print("More width does not help here; the family is infinite, and only")
    print("a certificate (see the kernel) or a wider mathematical argument")
    print("settles it.  Unknown is an honest answer, never a wrong one.")


if __name__ == "__main__":
    main()
