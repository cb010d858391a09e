"""Ordinal arithmetic, and certificates for facts the engine cannot reach.

Sums, products and powers follow the standard recursions on names.  On
finite names they agree with machine arithmetic; past omega they show the
classic asymmetries.  Facts involving infinite families are out of the
bounded engine's reach, but a certificate, once checked by the kernel,
settles them.
"""

from ordcalc.arith import add, mul, pow
from ordcalc.compare import Fuel, cmp_finitary, le
from ordcalc.kernel import SpotCheck, eq_certs, lt_intro, refl, verify
from ordcalc.names import omega, und
from ordcalc.oracle import val


def main():
    print("On finite names arithmetic is ordinary arithmetic:")
    a, b = und(3), und(4)
    print(f"  val(3 + 4)  = {val(add(a, b))}")
    print(f"  val(3 * 4)  = {val(mul(a, b))}")
    print(f"  val(3 ^ 4)  = {val(pow(a, b))}")
    print(f"  3 + 4 names the same ordinal as 7: "
          f"{cmp_finitary(add(a, b), und(7)).name}")

    w = omega()
    print("\nAddition is not commutative past omega.  omega + 1 is a new")
    print("name above omega, while 1 + omega collapses back to omega:")
    spot = SpotCheck(samples=(0, 1, 2, 7), depth=64)
    fwd, back = eq_certs(add(und(1), w), w)
    print(f"  certificate 1+omega <= omega verifies: {verify(fwd, spot).ok}")
    print(f"  certificate omega <= 1+omega verifies: {verify(back, spot).ok}")
    above = le(add(w, und(1)), (w,), Fuel(width=16, depth=64))
    print(f"  engine on omega+1 <= omega: "
          f"{({True: 'yes', False: 'no', None: 'unknown'})[above.value]}")
    print("  (refuting it would mean ruling out every finite stage, so the")
    print("  bounded engine leaves the false claim unknown rather than wrong)")

    print("\nomega * 2 and omega + omega are two routes to one ordinal:")
    c1, c2 = eq_certs(mul(w, und(2)), add(w, w))
    print(f"  both directions verify: "
          f"{verify(c1, spot).ok and verify(c2, spot).ok}")

    print("\nStrict facts carry a witness: omega < omega + omega because")
    print("omega is the member at position 1 of the outer family:")
    cert = lt_intro(w, (add(w, w),), 1, refl(w))
    print(f"  certificate verifies: {verify(cert, spot).ok}")


if __name__ == "__main__":
    main()
