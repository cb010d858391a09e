"""A sequent calculus that proves disjunctions the engine cannot split.

A sequent here is a finite set of comparison atoms read as one big "or".
Two rules derive them.  The calculus is complete enough to prove, for a
hidden bit stream, the disjunction "eps < eps' or eps' <= eps" even
though the bounded engine cannot decide either disjunct on its own.
That is the whole point: a disjunction can be certain while both of its
arms stay open.
"""

from ordcalc.compare import Fuel, le, lt
from ordcalc.kernel import SpotCheck
from ordcalc.mlseq import Atom, ml_cert_exa123, ml_derivable, ml_verify
from ordcalc.names import BitSeq, eps_lpo, suc, und


def main():
    a, b = und(2), und(3)
    print("Derivability on finite names is a decision procedure:")
    print(f"  {{2 <= 2}} derivable: "
          f"{ml_derivable(frozenset({Atom(a, 'le', a)}))}")
    print(f"  {{2 < 2}} derivable: "
          f"{ml_derivable(frozenset({Atom(a, 'lt', a)}))}")
    print(f"  {{2 < suc 2}} derivable: "
          f"{ml_derivable(frozenset({Atom(a, 'lt', suc(a))}))}")
    print(f"  {{2 < 3, 3 <= 2}} derivable: "
          f"{ml_derivable(frozenset({Atom(a, 'lt', b), Atom(b, 'le', a)}))}")

    print("\nNow a hidden stream: prefix [0, 1], tail opaque.")
    u = BitSeq.opaque([0, 1], tail=lambda n: 1)
    eps, eps2 = eps_lpo(u)
    v = lt(eps, (eps2,), Fuel(width=64, depth=512))
    print(f"  engine on eps < eps': "
          f"{({True: 'yes', False: 'no', None: 'unknown'})[v.value]}")

    cert = ml_cert_exa123(u)
    report = ml_verify(cert, SpotCheck(samples=(0, 1, 2, 5), depth=128))
    print(f"  sequent certificate for the disjunction verifies: {report.ok}")
    print("The calculus proves the 'or' without committing to a side;")
    print("committing is exactly what the engine cannot afford to do.")


if __name__ == "__main__":
    main()
