"""What deciding a comparison would tell you about a hidden bit stream.

A bit sequence can be packaged into a pair of names whose strict
comparison encodes a search problem: does the stream ever show a maximal
bit?  If the tail of the stream is declared constant, the answer is
computable and the engine finds it.  If the tail is opaque, settling the
comparison would amount to inspecting infinitely many bits, and the
engine reports unknown at every width.
"""

from ordcalc.compare import Fuel, le, lt
from ordcalc.names import BitSeq, eps_llpo, eps_lpo


def show(tag, verdict):
    print(f"  {tag}: {({True: 'yes', False: 'no', None: 'unknown'})[verdict.value]}")


def main():
    prefix = [0, 0, 1]

    print(f"Prefix {prefix}, tail declared constant (repeats the last bit):")
    u = BitSeq.const_last(prefix)
    a, b = eps_lpo(u)
    show("eps < eps'", lt(a, (b,), Fuel(width=64, depth=512)))

    print(f"\nSame prefix, tail opaque (a function the engine cannot survey):")
    u = BitSeq.opaque(prefix, tail=lambda n: 0)
    a, b = eps_lpo(u)
    for width in (8, 64, 256):
        show(f"eps < eps' at width {width}",
             lt(a, (b,), Fuel(width=width, depth=512)))
    print("No finite width settles it; the names are honest about that.")

    print("\nA second packaging asks on which parity the stream's single 1")
    print("falls.  With the 1 at position 2 (even) and a constant-zero tail:")
    full, evens, odds = eps_llpo(BitSeq.const_last([0, 0, 1, 0]))
    fuel = Fuel(width=64, depth=512)
    show("eps <= eps-even", le(full, (evens,), fuel))
    show("eps <= eps-odd", le(full, (odds,), fuel))


if __name__ == "__main__":
    main()
