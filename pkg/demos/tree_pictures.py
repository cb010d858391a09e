"""Every ordinal name unfolds into a well-founded tree of finite paths.

A path belongs to the tree of a name when each step descends into a
member of the current family.  Weighting a path by the sum of its entries
plus one per entry gives a finite slice of even an infinite tree.
"""

from ordcalc import trees
from ordcalc.arith import add
from ordcalc.names import omega, und


def listing(title, name, bound):
    print(f"{title}, weight <= {bound}:")
    for path in trees.enumerate(name, bound):
        print("  [" + ",".join(str(e) for e in path) + "]")


def main():
    listing("The natural 3", und(3), 6)
    print()
    listing("omega", omega(), 4)
    print()
    listing("omega + 1", add(omega(), und(1)), 4)

    print("\nMembership is decidable path by path:")
    w = omega()
    for path in ([2, 0, 0], [2, 0, 0, 0]):
        print(f"  {path} in Tree(omega): {trees.member(path, w)}")

    print("\nEvery descending walk is barred: following any index choices,")
    print("a walk leaves the tree after finitely many steps.")
    steps = trees.bar_probe(und(3), lambda n: 0, guard=10)
    print(f"  constant-0 walk through Tree(3) exits after {steps} steps")
    steps = trees.bar_probe(omega(), lambda n: 7, guard=10)
    print(f"  constant-7 walk through Tree(omega) exits after {steps} steps")


if __name__ == "__main__":
    main()
