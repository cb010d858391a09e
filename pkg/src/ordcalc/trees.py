"""Well-founded tree encodings of names.

Every name denotes a set of finite index paths: the empty path always
belongs, and n followed by sigma belongs to a node's tree when n is a valid
index and sigma belongs to the n-th subordinal's tree.  The weight of a path
charges n + 1 for each entry, so every weight bound cuts the tree (even a
naturally indexed one) down to a finite set.
"""

from __future__ import annotations

from typing import Callable, List, Optional, Sequence, Tuple

from .names import Fin, OrdName

NodePath = Tuple[int, ...]


def mu(path: Sequence[int]) -> int:
    """Path weight: sum of entry + 1 over the entries."""
    return sum(e + 1 for e in path)


def member(path: Sequence[int], alpha: OrdName) -> bool:
    """Does the path belong to alpha's tree?"""
    for e in path:
        if not isinstance(e, int) or e < 0:
            raise ValueError(f"path entries are naturals, got {e!r}")
    for e in path:
        if alpha.is_zero or e not in alpha.index:
            return False
        alpha = alpha.child(e)
    return True


def enumerate(alpha: OrdName, mu_bound: int) -> List[NodePath]:
    """All member paths of weight at most mu_bound, sorted by weight, then
    length, then lexicographically."""
    if mu_bound < 0:
        raise ValueError("the weight bound must be nonnegative")
    acc: List[NodePath] = []

    def walk(a: OrdName, prefix: tuple, left: int) -> None:
        acc.append(prefix)
        if a.is_zero:
            return
        idx = a.index
        top = min(idx.size, left) if isinstance(idx, Fin) else left
        for n in range(top):
            walk(a.child(n), prefix + (n,), left - (n + 1))

    walk(alpha, (), mu_bound)
    acc.sort(key=lambda p: (mu(p), len(p), p))
    return acc


def node_count(alpha: OrdName) -> int:
    """Number of names in a finitary name's tree, the root included."""
    if not alpha.is_finitary:
        raise ValueError("node_count is only total on finitary names")
    if alpha.is_zero:
        return 1
    return 1 + sum(node_count(alpha.child(i)) for i in range(alpha.index.size))


class _GuardExhausted:
    __slots__ = ()

    def __repr__(self) -> str:
        return "GuardExhausted"


GUARD_EXHAUSTED = _GuardExhausted()


def bar_probe(alpha: OrdName, f: Callable[[int], int], guard: int):
    """Least n <= guard such that the first n values of f, read as a path,
    leave alpha's tree; GUARD_EXHAUSTED when no prefix up to the guard does.

    Trees of names are barred: along any infinite branch the subordinal
    shrinks, so some finite prefix must fall out.  The guard only protects
    against callers probing further than they paid for.
    """
    if guard < 0:
        raise ValueError("guard must be nonnegative")
    prefix: list = []
    for n in range(1, guard + 1):
        prefix.append(f(n - 1))
        if not member(prefix, alpha):
            return n
    return GUARD_EXHAUSTED
