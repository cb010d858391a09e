"""Fuel-bounded three-valued comparison of ordinal names.

``le(a, bs)`` asks whether a is below the supremum of the names in bs, and
``lt(a, bs)`` whether it is strictly below.  Both relations are defined by a
simultaneous recursion: a <= bs when every subordinal of a is strictly below
bs, and a < bs when some choice of finitely many subordinals, taken from the
members of bs and not all empty, bounds a from above.

Verdicts are strong-Kleene truth values.  True and False are final: True
comes only from fully exhausted index sets or an explicit witness, False only
from a counterexample or an exhausted witness space.  Every budget truncation
yields Unknown, tagged with what ran out.  Definite verdicts are monotone in
the fuel and are cached; Unknown is never cached.

The search over witness selections examines prefixes only.  That loses no
generality: a selection is below any larger one, so if some selection works,
a prefix covering it works too.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple

from .names import NAT, Fin, OrdName, max_fin_width, structural_depth

sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))


class EngineError(RuntimeError):
    """A family generator failed while the engine was evaluating."""


WIDTH_TRUNCATED = "width-truncated"
DEPTH_EXHAUSTED = "depth-exhausted"


class TriBool:
    """Strong-Kleene truth value; unknowns carry a diagnostic reason that
    does not participate in equality or in the connectives."""

    __slots__ = ("value", "reason")

    def __init__(self, value: Optional[bool], reason: Optional[str] = None):
        self.value = value
        self.reason = reason

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TriBool) and other.value == self.value

    def __hash__(self) -> int:
        return hash(self.value)

    def __bool__(self) -> bool:
        raise TypeError("three-valued verdict: test .value explicitly")

    @property
    def is_true(self) -> bool:
        return self.value is True

    @property
    def is_false(self) -> bool:
        return self.value is False

    @property
    def is_unknown(self) -> bool:
        return self.value is None

    def and_(self, other: "TriBool") -> "TriBool":
        if self.is_false or other.is_false:
            return FALSE
        if self.is_true and other.is_true:
            return TRUE
        return TriBool(None, self.reason if self.is_unknown else other.reason)

    def or_(self, other: "TriBool") -> "TriBool":
        if self.is_true or other.is_true:
            return TRUE
        if self.is_false and other.is_false:
            return FALSE
        return TriBool(None, self.reason if self.is_unknown else other.reason)

    def not_(self) -> "TriBool":
        if self.is_unknown:
            return self
        return FALSE if self.is_true else TRUE

    def __repr__(self) -> str:
        if self.value is None:
            return f"Unknown({self.reason})" if self.reason else "Unknown"
        return "True" if self.value else "False"


TRUE = TriBool(True)
FALSE = TriBool(False)
UNKNOWN = TriBool(None)


def _unknown(reason: str) -> TriBool:
    return TriBool(None, reason)


@dataclass(frozen=True)
class Fuel:
    """Search budget: width bounds every index enumeration and witness
    prefix, depth bounds recursion.  steps caps the total number of
    subqueries one evaluation may spawn; exhausting it yields Unknown, which
    keeps worst cases (nested witness searches over naturally indexed names
    re-explore selections combinatorially) bounded without ever affecting a
    verdict's soundness.  Left unset it is derived from width and depth."""

    width: int = 64
    depth: int = 512
    steps: Optional[int] = None

    def __post_init__(self):
        if self.width < 0 or self.depth < 0:
            raise ValueError("fuel must be nonnegative")
        if self.steps is not None and self.steps < 1:
            raise ValueError("step budget must be positive")

    @property
    def step_budget(self) -> int:
        if self.steps is not None:
            return self.steps
        return max(20_000, self.width * self.depth)


DEFAULT_FUEL = Fuel()


@dataclass(frozen=True)
class Judgment:
    """A comparison claim: kind is "le" or "lt", rhs a nonempty tuple."""

    kind: str
    lhs: OrdName
    rhs: Tuple[OrdName, ...]

    def __post_init__(self):
        if self.kind not in ("le", "lt"):
            raise ValueError(f"bad judgment kind {self.kind!r}")
        if not self.rhs:
            raise ValueError("judgment needs at least one bound")

    def __repr__(self) -> str:
        op = "<=" if self.kind == "le" else "<"
        return f"{self.lhs!r} {op} {list(self.rhs)!r}"


# definite verdicts only, keyed by (kind, lhs ident, rhs ident set)
_memo: dict = {}
# per rhs ident set: the witness selections, one per prefix width
_sel_cache: dict = {}
_stats = {"evals": 0, "hits": 0}


def clear_memo() -> None:
    _memo.clear()
    _sel_cache.clear()
    _stats["evals"] = 0
    _stats["hits"] = 0


def memo_stats() -> dict:
    return {"evals": _stats["evals"], "hits": _stats["hits"], "entries": len(_memo)}


def _child(a: OrdName, i: int) -> OrdName:
    try:
        return a.child(i)
    except (RecursionError, KeyboardInterrupt):
        raise
    except Exception as e:
        raise EngineError(f"family generator failed at index {i}") from e


def _span(a: OrdName, width: int):
    """How far to enumerate a's subordinals and whether that exhausts them."""
    idx = a.index
    if isinstance(idx, Fin):
        return min(idx.size, width), idx.size <= width
    cf = a.family.const_from
    if cf is not None:
        return min(cf + 1, width), cf + 1 <= width
    return width, False


def _arity_bound(a: OrdName) -> Optional[int]:
    """Selection size that provably covers a member's subordinals, or None."""
    if a.is_zero:
        return 0
    idx = a.index
    if isinstance(idx, Fin):
        return idx.size
    cf = a.family.const_from
    if cf is not None:
        return cf + 1
    return None


def _rhs_key(bs: tuple) -> frozenset:
    return frozenset(b.ident for b in bs)


def _selection(bs: tuple, rhs_key: frozenset, m: int):
    """The m-th witness selection for these bounds: each member contributes
    its subordinal prefix of length m (clamped to the member's own arity).
    Cached per bound set, since every scan against the same bounds retries
    the same selections."""
    grown = _sel_cache.get(rhs_key)
    if grown is None:
        grown = _sel_cache[rhs_key] = []
    while len(grown) < m:
        k = len(grown) + 1
        sel = []
        for b in bs:
            ab = _arity_bound(b)
            take = k if ab is None else min(k, ab)
            for i in range(take):
                sel.append(_child(b, i))
        sel_t = tuple(sel)
        grown.append((sel_t, _rhs_key(sel_t)))
    return grown[m - 1]


def _le(a: OrdName, bs: tuple, rhs_key: frozenset, width: int, depth: int,
        budget: list) -> TriBool:
    if a.is_zero:
        return TRUE
    for b in bs:
        if b.ident == a.ident:
            return TRUE
    key = ("le", a.ident, rhs_key)
    hit = _memo.get(key)
    if hit is not None:
        _stats["hits"] += 1
        return TRUE if hit else FALSE
    if depth == 0 or budget[0] <= 0:
        return _unknown(DEPTH_EXHAUSTED)
    budget[0] -= 1
    _stats["evals"] += 1
    scan, exhausted = _span(a, width)
    pending: Optional[TriBool] = None
    for i in range(scan):
        r = _lt(_child(a, i), bs, rhs_key, width, depth - 1, budget)
        if r.is_false:
            _memo[key] = False
            return FALSE
        if r.is_unknown and pending is None:
            pending = r
    if pending is not None:
        return pending
    if not exhausted:
        return _unknown(WIDTH_TRUNCATED)
    _memo[key] = True
    return TRUE


def _lt(a: OrdName, bs: tuple, rhs_key: frozenset, width: int, depth: int,
        budget: list) -> TriBool:
    key = ("lt", a.ident, rhs_key)
    hit = _memo.get(key)
    if hit is not None:
        _stats["hits"] += 1
        return TRUE if hit else FALSE
    if depth == 0 or budget[0] <= 0:
        return _unknown(DEPTH_EXHAUSTED)
    budget[0] -= 1
    _stats["evals"] += 1
    arities = [_arity_bound(b) for b in bs]
    cover = None if any(x is None for x in arities) else max(arities)
    if cover == 0:
        _memo[key] = False
        return FALSE
    top = width if cover is None else min(width, cover)
    covering: Optional[TriBool] = None
    for m in range(1, top + 1):
        sel, sel_key = _selection(bs, rhs_key, m)
        r = _le(a, sel, sel_key, width, depth - 1, budget)
        if r.is_true:
            _memo[key] = True
            return TRUE
        if m == cover:
            covering = r
    if covering is not None:
        # the covering prefix is the largest selection there is; a definite
        # refutation of it refutes every selection
        if covering.is_false:
            _memo[key] = False
            return FALSE
        return covering
    return _unknown(WIDTH_TRUNCATED)


def _as_rhs(bs) -> tuple:
    if isinstance(bs, OrdName):
        raise TypeError("rhs must be a sequence of names")
    bs = tuple(bs)
    if not bs:
        raise ValueError("rhs must be nonempty")
    for b in bs:
        if not isinstance(b, OrdName):
            raise TypeError(f"rhs member is not a name: {b!r}")
    return bs


def le(a: OrdName, bs: Sequence[OrdName], fuel: Fuel = DEFAULT_FUEL) -> TriBool:
    """Is a below the supremum of bs?  Sound in both definite directions."""
    rhs = _as_rhs(bs)
    return _le(a, rhs, _rhs_key(rhs), fuel.width, fuel.depth,
               [fuel.step_budget])


def lt(a: OrdName, bs: Sequence[OrdName], fuel: Fuel = DEFAULT_FUEL) -> TriBool:
    """Is a strictly below the supremum of bs?"""
    rhs = _as_rhs(bs)
    return _lt(a, rhs, _rhs_key(rhs), fuel.width, fuel.depth,
               [fuel.step_budget])


def eq(a: OrdName, b: OrdName, fuel: Fuel = DEFAULT_FUEL) -> TriBool:
    """Mutual le, combined with the strong-Kleene conjunction."""
    return le(a, (b,), fuel).and_(le(b, (a,), fuel))


class Ordering(Enum):
    LT = "lt"
    EQ = "eq"
    GT = "gt"


def finitary_fuel(*names: OrdName) -> Fuel:
    """Fuel provably sufficient for definite verdicts on these finitary
    names: width covers every index set, depth the interleaved descent.
    The step allowance is deliberately generous; definite verdicts stop as
    soon as they are reached, so it is an emergency brake, not a cost."""
    w = max([1] + [max_fin_width(n) for n in names])
    d = 2 * sum(structural_depth(n) for n in names) + 8
    return Fuel(width=w, depth=d, steps=2_000_000)


def cmp_finitary(a: OrdName, b: OrdName) -> Ordering:
    """Total comparison on finitary names."""
    if not (a.is_finitary and b.is_finitary):
        raise ValueError("cmp_finitary is only total on finitary names")
    fuel = finitary_fuel(a, b)
    ab = le(a, (b,), fuel)
    ba = le(b, (a,), fuel)
    if ab.is_unknown or ba.is_unknown:
        raise RuntimeError("engine failed to decide a finitary comparison")
    if ab.is_true and ba.is_true:
        return Ordering.EQ
    if ab.is_true:
        return Ordering.LT
    if ba.is_true:
        return Ordering.GT
    raise RuntimeError("finitary comparison yielded an order gap")
