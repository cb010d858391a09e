"""A two-rule sequent calculus of comparison atoms, and its derivability.

Sequents are finite sets of atoms a < b, a <= b, read disjunctively.  The
calculus has exactly two rules, each keeping an arbitrary side context G:

  R1:  from  G, a <= w_n   infer  G, a < w      (n any index of node w)
  R2:  from  G, w_i < b  for every i  infer  G, w <= b

Zero has no subordinals, so R2 gives every sequent containing 0 <= b outright.

``ml_derivable`` decides derivability of finitary sequents by a forward
closure that tracks the minimal derivable sequents; side contexts make
derivability upward closed, so tracking minima loses nothing.  Certificates
mirror the two rules; one per subordinal premises of a naturally indexed
node are generator-backed, exactly as in the comparison kernel, and are
spot-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

from .kernel import Exhaustive, KernelError, SpotCheck, VerifyReport
from .names import BitSeq, Fin, NAT, Index, OrdName, ZERO, eps_lpo, und


@dataclass(frozen=True)
class Atom:
    lhs: OrdName
    rel: str  # "lt" | "le"
    rhs: OrdName

    def __post_init__(self):
        if self.rel not in ("lt", "le"):
            raise ValueError(f"bad atom relation {self.rel!r}")

    def __repr__(self) -> str:
        op = "<" if self.rel == "lt" else "<="
        return f"{self.lhs!r} {op} {self.rhs!r}"


Sequent = FrozenSet[Atom]


def sequent(atoms: Iterable[Atom]) -> Sequent:
    s = frozenset(atoms)
    if not s:
        raise ValueError("a sequent needs at least one atom")
    return s


# ---------------------------------------------------------------------------
# derivability on finitary sequents


def _universe(goal: Sequent) -> List[OrdName]:
    """Subterm closure of the names in the goal, zero included."""
    seen: dict = {}

    def walk(n: OrdName) -> None:
        if n.ident in seen:
            return
        if not n.is_finitary:
            raise ValueError("derivability search needs finitary names")
        seen[n.ident] = n
        if not n.is_zero:
            for i in range(n.index.size):
                walk(n.child(i))

    walk(ZERO)
    for atom in goal:
        walk(atom.lhs)
        walk(atom.rhs)
    return list(seen.values())


def ml_derivable(goal: Sequent) -> bool:
    """Is the sequent derivable by the two rules?

    Saturates the set of minimal derivable sequents over the goal's subterm
    universe: seeds are the zero-rule instances {0 <= b}, R1 rewrites one
    atom of a known sequent, R2 combines known sequents, one per subordinal.
    The universe is finite, so the closure terminates.
    """
    goal = sequent(goal)
    names = _universe(goal)
    nodes = [n for n in names if not n.is_zero]
    parents: dict = {}
    for w in nodes:
        for n in range(w.index.size):
            parents.setdefault(w.child(n).ident, []).append((w, n))

    minimal: List[Sequent] = []

    def subsumed(s: Sequent) -> bool:
        return any(m <= s for m in minimal)

    def push(s: Sequent) -> bool:
        if subsumed(s):
            return False
        minimal[:] = [m for m in minimal if not s <= m]
        minimal.append(s)
        return True

    for b in names:
        push(frozenset({Atom(ZERO, "le", b)}))

    changed = True
    while changed:
        changed = False
        for m in list(minimal):
            for atom in m:
                if atom.rel != "le":
                    continue
                for w, _n in parents.get(atom.rhs.ident, ()):
                    c = (m - {atom}) | {Atom(atom.lhs, "lt", w)}
                    if push(c):
                        changed = True
        for w in nodes:
            k = w.index.size
            for b in names:
                qs = [Atom(w.child(i), "lt", b) for i in range(k)]
                cands = [[m for m in list(minimal) if q in m] for q in qs]
                if any(not c for c in cands):
                    continue
                head = Atom(w, "le", b)
                for combo in product(*cands):
                    gamma: set = set()
                    for mi, qi in zip(combo, qs):
                        gamma |= mi - {qi}
                    if push(frozenset(gamma) | {head}):
                        changed = True
    return any(m <= goal for m in minimal)


# ---------------------------------------------------------------------------
# certificates


class MlCertificate:
    """One rule application on sequents; premises may be generator-backed."""

    __slots__ = ("rule", "conclusion", "principal", "choice", "premises",
                 "gen_index", "_gen", "_gen_cache")

    def __init__(self, rule: str, conclusion: Sequent, principal: Atom,
                 choice: Optional[int] = None,
                 premises: Tuple["MlCertificate", ...] = (),
                 gen_index: Optional[Index] = None,
                 gen: Optional[Callable[[int], "MlCertificate"]] = None):
        self.rule = rule
        self.conclusion = conclusion
        self.principal = principal
        self.choice = choice
        self.premises = premises
        self.gen_index = gen_index
        self._gen = gen
        self._gen_cache: dict = {}

    @property
    def generated(self) -> bool:
        return self._gen is not None

    def premise_at(self, i: int) -> "MlCertificate":
        if self._gen is None:
            return self.premises[i]
        if i not in self.gen_index:
            raise IndexError(f"premise index {i!r} outside {self.gen_index!r}")
        hit = self._gen_cache.get(i)
        if hit is None:
            hit = self._gen(i)
            if not isinstance(hit, MlCertificate):
                raise KernelError("premise generator returned a non-certificate")
            self._gen_cache[i] = hit
        return hit

    def __repr__(self) -> str:
        return f"<mlcert {self.rule} |{len(self.conclusion)} atoms|>"


def ml_r1(conclusion: Iterable[Atom], principal: Atom, n: int,
          premise: MlCertificate) -> MlCertificate:
    """R1: conclusion contains principal a < w; the premise sequent carries
    a <= w_n instead."""
    conclusion = sequent(conclusion)
    if principal.rel != "lt" or principal not in conclusion:
        raise KernelError("principal must be a strict atom of the conclusion")
    w = principal.rhs
    if w.is_zero or n not in w.index:
        raise KernelError(f"index {n} invalid for the principal bound")
    return MlCertificate("r1", conclusion, principal, choice=n,
                         premises=(premise,))


def ml_r2(conclusion: Iterable[Atom], principal: Atom,
          premises: Optional[Tuple[MlCertificate, ...]] = None,
          gen: Optional[Callable[[int], MlCertificate]] = None) -> MlCertificate:
    """R2: conclusion contains principal w <= b; one premise per subordinal
    of w carries w_i < b instead."""
    conclusion = sequent(conclusion)
    if principal.rel != "le" or principal not in conclusion:
        raise KernelError("principal must be a non-strict atom of the conclusion")
    w = principal.lhs
    if w.is_zero:
        if premises or gen:
            raise KernelError("zero takes no premises")
        return MlCertificate("r2", conclusion, principal)
    if isinstance(w.index, Fin):
        if gen is not None or premises is None:
            raise KernelError("finitely branching principal takes a premise tuple")
        premises = tuple(premises)
        if len(premises) != w.index.size:
            raise KernelError("one premise per subordinal")
        return MlCertificate("r2", conclusion, principal, premises=premises)
    if gen is None or premises:
        raise KernelError("naturally indexed principal takes a premise generator")
    return MlCertificate("r2", conclusion, principal, gen_index=NAT, gen=gen)


def _check_r1(c: MlCertificate, premise: Sequent) -> Optional[str]:
    p, n = c.principal, c.choice
    w = p.rhs
    if p.rel != "lt" or p not in c.conclusion:
        return "principal missing or not strict"
    if w.is_zero or n is None or n not in w.index:
        return "choice index invalid"
    q = Atom(p.lhs, "le", w.child(n))
    if q not in premise:
        return "premise lacks the replaced atom"
    if not (premise - {q} <= c.conclusion):
        return "premise context exceeds the conclusion"
    if not (c.conclusion - {p} <= premise):
        return "conclusion context exceeds the premise"
    return None


def _check_r2_premise(c: MlCertificate, i: int, premise: Sequent) -> Optional[str]:
    p = c.principal
    q = Atom(p.lhs.child(i), "lt", p.rhs)
    gamma = c.conclusion - {p}
    if q not in premise:
        return f"premise {i} lacks its subordinal atom"
    if not (premise - {q} <= gamma):
        return f"premise {i} context exceeds the conclusion's"
    if not (gamma <= premise):
        return f"premise {i} drops part of the context"
    return None


def ml_verify(cert: MlCertificate, policy=Exhaustive()) -> VerifyReport:
    """Rederive every visited rule instance; same policies as the kernel."""
    report = VerifyReport(ok=True)
    spot = policy if isinstance(policy, SpotCheck) else None
    if spot is None and not isinstance(policy, Exhaustive):
        raise KernelError(f"unknown verification policy: {policy!r}")

    def walk(c: MlCertificate, path: str, depth: int) -> None:
        if spot is not None and depth > spot.depth:
            return
        report.visited += 1
        if not isinstance(c, MlCertificate):
            report.fail(path, "not a certificate")
            return
        if c.rule == "r1":
            if c.generated or len(c.premises) != 1:
                report.fail(path, "r1 takes one premise")
                return
            prem = c.premises[0]
            msg = _check_r1(c, prem.conclusion)
            if msg is not None:
                report.fail(path, msg)
                return
            walk(prem, f"{path}.0", depth + 1)
            return
        if c.rule == "r2":
            p = c.principal
            if p.rel != "le" or p not in c.conclusion:
                report.fail(path, "principal missing or not le")
                return
            w = p.lhs
            if w.is_zero:
                if c.premises or c.generated:
                    report.fail(path, "zero takes no premises")
                return
            if c.generated:
                if spot is None:
                    raise KernelError(
                        "exhaustive verification is only meaningful for "
                        "finitely branching certificates; use SpotCheck")
                indices = [s for s in spot.samples if s in c.gen_index]
                if not indices:
                    report.fail(path, "no sample index fits the premise family")
                    return
            else:
                if not isinstance(w.index, Fin) or len(c.premises) != w.index.size:
                    report.fail(path, "one premise per subordinal")
                    return
                indices = range(w.index.size)
            for i in indices:
                try:
                    prem = c.premise_at(i)
                except RecursionError:
                    raise
                except Exception as e:
                    report.fail(f"{path}.{i}", f"premise generation failed: {e}")
                    continue
                msg = _check_r2_premise(c, i, prem.conclusion)
                if msg is not None:
                    report.fail(f"{path}.{i}", msg)
                    continue
                walk(prem, f"{path}.{i}", depth + 1)
            return
        report.fail(path, f"unknown rule {c.rule!r}")

    walk(cert, "root", 0)
    return report


# ---------------------------------------------------------------------------
# certificate builders for true finitary atoms


def _height(n: OrdName, cache: dict) -> int:
    hit = cache.get(n.ident)
    if hit is None:
        hit = 0 if n.is_zero else 1 + max(
            _height(n.child(i), cache) for i in range(n.index.size))
        cache[n.ident] = hit
    return hit


def _cert_le_atom(x: OrdName, y: OrdName, side: Sequent,
                  cache: dict) -> MlCertificate:
    if _height(x, cache) > _height(y, cache):
        raise KernelError(f"cannot derive {x!r} <= {y!r}")
    head = Atom(x, "le", y)
    concl = side | {head}
    if x.is_zero:
        return ml_r2(concl, head)
    prem = tuple(_cert_lt_atom(x.child(i), y, side, cache)
                 for i in range(x.index.size))
    return ml_r2(concl, head, premises=prem)


def _cert_lt_atom(x: OrdName, y: OrdName, side: Sequent,
                  cache: dict) -> MlCertificate:
    hx = _height(x, cache)
    if y.is_zero or hx >= _height(y, cache):
        raise KernelError(f"cannot derive {x!r} < {y!r}")
    n = next(i for i in range(y.index.size)
             if _height(y.child(i), cache) >= hx)
    head = Atom(x, "lt", y)
    inner = _cert_le_atom(x, y.child(n), side, cache)
    return ml_r1(side | {head}, head, n, inner)


def ml_le_refl_cert(a: OrdName) -> MlCertificate:
    """Certificate of the singleton sequent a <= a, finitary a."""
    return _cert_le_atom(a, a, frozenset(), {})


# ---------------------------------------------------------------------------
# the divergence pair


def ml_cert_exa123(u: BitSeq) -> MlCertificate:
    """Certificate of {a < b} for the bit-sequence pair a, b with
    a's members und(u_n) and b's members und(u_n + 1).

    Each generated premise consults finitely many bits: the derivation
    splits on the decidable test u_n <= u_0 rather than on any property of
    the whole sequence.  When u_n <= u_0 the premise compares und(u_n)
    against b's first member directly; otherwise u_n = 1 bounds every bit,
    and the premise routes through b's n-th member.  That case split is
    total for 0/1 sequences, which is how the certificate stays finite
    where the bounded comparison engine cannot decide the same judgment
    for an opaque tail.
    """
    a, b = eps_lpo(u)
    cache: dict = {}
    p_top = Atom(a, "lt", b)
    c0 = frozenset({p_top})
    v0 = b.child(0)
    q1 = Atom(a, "le", v0)
    c1 = c0 | {q1}

    def low_premise(n: int) -> MlCertificate:
        # sequent {a < b, und(u_n) < v0}
        x = und(u.at(n))
        if u.at(n) <= u.at(0):
            return _cert_lt_atom(x, v0, c0, cache)
        # u_n exceeds u_0: name that n and bound a by b's n-th member
        q_atom = Atom(x, "lt", v0)
        side = frozenset({q_atom})
        vn = b.child(n)
        inner = ml_r2(
            side | {Atom(a, "le", vn)}, Atom(a, "le", vn),
            gen=lambda m: _cert_lt_atom(und(u.at(m)), vn, side, cache))
        return ml_r1(side | {p_top}, p_top, n, inner)

    middle = ml_r2(c1, q1, gen=low_premise)
    return ml_r1(c0, p_top, 0, middle)
