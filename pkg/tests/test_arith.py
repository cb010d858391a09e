"""Ordinal arithmetic: addition, sequential sums, products, powers, iteration."""

import pytest
from hypothesis import given, settings

from ordcalc import arith, compare, kernel, oracle
from ordcalc.arith import END, LinearIndexOrder, acko, add, eps0, mul, pow, seq_sum
from ordcalc.compare import Ordering, cmp_finitary
from ordcalc.names import Family, Fin, NAT, ZERO, omega, sup_finite, und

from .conftest import finitary_names, seeded_pairs


def _le(a, b) -> bool:
    return cmp_finitary(a, b) in (Ordering.LT, Ordering.EQ)


def _lt(a, b) -> bool:
    return cmp_finitary(a, b) is Ordering.LT


def _eq(a, b) -> bool:
    return cmp_finitary(a, b) is Ordering.EQ


# the finitary law battery; each entry takes a name triple
LAWS_33 = [
    ("add_assoc",
     lambda a, b, c: _eq(add(add(a, b), c), add(a, add(b, c)))),
    ("add_monotone",
     # a <= a+c and b <= b+c hold by construction
     lambda a, b, c: _le(add(a, b), add(add(a, c), add(b, c)))),
    ("add_cancel_le",
     lambda a, b, c: _le(add(a, b), add(a, c)) == _le(b, c)),
    ("add_cancel_lt",
     lambda a, b, c: _lt(add(a, b), add(a, c)) == _lt(b, c)),
    ("mul_assoc",
     lambda a, b, c: _eq(mul(mul(a, b), c), mul(a, mul(b, c)))),
    ("mul_left_distributes",
     lambda a, b, c: _eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c)))),
    ("mul_cancel_le",
     # 1 <= 1+a forces the hypothesis on every triple
     lambda a, b, c: _le(mul(add(und(1), a), b), mul(add(und(1), a), c))
     == _le(b, c)),
    ("mul_cancel_lt",
     lambda a, b, c: _lt(mul(add(und(1), a), b), mul(add(und(1), a), c))
     == _lt(b, c)),
]


def seq_sum_pointwise_monotone(a, b, c) -> bool:
    """Raising one member never lowers any partial sum."""
    lows = (a, b, c)
    highs = (a, add(b, und(1)), add(c, a))
    order = LinearIndexOrder(Fin(3))
    for cut in range(4):
        low = seq_sum(order, Family.from_children(lows), cut)
        high = seq_sum(order, Family.from_children(highs), cut)
        if not _le(low, high):
            return False
    return True


class TestAdd:
    def test_naturals_add(self):
        assert _eq(add(und(2), und(3)), und(5))

    @given(finitary_names())
    def test_right_zero_is_identity(self, a):
        assert add(a, ZERO) is a

    @given(finitary_names())
    def test_left_zero_is_identity(self, a):
        assert _eq(add(ZERO, a), a)

    def test_one_plus_omega_is_omega(self):
        fwd, back = kernel.eq_certs(add(und(1), omega()), omega())
        policy = kernel.SpotCheck(samples=(0, 1, 2, 7), depth=64)
        assert kernel.verify(fwd, policy).ok
        assert kernel.verify(back, policy).ok

    @given(finitary_names())
    def test_one_plus_alpha_differs_on_finitary(self, a):
        # omega <= alpha fails here, so 1 + alpha must exceed alpha
        assert _lt(a, add(und(1), a))


class TestSeqSum:
    def test_zero_members_sum_to_zero(self):
        betas = Family.from_children([ZERO, ZERO, ZERO])
        assert seq_sum(LinearIndexOrder(Fin(3)), betas, END) is ZERO

    def test_three_ones(self):
        betas = Family.from_children([und(1)] * 3)
        total = seq_sum(LinearIndexOrder(Fin(3)), betas, END)
        assert _eq(total, und(3))

    def test_pair_matches_add(self):
        betas = Family.from_children([und(2), und(3)])
        total = seq_sum(LinearIndexOrder(Fin(2)), betas, END)
        assert _eq(total, add(und(2), und(3)))

    def test_cut_must_stay_inside_carrier(self):
        betas = Family.from_children([und(1)])
        with pytest.raises(ValueError):
            seq_sum(LinearIndexOrder(Fin(1)), betas, 5)

    @given(finitary_names(), finitary_names(), finitary_names())
    @settings(max_examples=30)
    def test_pointwise_monotone(self, a, b, c):
        assert seq_sum_pointwise_monotone(a, b, c)


class TestMul:
    def test_naturals_multiply(self):
        assert _eq(mul(und(2), und(3)), und(6))

    @given(finitary_names())
    def test_one_is_neutral(self, a):
        assert _eq(mul(a, und(1)), a)
        assert _eq(mul(und(1), a), a)

    @given(finitary_names())
    def test_zero_annihilates(self, a):
        assert mul(a, ZERO) is ZERO
        assert mul(ZERO, a) is ZERO

    def test_omega_doubled_is_omega_plus_omega(self):
        w2 = mul(omega(), und(2))
        wpw = add(omega(), omega())
        fwd, back = kernel.eq_certs(w2, wpw)
        policy = kernel.SpotCheck(samples=(0, 1, 2), depth=64)
        assert kernel.verify(fwd, policy).ok
        assert kernel.verify(back, policy).ok


class TestPow:
    def test_naturals_exponentiate(self):
        assert _eq(pow(und(2), und(3)), und(8))

    @given(finitary_names())
    def test_zero_exponent_gives_one(self, a):
        assert pow(a, ZERO) is und(1)

    def test_one_to_the_omega_is_one(self):
        p = pow(und(1), omega())
        # every subordinal of p is zero by the multiplication shortcut, so
        # the generated premise is warranted for the whole index range
        fwd = kernel.le_intro(p, (und(1),),
                              gen=lambda n: kernel.zero_lt((und(1),)))
        back = kernel.le_cert(und(1), (p,))
        policy = kernel.SpotCheck(samples=(0, 3, 17), depth=64)
        assert kernel.verify(fwd, policy).ok
        assert kernel.verify(back, policy).ok


class TestAcko:
    @given(finitary_names(), finitary_names())
    @settings(max_examples=30)
    def test_zero_steps_add(self, a, b):
        assert acko(a, b, ZERO) is add(a, b)

    @given(finitary_names())
    def test_zero_base_returns_start(self, a):
        assert acko(a, ZERO, und(2)) is a

    def test_two_two_one(self):
        assert oracle.val(acko(und(2), und(2), und(1))) == 6

    def test_eps0_is_a_natural_family(self):
        e = eps0()
        assert e.index is NAT
        assert eps0() is e


class TestLawBattery:
    def test_each_law_on_seeded_triples(self):
        triples = [
            (oracle.gen_finitary(3 * i + 50_000),
             oracle.gen_finitary(3 * i + 50_001),
             oracle.gen_finitary(3 * i + 50_002))
            for i in range(40)
        ]
        for name, law in LAWS_33:
            bad = [t for t in triples if not law(*t)]
            assert not bad, f"{name} fails on {bad[0]!r}"


class TestValuationHomomorphism:
    def test_operations_project_to_naturals(self):
        for a, b in seeded_pairs(60, salt=31_000):
            assert oracle.val(add(a, b)) == oracle.val(a) + oracle.val(b)
            assert oracle.val(mul(a, b)) == oracle.val(a) * oracle.val(b)
            assert oracle.val(pow(a, b)) == oracle.val(a) ** oracle.val(b)
