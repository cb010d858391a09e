"""Certificate kernel: constructors, verification, search."""

import pytest

from ordcalc import compare
from ordcalc.arith import add, mul, pow
from ordcalc.compare import Fuel, Judgment
from ordcalc.kernel import (Certificate, CertSearchError, Exhaustive,
                            KernelError, SpotCheck, contract, cut_left,
                            drop_left, eq_certs, filtering_eq_certs,
                            incompatible, le_cert, le_intro, le_of_lt_suc,
                            lt_cert, lt_intro, lt_intro_sel, lt_of_suc_le,
                            lt_suc_of_le, lt_to_le, refl, serialize,
                            suc_le_of_lt, sup_le_intro, sup_lt, trans_le_le,
                            trans_le_lt, trans_lt_le, verify, weaken, zero_le,
                            zero_lt)
from ordcalc.names import (BitSeq, Family, ZERO, eps_llpo, filtering, mk_node,
                           omega, suc, suc_list, sup_finite, und)

SPOT = SpotCheck(samples=(0, 1, 2), depth=64)


def ok(cert, policy=None) -> bool:
    return verify(cert, policy or Exhaustive()).ok


class TestRefl:
    def test_finitary_exhaustive(self):
        report = verify(refl(und(2)), Exhaustive())
        assert report.ok

    def test_natural_family_spot_checked(self):
        assert ok(refl(omega()), SpotCheck(samples=(0, 5, 17), depth=64))

    def test_conclusion_shape(self):
        c = refl(und(4)).conclusion
        assert c.kind == "le"
        assert c.lhs is und(4)
        assert c.rhs == (und(4),)

    def test_exhaustive_cannot_walk_a_generator(self):
        with pytest.raises(KernelError):
            verify(refl(omega()), Exhaustive())


class TestZeroRules:
    def test_zero_le_anything(self):
        assert ok(zero_le((ZERO,)))
        assert ok(zero_le((omega(), und(2))), SPOT)

    def test_zero_lt_node(self):
        assert ok(zero_lt((omega(),)), SPOT)

    def test_zero_lt_zero_rejected(self):
        with pytest.raises(KernelError):
            zero_lt((ZERO,))
        with pytest.raises(KernelError):
            zero_lt((ZERO, ZERO))


class TestLeIntro:
    def test_finitary_premises(self):
        cert = le_cert(und(2), (und(3),))
        assert ok(cert)

    def test_omega_below_one_plus_omega(self):
        cert = le_cert(omega(), (add(und(1), omega()),))
        assert ok(cert, SPOT)

    def test_llpo_split_bound(self):
        # the parity components jointly dominate the full sequence
        v = BitSeq.opaque([0, 1, 0], tail=lambda n: 0)
        eps, e1, e2 = eps_llpo(v)
        s = sup_finite([e1, e2])

        def prem(n):
            # bit n reappears among the interleaved children of s: at the
            # parity-matching component's copy, no later than position 2n+2
            x = eps.child(n)
            k = next(k for k in range(2 * n + 3)
                     if s.child(k).ident == x.ident)
            return lt_intro_sel(x, (s,), ((k,),), refl(x))

        cert = le_intro(eps, (s,), gen=prem)
        assert ok(cert, SpotCheck(samples=(0, 1, 2, 3, 6), depth=64))

    def test_premise_lhs_must_match_child(self):
        good = lt_cert(ZERO, (und(2),))
        with pytest.raises(KernelError):
            le_intro(und(2), (und(2),), premises=(good, good))
        bad = verify(le_intro(und(1), (ZERO,),
                              premises=(lt_intro_sel(ZERO, (und(1),), ((0,),),
                                                     zero_le((ZERO,))),)))
        assert not bad.ok  # premise bounds by the wrong name


class TestLtIntro:
    def test_prefix_of_one(self):
        cert = lt_intro(und(1), (und(2),), 1, refl(und(1)))
        assert ok(cert)

    def test_sup_strictly_under_suc_list(self):
        a, b = und(1), und(2)
        s = sup_finite([a, b])
        g = suc_list([a, b])
        cert = lt_intro(s, (g,), 2, le_cert(s, (a, b)))
        assert ok(cert)

    def test_omega_under_omega_plus_omega(self):
        cert = lt_intro(omega(), (add(omega(), omega()),), 1, refl(omega()))
        assert ok(cert, SPOT)

    def test_empty_selection_rejected(self):
        with pytest.raises(KernelError):
            lt_intro_sel(ZERO, (und(1),), ((),), zero_le(()))


class TestTransitivity:
    def test_le_chain(self):
        cert = trans_le_le(le_cert(und(1), (und(2),)),
                           le_cert(und(2), (und(3),)))
        assert cert.conclusion == Judgment("le", und(1), (und(3),))
        assert ok(cert)

    def test_lt_then_le(self):
        p = lt_cert(und(5), (omega(),))
        q = le_cert(omega(), (add(und(1), omega()),))
        cert = trans_lt_le(p, q)
        assert cert.conclusion.kind == "lt"
        assert ok(cert, SPOT)

    def test_le_then_lt(self):
        cert = trans_le_lt(le_cert(und(2), (und(2),)),
                           lt_cert(und(2), (und(4),)))
        assert ok(cert)

    def test_mismatched_middle_rejected(self):
        with pytest.raises(KernelError):
            trans_le_le(le_cert(und(1), (und(2),)),
                        le_cert(und(3), (und(4),)))


class TestStructural:
    def test_weaken_extends_bounds(self):
        cert = weaken(refl(und(2)), (omega(),))
        assert cert.conclusion.rhs == (und(2), omega())
        assert ok(cert, SPOT)

    def test_contract_merges_duplicates(self):
        doubled = weaken(refl(und(1)), (und(1),))
        cert = contract(doubled)
        assert cert.conclusion.rhs == (und(1),)
        assert ok(cert)

    def test_lt_to_le(self):
        cert = lt_to_le(lt_cert(und(1), (und(3),)))
        assert cert.conclusion == Judgment("le", und(1), (und(3),))
        assert ok(cert)


class TestSucRules:
    def test_lt_suc_of_le(self):
        cert = lt_suc_of_le(refl(und(2)))
        assert cert.conclusion == Judgment("lt", und(2), (und(3),))
        assert ok(cert)

    def test_round_trip_on_conclusions(self):
        p = refl(und(2))
        again = le_of_lt_suc(lt_suc_of_le(p))
        assert again.conclusion == p.conclusion
        assert ok(again)

    def test_suc_le_of_lt(self):
        cert = suc_le_of_lt(lt_cert(und(1), (omega(),)))
        assert cert.conclusion == Judgment("le", und(2), (omega(),))
        assert ok(cert, SPOT)

    def test_lt_of_suc_le(self):
        p = suc_le_of_lt(lt_cert(und(3), (omega(),)))
        cert = lt_of_suc_le(p)
        assert cert.conclusion == Judgment("lt", und(3), (omega(),))
        assert ok(cert, SPOT)

    def test_needs_a_successor_bound(self):
        with pytest.raises(KernelError):
            le_of_lt_suc(lt_cert(und(1), (sup_finite([und(2), und(2)]),)))


class TestSupRules:
    def test_sup_le_intro(self):
        s = sup_finite([und(1), und(2)])
        cert = sup_le_intro(s, (und(1), und(2)), (und(2),),
                            premises=(le_cert(und(1), (und(2),)),
                                      refl(und(2))))
        assert ok(cert)

    def test_sup_lt(self):
        cert = sup_lt(lt_cert(und(1), (und(3),)), lt_cert(und(2), (und(3),)))
        assert cert.conclusion.lhs is sup_finite([und(1), und(2)])
        assert ok(cert)

    def test_cut_left(self):
        p = lt_cert(und(1), (und(2),))
        q = le_cert(und(2), (sup_finite([und(2), und(1)]),))
        cert = cut_left(p, q, und(2))
        assert cert.conclusion == Judgment("le", und(2), (und(2),))
        assert ok(cert)

    def test_drop_left_needs_the_right_sup(self):
        with pytest.raises(KernelError):
            drop_left(lt_cert(und(1), (und(3),)), omega())


class TestVerify:
    def test_exhaustive_counts_nodes(self):
        report = verify(refl(und(3)), Exhaustive())
        assert report.ok
        assert report.visited >= 4

    def test_tampered_conclusion_fails_with_path(self):
        cert = le_cert(und(1), (und(2),))
        cert.conclusion = Judgment("le", und(5), (und(2),))
        report = verify(cert, Exhaustive())
        assert not report.ok
        assert report.failures and isinstance(report.failures[0][0], str)

    def test_forged_node_fails(self):
        forged = Certificate("le_intro", Judgment("le", und(3), (und(1),)))
        assert not verify(forged).ok

    def test_incompatible_conclusions_detected(self):
        p = refl(und(1))
        q = Certificate("lt_intro", Judgment("lt", und(1), (und(1),)),
                        payload=((0,),))
        assert incompatible(p, q)
        assert not verify(q).ok

    def test_spot_check_on_omega_le_one_plus_omega(self):
        cert = le_cert(omega(), (add(und(1), omega()),))
        assert ok(cert, SpotCheck(samples=(0, 7, 31), depth=64))


class TestSearch:
    def test_equal_names_both_ways(self):
        w1 = mul(omega(), und(1))
        fwd, back = eq_certs(w1, omega())
        assert ok(fwd, SPOT) and ok(back, SPOT)

    def test_strict_below_power(self):
        assert ok(lt_cert(omega(), (pow(omega(), omega()),)), SPOT)

    def test_suc_omega_below_doubled(self):
        assert ok(le_cert(suc(omega()), (mul(omega(), und(2)),)), SPOT)

    def test_refuses_engine_refuted_goal(self):
        with pytest.raises(CertSearchError):
            lt_cert(omega(), (omega(),))
        with pytest.raises(CertSearchError):
            le_cert(add(omega(), omega()), (omega(),))

    def test_refuses_unwitnessed_finitary_bound(self):
        # no finite sweep can warrant omega below a natural
        with pytest.raises(CertSearchError):
            le_cert(omega(), (und(40),))

    def test_refuses_family_with_a_bad_member_inside_the_sweep(self):
        fam = Family.from_generator(
            lambda n: suc(omega()) if n == 22 else und(1))
        with pytest.raises(CertSearchError):
            le_cert(mk_node(fam), (omega(),))

    def test_refuses_product_order_reversal(self):
        with pytest.raises(CertSearchError):
            le_cert(mul(omega(), und(3)), (mul(omega(), und(2)),))

    def test_refuses_power_below_product(self):
        with pytest.raises(CertSearchError):
            le_cert(pow(omega(), omega()), (mul(omega(), und(2)),))

    def test_budget_exhaustion_reported(self):
        with pytest.raises(CertSearchError):
            le_cert(mul(omega(), und(2)), (add(omega(), omega()),), steps=40)

    def test_strict_product_identities_refused(self):
        # the two names are equal, so neither strict direction can hold
        w2 = mul(omega(), und(2))
        wpw = add(omega(), omega())
        with pytest.raises(CertSearchError):
            lt_cert(w2, (wpw,))
        with pytest.raises(CertSearchError):
            lt_cert(wpw, (w2,))


class TestFilteringCerts:
    def test_omega_filtering_is_omega(self):
        fwd, back = filtering_eq_certs(omega())
        policy = SpotCheck(samples=(0, 1, 2, 6), depth=64)
        assert ok(fwd, policy) and ok(back, policy)

    def test_finitary_filtering(self):
        a = suc_list([und(1), und(2)])
        fwd, back = filtering_eq_certs(a)
        assert ok(fwd) and ok(back)

    def test_search_also_reaches_filtering_below_original(self):
        cert = le_cert(filtering(omega()), (omega(),))
        assert ok(cert, SPOT)

    def test_zero_rejected(self):
        with pytest.raises(KernelError):
            filtering_eq_certs(ZERO)


class TestSerialize:
    def test_finite_certificate_lists_every_node(self):
        text = serialize(le_cert(und(2), (und(3),)))
        lines = text.strip().split("\n")
        assert lines[0].startswith("0: ")
        assert any("le_intro" in line for line in lines)
        assert text.endswith("\n")

    def test_generator_certificates_rejected(self):
        with pytest.raises(KernelError):
            serialize(refl(omega()))


class TestEngineAgreement:
    def test_certified_claims_never_engine_contradicted(self):
        claims = [
            le_cert(und(2), (und(3),)),
            le_cert(omega(), (add(und(1), omega()),)),
            lt_cert(omega(), (add(omega(), omega()),)),
        ]
        for cert in claims:
            j = cert.conclusion
            rel = compare.le if j.kind == "le" else compare.lt
            assert not rel(j.lhs, j.rhs, Fuel(width=32, depth=128)).is_false
