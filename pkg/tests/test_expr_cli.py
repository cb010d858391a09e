"""Surface syntax and the command line driver."""

import pathlib
import random
import subprocess
import sys

import pytest

from ordcalc import arith
from ordcalc.expr import (BinOp, Call, Const, ExprError, Num, format_expr,
                          kernel_eligible, lower, parse_expr, parse_name,
                          parse_sequent)
from ordcalc.names import omega, suc_list, und

GOLDEN = pathlib.Path(__file__).parent / "golden"

# command line and expected exit code for every golden transcript
GOLDEN_CASES = {
    "cmp_2_3.txt": (["cmp", "2", "3"], 0),
    "cmp_w_w.txt": (["cmp", "w", "w"], 0),
    "cmp_w_1pw.txt": (["cmp", "w", "1+w"], 3),
    "cmp_w_1pw_kernel.txt": (["cmp", "w", "1+w", "--kernel"], 0),
    "cmp_1_2_emit.txt": (["cmp", "1", "2", "--emit-cert"], 0),
    "tree_3.txt": (["tree", "3", "--mu-bound", "4"], 0),
    "tree_w.txt": (["tree", "w", "--mu-bound", "3"], 0),
    "demo_lpo_opaque.txt": (["demo", "lpo", "--prefix", "001",
                             "--tail", "opaque"], 0),
    "demo_llpo_const.txt": (["demo", "llpo", "--prefix", "0010",
                             "--tail", "const"], 0),
    "ml_prove_linear.txt": (["ml-prove",
                             "suc(0) < suc(suc(0)), suc(suc(0)) <= suc(0)"], 0),
    "check_laws_seed7.txt": (["check-laws", "--seed", "7", "--cases", "10"], 0),
}


def run_cli(args):
    r = subprocess.run([sys.executable, "-m", "ordcalc"] + list(args),
                       capture_output=True, text=True)
    return r.returncode, r.stdout, r.stderr


def _random_expr(rng: random.Random, depth: int):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice([Num(rng.randint(0, 9)), Const("w")])
    pick = rng.random()
    if pick < 0.45:
        op = rng.choice(["+", "+", "*", "^"])
        return BinOp(op, _random_expr(rng, depth - 1),
                     _random_expr(rng, depth - 1))
    if pick < 0.75:
        args = tuple(_random_expr(rng, depth - 1)
                     for _ in range(rng.randint(1, 3)))
        return Call(rng.choice(["suc", "sup"]), args)
    if pick < 0.85:
        return Call("ack", tuple(_random_expr(rng, 0) for _ in range(3)))
    return Const("eps0")


def _numeral_bound(e):
    """Value of a pure numeral subtree, None when w or eps0 occurs.

    Arithmetic on bare numerals builds the full natural eagerly, so the
    corpus must not contain numeral towers deeper than the stack allows.
    """
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Const):
        return None
    if isinstance(e, BinOp):
        l, r = _numeral_bound(e.lhs), _numeral_bound(e.rhs)
        if l is None or r is None:
            return None
        return l + r if e.op == "+" else l * r if e.op == "*" else l ** r
    vals = [_numeral_bound(a) for a in e.args]
    if any(v is None for v in vals):
        return None
    # ack over numerals outgrows any stack; treat it as always too deep
    return 10 ** 9 if e.fn == "ack" else max(vals) + 1


def _shallow(e) -> bool:
    b = _numeral_bound(e)
    if b is not None:
        return b <= 200
    kids = (e.args if isinstance(e, Call)
            else (e.lhs, e.rhs) if isinstance(e, BinOp) else ())
    return all(_shallow(k) for k in kids)


def corpus(size: int = 100):
    rng = random.Random(7)
    fixed = ["w^w + w*3 + 2", "suc(0)", "ack(w,w,1)", "sup(w, 1)",
             "suc(1, 2)", "(w+1)*2", "w^(w^w)", "eps0"]
    out = [parse_expr(t) for t in fixed]
    while len(out) < size:
        e = _random_expr(rng, 3)
        if _shallow(e):
            out.append(e)
    return out


class TestRoundTrip:
    def test_corpus_parses_back_to_itself(self):
        for e in corpus():
            text = format_expr(e)
            again = parse_expr(text)
            assert again == e, text
            assert format_expr(again) == text

    def test_lowering_is_reproducible(self):
        # sup over a family with an unbounded member builds a fresh
        # generator node each call; everything else interns or memoizes
        def stable(e):
            if isinstance(e, Call) and e.fn == "sup":
                if not all(lower(a).is_finitary for a in e.args):
                    return False
            kids = (e.args if isinstance(e, Call)
                    else (e.lhs, e.rhs) if isinstance(e, BinOp) else ())
            return all(stable(k) for k in kids)

        checked = 0
        for e in corpus(30):
            if stable(e):
                checked += 1
                assert lower(e) is lower(parse_expr(format_expr(e)))
        assert checked >= 15


class TestParse:
    def test_suc_zero_is_one(self):
        assert parse_name("suc(0)") is und(1)

    def test_ack_omega_omega_one_is_the_canonical_constant(self):
        assert parse_name("ack(w,w,1)") is arith.eps0()

    def test_multi_argument_suc(self):
        assert parse_name("suc(1, 2)") is suc_list([und(1), und(2)])

    def test_power_is_right_associative(self):
        assert parse_expr("w^w^w") == parse_expr("w^(w^w)")

    def test_errors_carry_a_column(self):
        with pytest.raises(ExprError) as info:
            parse_expr("w + + 1")
        assert info.value.column == 5

    def test_unknown_name_rejected(self):
        with pytest.raises(ExprError):
            parse_expr("omega")

    def test_small_numeral_towers_lower(self):
        assert parse_name("2^2^2") is und(16)
        assert parse_name("ack(2, 2, 1)") is not None

    def test_deep_numeral_towers_are_refused(self):
        for text in ("9^9", "5^8 + w", "w + 5000", "ack(3, 3, 3)",
                     "1^5000", "w*600"):
            with pytest.raises(ValueError, match="too deep"):
                parse_name(text)

    def test_bare_numerals_have_no_limit(self):
        # und builds iteratively; only arithmetic walks the spine
        assert parse_name("5000") is und(5000)

    def test_sequents(self):
        triples = parse_sequent("suc(0) < w, 0 <= 1")
        assert [(a.ident, rel, b.ident) for a, rel, b in triples] == [
            (und(1).ident, "lt", omega().ident),
            (und(0).ident, "le", und(1).ident)]


class TestKernelEligible:
    def test_the_settled_fragment(self):
        for text in ("w", "3", "1+w", "w+w", "w*2", "suc(w)", "sup(w, w+1)",
                     "(w+1)*3", "w*2 + suc(1)"):
            assert kernel_eligible(parse_expr(text)), text

    def test_outside_the_fragment(self):
        for text in ("w^w", "eps0", "ack(1,1,1)", "w*w", "2*w * w",
                     "suc(w^2)"):
            assert not kernel_eligible(parse_expr(text)), text


class TestCliGolden:
    @pytest.mark.parametrize("fname", sorted(GOLDEN_CASES))
    def test_matches_frozen_transcript(self, fname):
        args, want_exit = GOLDEN_CASES[fname]
        code, out, _ = run_cli(args)
        assert code == want_exit
        assert out == (GOLDEN / fname).read_text()

    def test_repeat_runs_are_byte_identical(self):
        for fname in ("cmp_w_1pw_kernel.txt", "tree_w.txt",
                      "demo_lpo_opaque.txt"):
            args, _ = GOLDEN_CASES[fname]
            first = run_cli(args)
            second = run_cli(args)
            assert first == second


class TestCliContract:
    def test_syntax_error_exits_2(self):
        code, _, err = run_cli(["cmp", "w +", "1"])
        assert code == 2
        assert "error" in err

    def test_natural_sequent_exits_2(self):
        code, _, err = run_cli(["ml-prove", "w <= w"])
        assert code == 2
        assert "finitary" in err

    def test_bad_prefix_exits_2(self):
        code, _, _ = run_cli(["demo", "lpo", "--prefix", "abc"])
        assert code == 2

    def test_numeral_tower_is_refused_not_crashed(self):
        code, _, err = run_cli(["cmp", "5^8 + w", "w"])
        assert code == 2
        assert "too deep" in err

    def test_unknown_without_kernel_exits_3(self):
        code, out, _ = run_cli(["cmp", "w*2", "w+w"])
        assert code == 3
        assert out.endswith("verdict unknown\n")

    def test_power_comparison_stays_with_the_engine(self):
        # outside the recognized fragment --kernel must not upgrade
        code, out, _ = run_cli(["cmp", "w^w", "w*2", "--kernel"])
        assert code == 3
        assert out.endswith("verdict unknown\n")

    def test_emit_cert_without_a_verdict_exits_3(self):
        code, _, err = run_cli(["cmp", "w", "1+w", "--emit-cert"])
        assert code == 3
        assert "certificate" in err

    def test_law_failure_would_exit_nonzero(self):
        # restricting to a real law keeps exit 0; the failure branch is
        # exercised through run_laws directly elsewhere
        code, out, _ = run_cli(["check-laws", "--cases", "3",
                                "--law", "refl-antisym"])
        assert code == 0
        assert out == "PASS 3/3\n"
