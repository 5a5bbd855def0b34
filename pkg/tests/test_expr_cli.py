import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qstein.azb import AzbAlgebra
from qstein.cli import main, run
from qstein.expr import Add, Basis, ExprSyntaxError, Gen, Imag, Mul, Neg, Num, Pow, Sub, evaluate, parse, to_text

# --- parser --------------------------------------------------------------------


def test_parse_examples():
    assert parse("t*z") == Mul(Gen("t"), Gen("z"))
    node = parse("(1/2+1/3*i)*z^2*t")
    assert node == Mul(Mul(Add(Num(Fraction(1, 2)), Mul(Num(Fraction(1, 3)), Imag())), Pow(Gen("z"), 2)), Gen("t"))
    assert parse("zeta[1,-2]") == Basis("zeta", (1, -2))
    assert parse("-z+t-1") == Sub(Add(Neg(Gen("z")), Gen("t")), Num(Fraction(1)))


def test_precedence():
    assert parse("2*z^3") == Mul(Num(Fraction(2)), Pow(Gen("z"), 3))
    assert parse("z+t*z") == Add(Gen("z"), Mul(Gen("t"), Gen("z")))
    assert parse("z*t*z") == Mul(Mul(Gen("z"), Gen("t")), Gen("z"))


@pytest.mark.parametrize(
    "text,pos",
    [("z^-1", 2), ("z+", 2), ("(z", 2), ("z)", 1), ("w", 0), ("1/0", 2), ("d[1", 3), ("z^", 2), ("", 0)],
)
def test_syntax_errors(text, pos):
    with pytest.raises(ExprSyntaxError) as e:
        parse(text)
    assert e.value.position == pos
    assert e.value.expected


def atoms():
    return st.one_of(
        st.fractions(0, 20, max_denominator=7).map(Num),
        st.just(Imag()),
        st.sampled_from(["z", "zinv", "t"]).map(Gen),
        st.builds(Basis, st.sampled_from(["d", "zeta", "tau", "one"]), st.lists(st.integers(-5, 5), min_size=1, max_size=2).map(tuple)),
    )


def trees():
    return st.recursive(
        atoms(),
        lambda ch: st.one_of(
            st.builds(Add, ch, ch),
            st.builds(Sub, ch, ch),
            st.builds(Mul, ch, ch),
            st.builds(Pow, ch, st.integers(0, 4)),
            st.builds(Neg, ch),
        ),
        max_leaves=8,
    )




@settings(max_examples=1000)
@given(trees())
def test_round_trip(node):
    assert parse(to_text(node)) == node


@given(trees())
def test_print_is_stable(node):
    text = to_text(node)
    assert to_text(parse(text)) == text


@given(st.lists(st.sampled_from(["z", "zinv", "t"]), min_size=1, max_size=6), st.sampled_from(["2", "1/2", "i"]))
def test_evaluate_matches_word_product(word, q):
    from qstein.azb import GeneratorWord, normal_form
    from qstein.scalar import parse_scalar

    A = AzbAlgebra(parse_scalar(q))
    atoms_ = {"z": lambda: (1, 0), "zinv": lambda: (-1, 0), "t": lambda: (0, 1)}
    got = evaluate(parse("*".join(word)), A, atoms_)
    assert got == normal_form(parse_scalar(q), GeneratorWord(tuple(word)))


# --- commands --------------------------------------------------------------------


def cli(*argv, stdin=None, env=None):
    full_env = dict(os.environ)
    full_env.pop("QSTEIN_WINDOW", None)
    full_env.update(env or {})
    return subprocess.run(
        [sys.executable, "-m", "qstein.cli", *argv], input=stdin, capture_output=True, text=True, env=full_env
    )


def test_normalize_example():
    r = cli("normalize", "t*z", "--q", "1/2")
    assert r.returncode == 0
    assert json.loads(r.stdout) == {"basis": [[[1, 1], "1/2"]]}


def test_qbinom_example():
    assert run(["qbinom", "4", "2", "--q", "1/2"])[0] == "35/16"


FIXTURES = [
    (["normalize", "t*z", "--q", "1/2"], 0),
    (["coproduct", "t", "--q", "2"], 0),
    (["antipode", "t", "--q", "2"], 0),
    (["counit", "t+z"], 0),
    (["pair", "z*t^2", "zeta[1,2]", "--q", "2"], 0),
    (["qbinom", "6", "3", "--q", "i"], 0),
    (["fourier", "--map", "sharpZ", "d[2]-3*d[-1]"], 0),
    (["fourier", "--map", "cyclic:4", "d[1]"], 0),
    (["seminorm", "eval", "z^2+3*zinv", "--family", "NormC_OCx", "--params", "C=2"], 0),
    (["seminorm", "check-submult", "--family", "PDK", "--params", "D=4,K=2", "--q", "1/2", "--samples", "40"], 0),
    (["seminorm", "check-submult", "--family", "PDK", "--params", "D=4,K=1,weight=constant", "--q", "2"], 1),
    (["seminorm", "check-submult", "--family", "PDK", "--params", "D=2,K=2", "--q", "1/2"], 2),
    (["check-hopf", "--algebra", "azb", "--q", "i", "--window", "3"], 0),
    (["check-hopf", "--algebra", "FunZ", "--window", "3", "--pairing"], 0),
    (["check-qpair", "--q", "1/2"], 0),
    (["check-envelope", "--map", "sharpC", "--samples", "10", "--window", "4"], 0),
    (["check-reflexivity", "--q", "2", "--window", "2", "--samples", "20"], 0),
    (["envelope", "outer", "--set", "1,z,zinv"], 0),
    (["envelope", "inner", "--set", "1,3*z^2"], 0),
    (["envelope", "duality", "--f", "rCN(1,1)"], 0),
    (["envelope", "closure", "--f", "rCN(1,1)", "--g", "max(rCN(2,0),rCN(1,2))"], 0),
    (["envelope", "majorize", "--f", "rCN(1,3)"], 0),
    (["azb", "normalize", "t*z"], 0),
    (["normalize", "z^-1"], 2),
    (["normalize", "d[1]", "--algebra", "LaurentCx"], 2),
    (["frobnicate"], 2),
    (["qbinom", "3", "1", "--q", "0"], 2),
    (["envelope", "outer", "--set", "z"], 2),
]


@pytest.mark.parametrize("argv,code", FIXTURES, ids=[" ".join(a) for a, _ in FIXTURES])
def test_exit_codes(argv, code):
    assert main(argv) == code


def test_determinism():
    argv = ["coproduct", "z*t^3+2*t", "--q", "3/5+4/5*i"]
    a, b = cli(*argv), cli(*argv)
    assert a.returncode == 0 and a.stdout == b.stdout
    keys = [k for k, _ in json.loads(a.stdout)["tensor"]]
    assert keys == sorted(keys)


def test_stdin():
    r = cli("normalize", "-", "--q", "2", stdin="t*t*z\n")
    assert json.loads(r.stdout) == {"basis": [[[1, 2], "4"]]}


def test_window_env():
    # the dual unit is a windowed sum; its size follows QSTEIN_WINDOW
    small = cli("coproduct", "zeta[0,0]", "--algebra", "azb-dual", env={"QSTEIN_WINDOW": "1"})
    big = cli("coproduct", "zeta[0,0]", "--algebra", "azb-dual")
    assert len(json.loads(small.stdout)["tensor"]) == 3
    assert len(json.loads(big.stdout)["tensor"]) == 9


def test_error_payload():
    r = cli("normalize", "z^-1")
    assert r.returncode == 2
    assert json.loads(r.stdout)["status"] == "error"
