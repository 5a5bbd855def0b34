"""Command-line interface: ``qstein <command> ...``.

Every command prints one JSON document on stdout.  Exact scalars are
printed in the ``a/b+c/d*i`` text form, float results as decimal strings
with 12 significant digits.  Exit status is 0 when every check passes, 1
when a check finds a violation and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import re
import sys
from fractions import Fraction

from . import algebras as alg_mod
from . import envelope as env
from . import seminorm as sn
from .algebras import GradedElem, TensorElem, check_hopf_axioms, check_pairing_duality
from .azb import AzbAlgebra, AzbDual, azb_dual_pair, classical_limit_check, skew_iso_check
from .expr import AtomError, ExprSyntaxError, evaluate, parse
from .qcomb import q_binomial
from .scalar import GaussianRational, as_q, format_scalar, parse_scalar
from .skew import charges_quantum_pair, check_quantum_pair, laurent_quantum_pair
from .transform import (
    apply,
    map_by_name,
    verify_am_envelope,
    verify_azb_reflexivity,
    verify_hopf_homomorphism,
    verify_pairing_coherence,
)

EXIT_OK, EXIT_VIOLATION, EXIT_ERROR = 0, 1, 2

COMMANDS = (
    "normalize",
    "coproduct",
    "antipode",
    "counit",
    "pair",
    "seminorm",
    "qbinom",
    "fourier",
    "check-hopf",
    "check-qpair",
    "check-envelope",
    "check-reflexivity",
    "envelope",
)


class CommandError(Exception):
    pass


# formatting ------------------------------------------------------------------------


def fmt(c) -> str:
    if isinstance(c, GaussianRational):
        return format_scalar(c)
    if isinstance(c, Fraction):
        return format_scalar(GaussianRational(c))
    if isinstance(c, complex):
        re_, im = f"{c.real:.12g}", f"{abs(c.imag):.12g}"
        if c.imag == 0:
            return re_
        return f"{re_}{'-' if c.imag < 0 else '+'}{im}*i"
    if isinstance(c, float):
        return f"{c:.12g}"
    return str(c)


def _index(i):
    return list(i) if isinstance(i, tuple) else i


def basis_json(u: GradedElem) -> dict:
    return {"basis": [[_index(i), fmt(c)] for i, c in u.items()]}


def tensor_json(x: TensorElem) -> dict:
    return {"tensor": [[[_index(i) for i in key], fmt(c)] for key, c in x.items()]}


def report_json(rep, limit: int = 20) -> dict:
    return {
        "status": "ok" if rep.ok else "violation",
        "name": rep.name,
        "checked": rep.checked,
        "failures": [[str(x) for x in f] for f in rep.failures[:limit]],
        "failure_count": len(rep.failures),
    }


# algebra selection ---------------------------------------------------------------


def _algebra(tag: str, q):
    """``(algebra, atom table)`` for an ``--algebra`` value."""
    low = tag.lower()
    if low == "azb":
        return AzbAlgebra(q), {"z": lambda: (1, 0), "zinv": lambda: (-1, 0), "t": lambda: (0, 1)}
    if low in ("azb-dual", "azbdual"):
        return AzbDual(q), {"zeta": lambda n, k=0: (n, k)}
    a = alg_mod.algebra_by_tag(tag)
    name = a.name
    if name == "LaurentCx":
        atoms = {"z": lambda: 1, "zinv": lambda: -1}
    elif name == "PolyC":
        atoms = {"t": lambda: 1}
    elif name == "ChargesZ" or name.startswith("CyclicCharges"):
        atoms = {"d": lambda n: n}
    elif name == "FunZ" or name.startswith("CyclicFun"):
        atoms = {"one": lambda n: n}
    elif name == "CurrentsCx":
        atoms = {"zeta": lambda n: n}
    elif name == "CurrentsC":
        atoms = {"tau": lambda k: k}
    else:
        atoms = {}
    return a, atoms


def _read(text: str) -> str:
    return sys.stdin.read().strip() if text == "-" else text


def _elem(text: str, tag: str, q, window: int) -> GradedElem:
    a, atoms = _algebra(tag, q)
    return evaluate(parse(_read(text)), a, atoms, window)


# commands ---------------------------------------------------------------------------


def cmd_normalize(args):
    return basis_json(_elem(args.expr, args.algebra, args.q, args.window)), EXIT_OK


def cmd_coproduct(args):
    a, _ = _algebra(args.algebra, args.q)
    return tensor_json(a.coproduct(_elem(args.expr, args.algebra, args.q, args.window), args.window)), EXIT_OK


def cmd_antipode(args):
    a, _ = _algebra(args.algebra, args.q)
    return basis_json(a.antipode(_elem(args.expr, args.algebra, args.q, args.window))), EXIT_OK


def cmd_counit(args):
    a, _ = _algebra(args.algebra, args.q)
    return {"value": fmt(a.counit(_elem(args.expr, args.algebra, args.q, args.window)))}, EXIT_OK


def cmd_pair(args):
    tag = args.algebra
    if tag.lower() == "azb":
        dp, left, right = azb_dual_pair(args.q), "azb", "azb-dual"
    else:
        dp = alg_mod.dual_pair_by_tag(tag)
        left, right = dp.primal.name, dp.dual.name
    u = _elem(args.u, left, args.q, args.window)
    a = _elem(args.a, right, args.q, args.window)
    return {"value": fmt(dp.pair(u, a))}, EXIT_OK


def cmd_qbinom(args):
    if args.n < 0:
        raise CommandError("n must be >= 0")
    return fmt(q_binomial(args.n, args.k, args.q)), EXIT_OK


def cmd_fourier(args):
    m = map_by_name(args.map)
    src = m.source.name
    u = _elem(args.expr, src, args.q, args.window)
    return basis_json(apply(m, u)), EXIT_OK


def _check_one(rep):
    out = report_json(rep)
    return out, EXIT_OK if rep.ok else EXIT_VIOLATION


def _pair_containing(alg):
    """The dual pair with ``alg`` on one side."""
    tags = list(alg_mod.ALL_DUAL_PAIR_TAGS)
    m = re.search(r"\((\d+)\)", alg.name)
    if m:
        tags.append(f"Cyclic({m.group(1)})")
    for tag in tags:
        dp = alg_mod.dual_pair_by_tag(tag)
        if alg.name in (dp.primal.name, dp.dual.name):
            return dp
    raise CommandError(f"no dual pair for {alg.name}")


def cmd_check_hopf(args):
    tag = args.algebra.lower()
    if tag == "azb":
        rep = check_hopf_axioms(AzbAlgebra(args.q), args.window)
    elif tag in ("azb-dual", "azbdual"):
        rep = check_hopf_axioms(AzbDual(args.q), args.window, assoc_window=min(args.window, 3))
    elif tag == "skew":
        rep = check_hopf_axioms(laurent_quantum_pair(args.q).skew(), args.window, assoc_window=min(args.window, 3))
    else:
        rep = check_hopf_axioms(alg_mod.algebra_by_tag(args.algebra), args.window)
    out, code = _check_one(rep)
    if args.pairing is not None:
        if tag == "azb":
            prep = check_pairing_duality(azb_dual_pair(args.q), args.window)
        elif args.pairing:
            prep = check_pairing_duality(alg_mod.dual_pair_by_tag(args.pairing), args.window)
        else:
            prep = check_pairing_duality(_pair_containing(alg_mod.algebra_by_tag(args.algebra)), args.window)
        out = {"status": "ok" if rep.ok and prep.ok else "violation", "axioms": out, "pairing": report_json(prep)}
        code = EXIT_OK if rep.ok and prep.ok else EXIT_VIOLATION
    return out, code


def cmd_check_qpair(args):
    results = {
        "laurent": check_quantum_pair(laurent_quantum_pair(args.q), args.window),
        "charges": check_quantum_pair(charges_quantum_pair(args.q), args.window),
        "skew_iso": skew_iso_check(args.q, min(args.window, 3)),
    }
    if as_q(args.q).value == 1:
        results["classical_limit"] = classical_limit_check(min(args.window, 3))
    ok = all(results.values())
    return {"status": "ok" if ok else "violation", **results}, EXIT_OK if ok else EXIT_VIOLATION


def cmd_check_envelope(args):
    m = map_by_name(args.map)
    reps = [verify_hopf_homomorphism(m, args.window, args.tol)]
    if not m.name.startswith("SharpCyclic"):
        reps.append(verify_am_envelope(m, window=args.window, samples=args.samples))
    if m.name in ("SharpZ", "SharpCx"):
        reps.append(verify_pairing_coherence("Z", args.window))
    elif m.name == "SharpC":
        reps.append(verify_pairing_coherence("C", args.window))
    ok = all(r.ok for r in reps)
    out = {"status": "ok" if ok else "violation", "reports": [report_json(r) for r in reps]}
    return out, EXIT_OK if ok else EXIT_VIOLATION


def cmd_check_reflexivity(args):
    return _check_one(verify_azb_reflexivity(args.q, args.window, samples=args.samples, tol=args.tol))


# seminorms ---------------------------------------------------------------------------


def _parse_params(text: str) -> dict:
    """``"C=2,K=1"``; weight maps as ``"r=-1:2;0:1;1:2"``."""
    out = {}
    for part in filter(None, (p.strip() for p in (text or "").split(","))):
        if "=" not in part:
            raise CommandError(f"bad parameter {part!r}")
        k, v = (s.strip() for s in part.split("=", 1))
        if ":" in v:
            out[k] = {int(a): Fraction(b) for a, b in (item.split(":") for item in v.split(";") if item)}
        else:
            out[k] = v
    return out


def _family(name: str, params: dict, q):
    p = dict(params)
    try:
        if name == "NormC_OC":
            return sn.NormC_OC(p["C"])
        if name == "NormC_OCx":
            return sn.NormC_OCx(p["C"])
        if name == "NormN_OZ":
            return sn.NormN_OZ(int(p["N"]))
        if name == "NormN_RstarCx":
            return sn.NormN_RstarCx(int(p["N"]))
        if name == "NormC_Charges":
            return sn.NormC_Charges(p["C"])
        if name == "Weighted_r":
            return sn.Weighted_r(p["r"], p.get("form", "charges"))
        if name == "PDK":
            return sn.PDK(p["D"], int(p["K"]), q, p.get("weight", "graded"), p.get("allow_illegal", "") == "1")
        if name == "RN":
            return sn.RN(int(p["N"]), q)
        if name == "NormC_Azb":
            return sn.NormC_Azb(p["C"], q)
    except KeyError as e:
        raise CommandError(f"{name} needs parameter {e}") from None
    raise CommandError(f"unknown family {name!r}")


_FAMILY_ALGEBRA = {
    "NormC_OC": "PolyC",
    "NormC_OCx": "LaurentCx",
    "NormN_OZ": "FunZ",
    "NormN_RstarCx": "CurrentsCx",
    "NormC_Charges": "ChargesZ",
    "PDK": "azb",
    "RN": "azb-dual",
    "NormC_Azb": "azb",
}


def _family_algebra(s) -> str:
    if s.family == "Weighted_r":
        return {"charges": "ChargesZ", "currents_C": "CurrentsC", "currents_Cx": "CurrentsCx"}[s.params["form"]]
    return _FAMILY_ALGEBRA[s.family]


def cmd_seminorm(args):
    s = _family(args.family, _parse_params(args.params), args.q)
    if args.action == "eval":
        if not args.expr:
            raise CommandError("seminorm eval needs an expression")
        u = _elem(args.expr, _family_algebra(s), args.q, args.window)
        return {"family": str(s), "value": fmt(sn.evaluate(s, u))}, EXIT_OK
    rng = random.Random(args.seed)
    pairs = [
        (
            sn.random_element(s.index_set, rng, args.window, kind=args.kind),
            sn.random_element(s.index_set, rng, args.window, kind=args.kind),
        )
        for _ in range(args.samples)
    ]
    rep = sn.check_submultiplicative(s, pairs, args.tol)
    out = rep.as_dict()
    out["violations"] = out["violations"][:20]
    out["status"] = "ok" if rep.ok else "violation"
    return out, EXIT_OK if rep.ok else EXIT_VIOLATION


# envelopes ---------------------------------------------------------------------------


def parse_semicharacter(text: str) -> env.Semicharacter:
    """``rCN(C,N)``, ``hC(C)``, ``max(f,g)``, ``f*g``, ``f+g`` and ``c*f`` with rational ``c >= 1``."""
    toks = re.findall(r"rCN|hC|max|\d+(?:/\d+)?|[()*,+]", text.replace(" ", ""))
    if "".join(toks) != text.replace(" ", ""):
        raise CommandError(f"cannot read semicharacter {text!r}")
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else None

    def take(x=None):
        t = peek()
        if t is None or (x is not None and t != x):
            raise CommandError(f"semicharacter {text!r}: expected {x or 'token'} at token {pos[0]}")
        pos[0] += 1
        return t

    def s_sum():
        f = s_prod()
        while peek() == "+":
            take()
            f = f + s_prod()
        return f

    def s_prod():
        f = s_atom()
        while peek() == "*":
            take()
            f = f * s_atom()
        return f

    def s_atom():
        t = take()
        if t == "rCN":
            take("(")
            C = Fraction(take())
            take(",")
            Nw = int(take())
            take(")")
            return env.rCN(C, Nw)
        if t == "hC":
            take("(")
            C = Fraction(take())
            take(")")
            return env.hC(C)
        if t == "max":
            take("(")
            f = s_sum()
            take(",")
            g = s_sum()
            take(")")
            return f.max(g)
        if t == "(":
            f = s_sum()
            take(")")
            return f
        if re.fullmatch(r"\d+(?:/\d+)?", t):
            c = Fraction(t)
            take("*")
            return s_atom().scale(c)
        raise CommandError(f"semicharacter {text!r}: unexpected {t!r}")

    f = s_sum()
    if peek() is not None:
        raise CommandError(f"semicharacter {text!r}: trailing input")
    return f


def _function_set(text: str, window: int) -> env.FunctionSet:
    a, atoms = _algebra("LaurentCx", 1)
    return env.FunctionSet([evaluate(parse(p), a, atoms, window) for p in _read(text).split(",") if p.strip()])


def _pointwise(values: dict) -> list:
    return [[format_scalar(x) if isinstance(x, GaussianRational) else x, fmt(float(v))] for x, v in values.items()]


def cmd_envelope(args):
    grid = env.parse_grid(args.grid)
    if args.action in ("outer", "inner"):
        D = _function_set(args.set, args.window)
        f = env.outer_envelope if args.action == "outer" else env.inner_envelope_of_polar
        return {"values": _pointwise(f(D, grid))}, EXIT_OK
    if not args.f:
        raise CommandError(f"envelope {args.action} needs --f")
    f = parse_semicharacter(args.f)
    if args.action == "duality":
        rep = env.envelope_duality_suite(f, _function_set(args.set, args.window), grid)
        return _check_one(rep)
    if args.action == "closure":
        g = parse_semicharacter(args.g or args.f)
        return _check_one(env.semicharacter_closure_suite(f, g, grid))
    res = env.majorization_gl1(f, grid)
    out = {"status": "ok" if res.holds else "violation", "C": fmt(res.C), "N": res.N}
    return out, EXIT_OK if res.holds else EXIT_VIOLATION


# argument parsing -----------------------------------------------------------------


def _default_window() -> int:
    try:
        return int(os.environ.get("QSTEIN_WINDOW", "4"))
    except ValueError:
        return 4


def _q(text: str):
    try:
        return as_q(parse_scalar(text))
    except Exception as e:  # zero or malformed
        raise argparse.ArgumentTypeError(str(e)) from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=_q, default=_q("1"), help="deformation parameter, e.g. 1/2 or 3/5+4/5*i")
    common.add_argument("--window", type=int, default=_default_window(), help="truncation window (env QSTEIN_WINDOW)")
    common.add_argument("--algebra", default="azb", help="algebra tag: azb, azb-dual, FunZ, LaurentCx, ...")
    common.add_argument("--tol", type=float, default=1e-9, help="relative tolerance for float checks")

    top = argparse.ArgumentParser(prog="qstein", description=__doc__.splitlines()[0])
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, *, aliases=()):
        return sub.add_parser(name, parents=[common], aliases=list(aliases))

    for name in ("normalize", "coproduct", "antipode", "counit"):
        add(name).add_argument("expr")
    p = add("pair")
    p.add_argument("u")
    p.add_argument("a")
    p = add("qbinom")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p = add("fourier")
    p.add_argument("--map", required=True)
    p.add_argument("expr")
    p = add("seminorm")
    p.add_argument("action", choices=("eval", "check-submult"))
    p.add_argument("expr", nargs="?")
    p.add_argument("--family", required=True)
    p.add_argument("--params", default="")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--kind", choices=("rational", "signed", "gaussian"), default="rational")
    p = add("check-hopf")
    p.add_argument("--pairing", nargs="?", const="", default=None, help="also check the pairing; optional pair tag")
    add("check-qpair")
    p = add("check-envelope")
    p.add_argument("--map", required=True)
    p.add_argument("--samples", type=int, default=100)
    p = add("check-reflexivity")
    p.add_argument("--samples", type=int, default=200)
    p = add("envelope")
    p.add_argument("action", choices=("outer", "inner", "duality", "closure", "majorize"))
    p.add_argument("--grid", default="pow2:4")
    p.add_argument("--set", default="1,z,zinv")
    p.add_argument("--f")
    p.add_argument("--g")
    p = sub.add_parser("azb", help="shorthand for commands on az+b")
    p.add_argument("rest", nargs=argparse.REMAINDER)
    return top


HANDLERS = {
    "normalize": cmd_normalize,
    "coproduct": cmd_coproduct,
    "antipode": cmd_antipode,
    "counit": cmd_counit,
    "pair": cmd_pair,
    "qbinom": cmd_qbinom,
    "fourier": cmd_fourier,
    "seminorm": cmd_seminorm,
    "check-hopf": cmd_check_hopf,
    "check-qpair": cmd_check_qpair,
    "check-envelope": cmd_check_envelope,
    "check-reflexivity": cmd_check_reflexivity,
    "envelope": cmd_envelope,
}


def run(argv=None) -> tuple:
    """Parse ``argv`` and run the command; returns ``(payload, exit_code)``."""
    parser = build_parser()
    args, extra = parser.parse_known_args(argv)
    if extra:
        # argparse cannot place an optional positional after options
        if args.command == "seminorm" and args.expr is None and len(extra) == 1:
            args.expr = extra[0]
        elif args.command != "azb":
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    if args.command == "azb":
        rest = list(args.rest)
        if not rest:
            raise CommandError("azb needs a subcommand")
        return run(rest + ["--algebra", "azb"])
    return HANDLERS[args.command](args)


def main(argv=None) -> int:
    try:
        payload, code = run(argv)
    except SystemExit as e:  # argparse usage errors
        return EXIT_ERROR if e.code else EXIT_OK
    except (CommandError, ExprSyntaxError, AtomError, ValueError, KeyError, ZeroDivisionError) as e:
        print(json.dumps({"status": "error", "error": str(e)}, sort_keys=True))
        return EXIT_ERROR
    print(json.dumps(payload, sort_keys=True, ensure_ascii=False))
    return code


if __name__ == "__main__":
    sys.exit(main())
