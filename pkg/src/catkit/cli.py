"""``catkit`` command line: one subcommand per module.

Exit codes: 0 success, 1 a check failed, 2 usage error or malformed input.
JSON arguments may be given inline (starting with ``{`` or ``[``) or as a file path.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import braids, duoidal, groups, hall, mackey, species, ybrep
from .finitefield import FqField
from .laurent import LaurentPoly, format_poly
from .sparse import SparseMat


class InputError(Exception):
    pass


def load_json(arg: str):
    text = arg.strip()
    if not text.startswith(("{", "[")):
        path = Path(arg)
        if not path.is_file():
            raise InputError(f"no such file: {arg}")
        text = path.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {arg!r}: {exc}") from exc


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


# -- operators and braids ---------------------------------------------------


def _load_operator(args) -> ybrep.EnhancedYB | ybrep.YBOp:
    if getattr(args, "file", None):
        data = load_json(args.file)
        if "builtin" in data:
            return _builtin(data["builtin"])
        if "mu" in data:
            R = SparseMat.from_json(data["R"])
            return ybrep.EnhancedYB(ybrep.YBOp.from_matrix(R), SparseMat.from_json(data["mu"]),
                                    LaurentPoly.from_json(data["alpha"]),
                                    LaurentPoly.from_json(data["beta"]))
        return ybrep.YBOp.from_matrix(SparseMat.from_json(data.get("R", data)))
    return _builtin(args.operator)


def _builtin(name: str) -> ybrep.EnhancedYB:
    if name not in ybrep.BUILTIN_OPERATORS:
        raise InputError(f"unknown operator {name!r}; known: {sorted(ybrep.BUILTIN_OPERATORS)}")
    return ybrep.BUILTIN_OPERATORS[name]()


def _plain(op) -> ybrep.YBOp:
    return op.yb if isinstance(op, ybrep.EnhancedYB) else op


def _load_braid(args) -> braids.BraidWord:
    if args.braid:
        return braids.BraidWord.from_json(load_json(args.braid))
    if args.strands is None or args.word is None:
        raise InputError("give --braid FILE or both --strands and --word")
    word = load_json(args.word)
    if not isinstance(word, list):
        raise InputError("--word must be a JSON list of nonzero integers")
    return braids.BraidWord(args.strands, tuple(word))


def cmd_ybe_check(args) -> int:
    ok = ybrep.check_ybe(_plain(_load_operator(args)))
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_hecke_check(args) -> int:
    op = _plain(_load_operator(args))
    ok = ybrep.check_hecke(op, ybrep.HeckeParams(args.r, args.s), args.case)
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_invariant(args) -> int:
    b = _load_braid(args)
    if args.oracle:
        print(format_poly(braids.jones_from_braid(b)))
        return 0
    op = _load_operator(args)
    if not isinstance(op, ybrep.EnhancedYB):
        raise InputError("the invariant needs an enhanced operator (R, mu, alpha, beta)")
    print(format_poly(ybrep.eyb_invariant(b, op)))
    return 0


def cmd_braid(args) -> int:
    b = _load_braid(args)
    pd = braids.markov_closure(b)
    print(f"strands: {b.strands}")
    print(f"word: {list(b.word)}")
    print(f"permutation: {list(braids.underlying_perm(b).images)}")
    print(f"writhe: {braids.writhe(b)}")
    print(f"components: {pd.num_components()}")
    print(f"pd: {dumps(pd.to_json())}")
    return 0


# -- Hall algebra -----------------------------------------------------------


def cmd_gaussian(args) -> int:
    if not 0 <= args.k <= args.n:
        raise InputError("need 0 <= k <= n")
    if args.q is None:
        print(format_poly(hall.gaussian_binomial(args.n, args.k)))
    else:
        print(hall.gaussian_binomial(args.n, args.k, args.q))
    return 0


def cmd_hall_product(args) -> int:
    data = load_json(args.file)
    try:
        f = hall.HallElement.from_json(data["f"])
        g = hall.HallElement.from_json(data["g"])
    except (KeyError, AttributeError, TypeError) as exc:
        raise InputError(f"expected {{'f': ..., 'g': ...}}: {exc}") from exc
    prod = hall.hall_product(f, g, data.get("q"))
    for d, x in prod.values.items():
        print(f"{d}: {format_poly(x)}")
    if not prod.values:
        print("0")
    return 0


def cmd_green_conv(args) -> int:
    if args.file:
        data = load_json(args.file)
        f = hall.GLClassFunction.from_json(data["f"])
        g = hall.GLClassFunction.from_json(data["g"])
    else:
        f = hall.GLClassFunction.constant(args.n1, args.q)
        g = hall.GLClassFunction.constant(args.n2, args.q)
    fg = hall.green_convolution(f, g)
    table = hall.conj_classes(fg.n, FqField(fg.q))
    for cid, val in fg.values.items():
        print(f"class {cid} (order {table.orders[cid]}, size {table.sizes[cid]}): {val}")
    if args.check_commutative:
        ok = hall.green_convolution(g, f) == fg
        print("commutative: " + ("PASS" if ok else "FAIL"))
        return 0 if ok else 1
    return 0


# -- species ----------------------------------------------------------------


def cmd_species(args) -> int:
    named = species.NAMED_SERIES
    for name in filter(None, (args.outer, args.inner)):
        if name not in named:
            raise InputError(f"unknown series {name!r}; known: {sorted(named)}")
    F = named[args.outer](args.maxdeg)
    if args.inner:
        F = species.plethysm(F, named[args.inner](args.maxdeg))
    print(" ".join(map(str, species.species_counts(F))))
    return 0


# -- groups -----------------------------------------------------------------


def _load_group(args) -> groups.FiniteGroup:
    if args.group:
        return groups.group_from_json(load_json(args.group))
    return groups.named_group(args.named or "S3")


def cmd_mackey_check(args) -> int:
    G = _load_group(args)
    failures = 0
    subs = G.subgroups
    ident = all(groups.mackey_identity_check(G, H, K, groups.permutation_character(G, H, L))
                for H in subs for K in subs for L in subs if L <= H)
    print(f"mackey decomposition ({len(subs)} subgroups): {'PASS' if ident else 'FAIL'}")
    failures += not ident
    functors = [("fixed points of G/" + mackey._name(H), mackey.fixed_point_mackey(groups.coset_space(G, H)))
                for H in mackey.class_reps(G)]
    functors += [("trivial", mackey.trivial_mackey(G)), ("burnside", mackey.burnside_mackey(G))]
    for name, M in functors:
        rep = mackey.mackey_axioms_validate(M)
        print(f"{name}: {'PASS' if rep.ok else 'FAIL'}")
        for axiom, msgs in sorted(rep.failures.items()):
            for m in msgs:
                print(f"  axiom {axiom}: {m}")
        failures += not rep.ok
    return 1 if failures else 0


def cmd_burnside(args) -> int:
    G = _load_group(args)
    X = groups.gset_from_json(G, load_json(args.x))
    Y = groups.gset_from_json(G, load_json(args.y))
    prod = mackey.burnside_mul(X, Y)
    print(mackey.format_orbit_types(G, prod))
    if args.check:
        ok = prod == mackey.orbit_decomposition(groups.product_gset(X, Y))
        print("direct decomposition: " + ("PASS" if ok else "FAIL"))
        return 0 if ok else 1
    return 0


def cmd_duoid_check(args) -> int:
    if args.category:
        cat = duoidal.category_from_json(load_json(args.category))
    else:
        cats = duoidal.sample_categories()
        if args.named not in cats:
            raise InputError(f"unknown category {args.named!r}; known: {sorted(cats)}")
        cat = cats[args.named]
    data = load_json(args.duoid) if args.duoid else {"kind": "codiscrete", "k": 1}
    D = duoidal.duoid_from_json(cat, data)
    rep = duoidal.duoid_validate(D)
    two = duoidal.two_category_check(D)
    print(f"duoid: {'PASS' if rep.ok else 'FAIL'}")
    for m in rep.failures:
        print(f"  {m}")
    print(f"2-category: {'PASS' if two else 'FAIL'}")
    return 0 if rep.ok and two else 1


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="catkit", description="Exact checks for braided, Hall, "
                                "species, Mackey and duoidal constructions.")
    sub = p.add_subparsers(dest="command", required=True)

    def operator_flags(sp):
        sp.add_argument("--file", help="operator JSON: a matrix, {R, mu, alpha, beta} or {builtin}")
        sp.add_argument("--operator", default="jones", help="builtin operator name")

    def braid_flags(sp):
        sp.add_argument("--braid", help="braid JSON {strands, word}")
        sp.add_argument("--strands", type=int)
        sp.add_argument("--word", help='JSON list such as "[1,1,1]"')

    sp = sub.add_parser("ybe-check", help="check the Yang-Baxter equation")
    operator_flags(sp)
    sp.set_defaults(func=cmd_ybe_check)

    sp = sub.add_parser("hecke-check", help="check a quadratic Hecke relation")
    operator_flags(sp)
    sp.add_argument("--r", type=int, default=1)
    sp.add_argument("--s", type=int, default=0)
    sp.add_argument("--case", choices=["distinct", "equal"], default="equal")
    sp.set_defaults(func=cmd_hecke_check)

    sp = sub.add_parser("invariant", help="Markov-trace invariant of a braid closure")
    operator_flags(sp)
    braid_flags(sp)
    sp.add_argument("--oracle", action="store_true", help="use the Kauffman bracket state sum")
    sp.set_defaults(func=cmd_invariant)

    sp = sub.add_parser("braid", help="permutation, writhe and closure of a braid word")
    braid_flags(sp)
    sp.set_defaults(func=cmd_braid)

    sp = sub.add_parser("gaussian", help="Gaussian binomial [n choose k]_q")
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("q", type=int, nargs="?", help="field size; omit for the polynomial in v")
    sp.set_defaults(func=cmd_gaussian)

    sp = sub.add_parser("hall-product", help="Hall product of two functions on dimensions")
    sp.add_argument("file", help='JSON {"f": {dim: poly}, "g": {dim: poly}, "q": optional}')
    sp.set_defaults(func=cmd_hall_product)

    sp = sub.add_parser("green-conv", help="Green convolution of class functions on GL_n(F_q)")
    sp.add_argument("--file", help='JSON {"f": class function, "g": class function}')
    sp.add_argument("--n1", type=int, default=1)
    sp.add_argument("--n2", type=int, default=1)
    sp.add_argument("--q", type=int, default=2)
    sp.add_argument("--check-commutative", action="store_true")
    sp.set_defaults(func=cmd_green_conv)

    sp = sub.add_parser("species", help="labelled counts of a named series or a substitution")
    sp.add_argument("--outer", default="E")
    sp.add_argument("--inner")
    sp.add_argument("--maxdeg", type=int, default=6)
    sp.set_defaults(func=cmd_species)

    def group_flags(sp):
        sp.add_argument("--group", help="group JSON: {table}, {permutations} or {named}")
        sp.add_argument("--named", help=f"one of {sorted(groups.NAMED_GROUPS)}")

    sp = sub.add_parser("mackey-check", help="Mackey decomposition and Green axioms over a group")
    group_flags(sp)
    sp.set_defaults(func=cmd_mackey_check)

    sp = sub.add_parser("burnside", help="orbit decomposition of a product of G-sets")
    group_flags(sp)
    sp.add_argument("--x", required=True, help='G-set JSON {"orbits": [[gens], ...]} or {"action"}')
    sp.add_argument("--y", required=True)
    sp.add_argument("--check", action="store_true", help="compare with the direct decomposition")
    sp.set_defaults(func=cmd_burnside)

    sp = sub.add_parser("duoid-check", help="duoid axioms and the 2-category axioms")
    sp.add_argument("--category", help="category JSON {objects, morphisms, compose}")
    sp.add_argument("--named", default="arrow")
    sp.add_argument("--duoid", help='{"kind": "codiscrete", "k": 2} or {"kind": "locally_discrete"}')
    sp.set_defaults(func=cmd_duoid_check)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ValueError, KeyError, TypeError) as exc:
        print(f"catkit {args.command}: error: {exc}", file=sys.stderr)
        return 2


def run(argv: list[str]) -> int:
    """Like ``main`` but reports argparse usage errors as exit code 2 instead of raising."""
    try:
        return main(argv)
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
