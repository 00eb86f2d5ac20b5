"""Command-line front end.

Exit codes: 0 success/pass, 1 input error, 2 theorem-check FAIL,
3 size-limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as _catalog
from .congruence import (
    all_congruences,
    congruence_from_blocks,
    principal_congruence,
    quotient,
)
from .core import is_distributive, is_modular, product
from .errors import LatticeError, SizeLimitExceeded
from .terms import BUILTIN_CLASSES, parse_identity_file
from .textfmt import dump_lattice_text, parse_congruence_text, parse_lattice_text, to_dot
from .variety import kappa, verify_theorem1, verify_theorem2, verify_theorem3

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_FAIL = 2
EXIT_SIZE = 3


def load_lattice(source):
    """Load from "catalog:<name>", a file path, or "-" for stdin."""
    if source.startswith("catalog:"):
        try:
            return _catalog.resolve(source[len("catalog:"):]).lattice
        except KeyError as exc:
            raise LatticeError(str(exc)) from None
    if source == "-":
        return parse_lattice_text(sys.stdin.read())
    with open(source, encoding="utf-8") as handle:
        return parse_lattice_text(handle.read())


def load_class(args):
    if getattr(args, "identities", None):
        with open(args.identities, encoding="utf-8") as handle:
            return parse_identity_file(handle.read())
    return BUILTIN_CLASSES[getattr(args, "klass", None) or "distributive"]


def load_congruence(lat, text, args):
    if text in ("delta", "kappa"):
        return kappa(lat, load_class(args))
    return congruence_from_blocks(lat, parse_congruence_text(text))


def _yesno(flag):
    return "yes" if flag else "no"


def _emit(args, text_lines, payload):
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        for line in text_lines:
            print(line)


def cmd_info(args):
    lat = load_lattice(args.lattice)
    dist = is_distributive(lat)
    mod = is_modular(lat)
    try:
        con_size = len(all_congruences(lat, max_size=args.max_con))
    except SizeLimitExceeded:
        con_size = None
    line = (
        f"size={len(lat)} covers={len(lat.covers())} "
        f"distributive={_yesno(dist)} modular={_yesno(mod)} "
        f"|Con|={con_size if con_size is not None else 'n/a'}"
    )
    _emit(args, [line], {
        "size": len(lat),
        "covers": len(lat.covers()),
        "distributive": dist,
        "modular": mod,
        "con_size": con_size,
    })
    return EXIT_OK


def principal_generator(lat, theta):
    """A pair (a, b) with theta(a, b) == theta, or None."""
    n = len(lat)
    for i in range(n):
        for j in range(i, n):
            if theta.same(i, j):
                a, b = lat.elements[i], lat.elements[j]
                if principal_congruence(lat, a, b) == theta:
                    return (a, b)
    return None


def cmd_delta(args):
    lat = load_lattice(args.lattice)
    spec = load_class(args)
    kap = kappa(lat, spec)
    pair = principal_generator(lat, kap)
    lines = [
        f"kappa={kap.render(lat)}",
        f"quotient_size={kap.num_blocks()}",
        f"principal={'(' + pair[0] + ',' + pair[1] + ')' if pair else 'no'}",
    ]
    if kap.num_blocks() == 1 and len(lat) > 1:
        lines.append("note: quotient is a singleton (the class collapses this lattice)")
    _emit(args, lines, {
        "class": spec.name,
        "blocks": kap.render(lat),
        "quotient_size": kap.num_blocks(),
        "principal": list(pair) if pair else None,
    })
    return EXIT_OK


def cmd_quotient(args):
    lat = load_lattice(args.lattice)
    theta = load_congruence(lat, args.congruence, args)
    text = dump_lattice_text(quotient(lat, theta).target)
    _emit(args, [text.rstrip("\n")], {"lattice": text})
    return EXIT_OK


def cmd_product(args):
    lat = product(load_lattice(args.lattice), load_lattice(args.other))
    text = dump_lattice_text(lat)
    _emit(args, [text.rstrip("\n")], {"lattice": text})
    return EXIT_OK


def cmd_congruences(args):
    lat = load_lattice(args.lattice)
    cons = all_congruences(lat, max_size=args.max_con)
    rendered = [theta.render(lat) for theta in cons]
    _emit(args, rendered, {"congruences": rendered, "count": len(rendered)})
    return EXIT_OK


def cmd_check(args):
    spec = load_class(args)
    lat = load_lattice(args.lattice)
    reports = []
    if args.theorem == 1:
        reports.append(verify_theorem1(lat, spec, max_size=args.max_con))
    elif args.theorem == 2:
        try:
            thetas = all_congruences(lat, max_size=args.max_con)
        except SizeLimitExceeded:
            thetas = [
                principal_congruence(lat, lat.elements[i], lat.elements[j])
                for i, j in lat.covers_i()
            ]
        for theta in thetas:
            reports.append(verify_theorem2(lat, theta, spec))
    else:
        if not args.other:
            raise LatticeError("check --theorem 3 needs two lattices")
        reports.append(verify_theorem3(lat, load_lattice(args.other), spec, max_size=args.max_con))
    ok = all(r.ok for r in reports)
    lines = []
    for r in reports:
        lines.append(f"{'PASS' if r.ok else 'FAIL'} {r.name}")
        lines.extend("  " + d for d in r.details)
    lines.append(f"theorem {args.theorem}: {'PASS' if ok else 'FAIL'} ({len(reports)} check(s))")
    _emit(args, lines, {
        "theorem": args.theorem,
        "ok": ok,
        "checks": [{"name": r.name, "ok": r.ok, "details": r.details} for r in reports],
    })
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dot(args):
    lat = load_lattice(args.lattice)
    theta = load_congruence(lat, args.highlight, args) if args.highlight else None
    print(to_dot(lat, highlight=theta), end="")
    return EXIT_OK


def cmd_catalog(args):
    if args.action == "list":
        for name in _catalog.CATALOG_NAMES:
            print(name)
        return EXIT_OK
    if not args.name:
        raise LatticeError("catalog dump needs a lattice name")
    try:
        named = _catalog.resolve(args.name)
    except KeyError as exc:
        raise LatticeError(str(exc)) from None
    print(dump_lattice_text(named.lattice), end="")
    return EXIT_OK


def _add_common(sub):
    sub.add_argument("--json", action="store_true", help="machine-readable output")
    sub.add_argument("--max-con", type=int, default=12, metavar="N",
                     help="congruence enumeration cap (default 12)")


def _add_class(sub):
    sub.add_argument("--class", dest="klass", choices=sorted(BUILTIN_CLASSES),
                     help="built-in equational class (default distributive)")
    sub.add_argument("--identities", metavar="FILE",
                     help="file of identities, one 'lhs = rhs' per line")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="latquot",
        description="Congruences, quotients, and largest class-quotients of finite lattices.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("info", help="size, distributivity, modularity, |Con|")
    p.add_argument("lattice")
    _add_common(p)
    p.set_defaults(func=cmd_info)

    for name in ("delta", "kappa"):
        p = subs.add_parser(name, help="least congruence with quotient in the class")
        p.add_argument("lattice")
        _add_class(p)
        _add_common(p)
        p.set_defaults(func=cmd_delta)

    p = subs.add_parser("quotient", help="emit the quotient lattice as text")
    p.add_argument("lattice")
    p.add_argument("congruence", help="block notation, or the keyword delta/kappa")
    _add_class(p)
    _add_common(p)
    p.set_defaults(func=cmd_quotient)

    p = subs.add_parser("product", help="emit the direct product as text")
    p.add_argument("lattice")
    p.add_argument("other")
    _add_common(p)
    p.set_defaults(func=cmd_product)

    p = subs.add_parser("congruences", help="enumerate the congruence lattice")
    p.add_argument("lattice")
    _add_common(p)
    p.set_defaults(func=cmd_congruences)

    p = subs.add_parser("check", help="verify a structural theorem")
    p.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("lattice")
    p.add_argument("other", nargs="?", help="second lattice (theorem 3)")
    _add_class(p)
    _add_common(p)
    p.set_defaults(func=cmd_check)

    p = subs.add_parser("dot", help="Hasse diagram in DOT format")
    p.add_argument("lattice")
    p.add_argument("--highlight", metavar="CONG",
                   help="congruence (block notation or delta/kappa) to cluster")
    _add_class(p)
    _add_common(p)
    p.set_defaults(func=cmd_dot)

    p = subs.add_parser("catalog", help="list or dump the stock lattices")
    p.add_argument("action", choices=("list", "dump"))
    p.add_argument("name", nargs="?")
    _add_common(p)
    p.set_defaults(func=cmd_catalog)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeLimitExceeded as exc:
        print(f"size limit: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except (LatticeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
