"""Command-line interface.

    sqid generate --n 5 --construction thm1 --l 1 --k 3 --format text
    sqid verify identity.json --trials 32 --seed 0
    sqid search --n 5
    sqid clifford --n 3 --case 2n --format triplets
    sqid rho 16 128
    sqid table --n-max 8

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

import jsonschema

from . import clifford, identity, pairs
from .gf2n import BoundExceeded, TwistKind
from .identity import Identity, Triple

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
TABLE_MAX_DIM = 12

IDENTITY_SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["n", "twist", "A", "B", "triple", "coeffs"],
    "properties": {
        "n": {"type": "integer", "minimum": 1, "maximum": 63},
        "twist": {"enum": ["octonion", "clifford"]},
        "A": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "B": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "triple": {
            "type": "object",
            "required": ["r", "s", "N"],
            "properties": {k: {"type": "integer"} for k in ("r", "s", "N")},
        },
        "coeffs": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["z", "terms"],
                "properties": {
                    "z": {"type": "integer", "minimum": 0},
                    "terms": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["x", "y", "sign"],
                            "properties": {
                                "x": {"type": "integer", "minimum": 0},
                                "y": {"type": "integer", "minimum": 0},
                                "sign": {"enum": [1, -1]},
                            },
                        },
                    },
                },
            },
        },
    },
}


class UsageError(Exception):
    pass


def _err(msg: str) -> None:
    print(f"sqid: {msg}", file=sys.stderr)


# ---------------------------------------------------------------------------
# rendering


def _square_sum(letter: str, idx: Sequence[int]) -> str:
    return " + ".join(f"{letter}_{{{i}}}^2" for i in idx)


def render_latex(ident: Identity) -> str:
    """The identity as a LaTeX display, one squared bilinear form per line."""
    lhs = (
        rf"\left({_square_sum('a', ident.A.members)}\right)"
        rf"\left({_square_sum('b', ident.B.members)}\right)"
    )
    squares = []
    for _, terms in ident.coeffs:
        body = ""
        for pos, (x, y, s) in enumerate(terms):
            mono = f"a_{{{x}}}b_{{{y}}}"
            if pos == 0:
                body = mono if s > 0 else f"-{mono}"
            else:
                body += f" {'+' if s > 0 else '-'} {mono}"
        squares.append(rf"\left({body}\right)^2")
    t = ident.triple
    lines = [
        f"% square identity of size {t} over (Z/2Z)^{ident.n}, twist {ident.twist.value}",
        r"\begin{multline*}",
        lhs,
        r"\\ = " + " \\\\\n + ".join(squares),
        r"\end{multline*}",
    ]
    return "\n".join(lines) + "\n"


def render_text(ident: Identity, label: str, status: str) -> str:
    return f"{label}: triple {ident.triple}, {status}\n"


# ---------------------------------------------------------------------------
# generate


def _construction_params(args: argparse.Namespace) -> dict[str, Any]:
    name = args.construction
    params: dict[str, Any] = {}
    if name in ("hurwitz-radon", "complement") and args.reduced_set:
        params["full_set"] = False
    elif name == "thm1":
        if args.l is None or args.k is None:
            raise UsageError("thm1 needs --l and --k")
        params.update(l=args.l, k=args.k)
        if args.extended:
            params["full_set"] = True
    elif name == "thm2":
        if (args.k is None) == (args.kappa is None):
            raise UsageError("thm2 needs exactly one of --k (1..m) or --kappa (0..m-1)")
        params["kappa"] = args.kappa if args.kappa is not None else args.k - 1
        if args.reduced_set:
            params["full_set"] = False
    return params


def cmd_generate(args: argparse.Namespace) -> int:
    params = _construction_params(args)
    con = pairs.build_pair(args.construction, args.n, **params)
    if len(con.A) * len(con.B) > pairs.work_bound():
        raise BoundExceeded(f"card(A)*card(B) = {len(con.A) * len(con.B)} exceeds the work bound")
    ident = identity.build_identity(args.twist, con.A, con.B)
    report = identity.verify_symbolic(ident)
    if not report.ok:
        _err(f"{con.label} failed verification: {report.reason} at {report.failing_quadruple}")
        return EXIT_FAIL
    if con.degenerate:
        _err(f"warning: {con.label} is degenerate (card(B) = {len(con.B)})")
    if args.format == "json":
        out = ident.to_json()
    elif args.format == "latex":
        out = render_latex(ident)
    else:
        out = render_text(ident, con.label, "verified")
    _write(out, args.output)
    return EXIT_OK


def _write(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# verify


def load_identity(path: str) -> tuple[Identity, Triple]:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        jsonschema.validate(data, IDENTITY_SCHEMA)
        stored = Triple(**data["triple"])
        return Identity.from_dict(data), stored
    except (OSError, ValueError, jsonschema.ValidationError, TypeError) as exc:
        raise UsageError(f"cannot load {path}: {exc}") from exc


def cmd_verify(args: argparse.Namespace) -> int:
    ident, stored = load_identity(args.path)
    sym = identity.verify_symbolic(ident)
    num = identity.verify_numeric(ident, args.trials, args.seed)
    triple_ok = stored == ident.triple
    print(f"symbolic: {'ok' if sym.ok else 'FAIL'} ({sym.quadruples_checked} quadruples)")
    if not sym.ok:
        print(f"  reason: {sym.reason}; quadruple {sym.failing_quadruple}")
    print(f"numeric:  {'ok' if num else 'FAIL'} ({args.trials} trials, seed {args.seed})")
    print(f"triple:   {ident.triple}{'' if triple_ok else f' (file says {stored})'}")
    return EXIT_OK if sym.ok and num and triple_ok else EXIT_FAIL


# ---------------------------------------------------------------------------
# search


def cmd_search(args: argparse.Namespace) -> int:
    best = pairs.max_hurwitzian_search(args.n)
    table = pairs.hurwitzian_set(args.n)
    table_ok = pairs.is_multiplicative_weight(table, pairs.ElementSet.whole(args.n))
    print(f"n = {args.n}")
    print(f"maximum cardinality: {len(best)}")
    print(f"witness: {list(best)}")
    attains = table_ok and len(table) == len(best)
    print(f"table set: card {len(table)}, valid {table_ok}, attains maximum: {attains}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# clifford


def cmd_clifford(args: argparse.Namespace) -> int:
    gens = clifford.generator_set(args.n, args.case)
    ok = clifford.verify_clifford_rep(args.n, gens)
    rank = clifford.CliffordCase(args.case).rank(args.n)
    if args.format == "text":
        print(f"Cl(0,{rank}) on R^{1 << args.n}: generators {list(gens)}")
        print("relations verified" if ok else "relations FAILED")
        return EXIT_OK if ok else EXIT_FAIL
    if not ok:
        _err("generator set fails the Clifford relations")
        return EXIT_FAIL
    chunks = []
    for x in gens:
        g = clifford.build_G(args.n, x)
        chunks.append(f"# G_x x={x}\n")
        if args.format == "csv":
            chunks.extend(",".join(str(v) for v in row) + "\n" for row in g.to_dense())
        else:
            chunks.append("row,col,sign\n")
            chunks.extend(f"{r},{c},{s}\n" for r, c, s in g.triplets())
    _write("".join(chunks), args.output)
    return EXIT_OK


# ---------------------------------------------------------------------------
# rho and table


def cmd_rho(args: argparse.Namespace) -> int:
    for big_n in args.N:
        print(f"rho({big_n}) = {identity.rho(big_n)}")
    return EXIT_OK


def table_rows(n_max: int, k_max: int = 5, verify: bool = False) -> list[dict[str, Any]]:
    """Predicted against constructed triples for every construction up to n_max."""
    if not 1 <= n_max <= TABLE_MAX_DIM:
        raise BoundExceeded(f"n_max must be in [1, {TABLE_MAX_DIM}]")
    jobs: list[tuple[str, int, dict[str, Any], Triple]] = []
    for n in range(1, n_max + 1):
        jobs.append(("hurwitz-radon", n, {}, identity.predicted_triple_hurwitz_radon(n)))
        if n >= 4:
            jobs.append(("complement", n, {}, identity.predicted_triple_complement(n)))
            if n % 4 == 3:
                jobs.append(("complement", n, {"full_set": False},
                             Triple(2 * n, 2**n - 2 * n, 2**n - 2)))
        if n % 2 and n >= 5:
            jobs.append(("border", n, {}, identity.predicted_triple_border(n)))
        for k in range(2, min(n, k_max) + 1):
            for l in range(1, k):
                jobs.append(("thm1", n, {"l": l, "k": k},
                             identity.predicted_triple_thm1(n, l, k)))
                if n % 4 == 3:
                    jobs.append(("thm1", n, {"l": l, "k": k, "full_set": True},
                                 identity.predicted_triple_thm1(n, l, k, extended=True)))
        if n % 2:
            for k in range(1, (n - 1) // 2 + 1):
                jobs.append(("thm2", n, {"kappa": k - 1},
                             identity.predicted_triple_thm2(n, k)))
    rows = []
    for name, n, params, predicted in jobs:
        con = pairs.build_pair(name, n, **params)
        got = Triple(len(con.A), len(con.B), len(pairs.sumset(con.A, con.B)))
        row = {
            "n": n,
            "construction": con.label,
            "predicted": list(predicted),
            "constructed": list(got),
            "match": got == predicted,
        }
        if verify:
            ident = identity.build_identity(TwistKind.OCTONION, con.A, con.B)
            row["verified"] = identity.verify_symbolic(ident).ok
        rows.append(row)
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    rows = table_rows(args.n_max, args.k_max, args.verify)
    if args.format == "json":
        print(json.dumps(rows, indent=1))
        return EXIT_OK
    width = max(len(r["construction"]) for r in rows)
    for r in rows:
        pred = "[" + ",".join(map(str, r["predicted"])) + "]"
        got = "[" + ",".join(map(str, r["constructed"])) + "]"
        mark = "" if r["match"] else "  MISMATCH"
        ver = "" if "verified" not in r else ("  verified" if r["verified"] else "  NOT VERIFIED")
        print(f"{r['construction']:<{width}}  predicted {pred:<18} constructed {got:<18}{ver}{mark}")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sqid", description="Square identities from twisted group algebras.")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build, verify and emit an identity")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--construction", choices=pairs.CONSTRUCTIONS, required=True)
    g.add_argument("--l", type=int, help="thm1: pair index l")
    g.add_argument("--k", type=int, help="thm1: pair index k; thm2: band parameter k in 1..m")
    g.add_argument("--kappa", type=int, help="thm2: zero-based band parameter (k - 1)")
    g.add_argument("--extended", action="store_true",
                   help="thm1 with the (2n+2)-element set, n = 3 mod 4")
    g.add_argument("--reduced-set", action="store_true",
                   help="use the 2n-element set instead of the 2n+2 one (n = 3 mod 4)")
    g.add_argument("--twist", choices=[t.value for t in TwistKind], default="octonion")
    g.add_argument("--format", choices=["json", "latex", "text"], default="json")
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("verify", help="re-verify an identity JSON file")
    v.add_argument("path")
    v.add_argument("--trials", type=int, default=32)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exact search for a largest Hurwitzian set (n <= 6)")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_search)

    c = sub.add_parser("clifford", help="Clifford generators as signed permutation matrices")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--case", choices=[x.value for x in clifford.CliffordCase], required=True)
    c.add_argument("--format", choices=["text", "csv", "triplets"], default="text")
    c.add_argument("--output", "-o")
    c.set_defaults(func=cmd_clifford)

    r = sub.add_parser("rho", help="Hurwitz-Radon function")
    r.add_argument("N", type=int, nargs="+")
    r.set_defaults(func=cmd_rho)

    t = sub.add_parser("table", help="predicted vs constructed triples")
    t.add_argument("--n-max", type=int, default=8)
    t.add_argument("--k-max", type=int, default=5)
    t.add_argument("--verify", action="store_true")
    t.add_argument("--format", choices=["text", "json"], default="text")
    t.set_defaults(func=cmd_table)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError, BoundExceeded) as exc:
        _err(str(exc))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
