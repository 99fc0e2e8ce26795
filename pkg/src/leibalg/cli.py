"""Command-line interface: ``leibalg <command> ...``.

Exit codes: 0 pass, 1 fail, 2 inconclusive, 3 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction
from typing import Sequence

from .algebra import AlgebraTable, fingerprint
from .catalog import FAMILIES, CatalogEntry, catalog_index, construct
from .derivations import derivation_space, matches_prop_pattern
from .errors import LeibalgError, ParameterError
from .io import dumps_algebra, load_algebra, parse_rational
from .normalization import check_gamma_witness, normalize_gamma
from .verify import separation_report, verify_family

EXIT_ERROR = 3
_NEGATIVE_RATIONAL = re.compile(r"^-\d+(?:/\d+)?$")
DEFAULT_MAX_DIM = 24


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2, our "inconclusive"
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def max_dim() -> int:
    raw = os.environ.get("LEIBALG_MAX_DIM")
    if raw is None or raw == "":
        return DEFAULT_MAX_DIM
    try:
        v = int(raw)
    except ValueError:
        raise ParameterError(f"LEIBALG_MAX_DIM must be an integer, got {raw!r}") from None
    if v < 1:
        raise ParameterError("LEIBALG_MAX_DIM must be positive")
    return v


def _check_dim(a: AlgebraTable) -> None:
    cap = max_dim()
    if a.dim > cap:
        raise ParameterError(f"dimension {a.dim} exceeds LEIBALG_MAX_DIM = {cap}")


def parse_range(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*(?:\.\.\s*(\d+)\s*)?", text)
    if not m:
        raise ParameterError(f"range must look like A..B or A, got {text!r}")
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) else lo
    if lo > hi:
        raise ParameterError(f"empty range {text!r}")
    return lo, hi


def parse_params(items: Sequence[str]) -> dict[str, Fraction]:
    out = {}
    for item in items:
        if "=" not in item:
            raise ParameterError(f"parameter must be name=value, got {item!r}")
        k, v = item.split("=", 1)
        out[k.strip()] = parse_rational(v.strip(), k.strip())
    return out


def _matrix_rows(m) -> list[list[str]]:
    return [[str(v) for v in row] for row in m.to_rows()]


# -- commands --------------------------------------------------------------


def cmd_verify(args) -> int:
    lo, hi = parse_range(args.n)
    params = parse_params(args.param) if args.param else None
    report = verify_family(args.family, lo, hi, params, max_dim=max_dim())
    sys.stdout.write(report.to_json() if args.json else report.format_text())
    return report.exit_code


def cmd_invariants(args) -> int:
    a = load_algebra(args.file)
    _check_dim(a)
    fp = fingerprint(a)
    sys.stdout.write(json.dumps(fp.as_dict(), indent=2) + "\n")
    return 0


def cmd_derivations(args) -> int:
    a = load_algebra(args.file)
    _check_dim(a)
    space = derivation_space(a)
    verdict = None
    if args.pattern:
        verdict = matches_prop_pattern(space, args.pattern)
    if args.json:
        out = {
            "dim": space.dim,
            "basis": [_matrix_rows(m) for m in space.basis],
            "diagonal_projection_rank": space.diagonal_projection_rank,
        }
        if args.pattern:
            out["pattern"] = args.pattern
            out["match"] = verdict
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    else:
        lines = [f"dim Der = {space.dim}"]
        for idx, m in enumerate(space.basis, 1):
            lines.append(f"D{idx}:")
            lines.extend("  " + " ".join(f"{v:>5}" for v in row) for row in _matrix_rows(m))
        if args.pattern:
            lines.append(f"pattern: {'match' if verdict else 'mismatch'}")
        sys.stdout.write("\n".join(lines) + "\n")
    if args.pattern and not verdict:
        return 1
    return 0


def cmd_normalize(args) -> int:
    g = [parse_rational(v, f"gamma{i + 1}") for i, v in enumerate(args.gamma)]
    canon, witness = normalize_gamma(args.n, g)
    verified = check_gamma_witness(args.n, g, witness) if witness else None
    out = {
        "n": args.n,
        "gamma": [str(v) for v in g],
        "canonical": [str(v) for v in canon],
        "witness": witness is not None,
    }
    if witness:
        out["substitution"] = {
            "A1": str(witness.a1), "B2": str(witness.b2),
            "C1": str(witness.c1), "C2": str(witness.c2),
        }
        out["witness_verified"] = verified
        out["matrix"] = _matrix_rows(witness.matrix)
    if args.json:
        sys.stdout.write(json.dumps(out, indent=2) + "\n")
    else:
        lines = [f"canonical: ({', '.join(out['canonical'])})"]
        if witness:
            s = out["substitution"]
            lines.append(
                f"witness: yes (A1={s['A1']}, B2={s['B2']}, C1={s['C1']}, C2={s['C2']}; "
                f"verified: {'yes' if verified else 'no'})"
            )
        else:
            lines.append(f"witness: no (gamma2 is not a rational {args.n - 2}-th power)")
        sys.stdout.write("\n".join(lines) + "\n")
    if witness is None:
        return 2
    return 0 if verified else 1


def cmd_catalog(args) -> int:
    if args.action == "list":
        rows = catalog_index()
        if args.json:
            sys.stdout.write(json.dumps(rows, indent=2) + "\n")
        else:
            for r in rows:
                params = ", ".join(r["param_names"]) or "-"
                sys.stdout.write(
                    f"{r['family_id']:<12} dim {r['dim_formula']:<5} params: {params:<32} "
                    f"{r['source']}\n"
                )
        return 0
    if args.family is None or args.n is None:
        raise ParameterError("catalog emit needs a family and n")
    entry = CatalogEntry.make(args.family, args.n, parse_params(args.params))
    if entry.dim > max_dim():
        raise ParameterError(f"dimension {entry.dim} exceeds LEIBALG_MAX_DIM = {max_dim()}")
    text = dumps_algebra(construct(entry))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_separate(args) -> int:
    rep = separation_report(args.n, seed=args.seed)
    sys.stdout.write(rep.to_json() if args.json else rep.format_text())
    return 0 if rep.consistent() else 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="leibalg", description="Exact computations with Leibniz algebras.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run a family's check bundle over a range of n")
    v.add_argument("family", choices=list(FAMILIES), metavar="family")
    v.add_argument("--n", required=True, help="range A..B (or a single value)")
    v.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                   help="fix a parameter (repeatable); default uses sample instances")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    i = sub.add_parser("invariants", help="print the invariant fingerprint of a file")
    i.add_argument("file")
    i.set_defaults(func=cmd_invariants)

    d = sub.add_parser("derivations", help="derivation basis of a file")
    d.add_argument("file")
    d.add_argument("--pattern", choices=["F1", "F2"])
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_derivations)

    nz = sub.add_parser("normalize", help="canonical form of R_n1_gamma parameters")
    # let "-1/2" through as a value rather than an option
    nz._negative_number_matcher = _NEGATIVE_RATIONAL
    nz.add_argument("n", type=int)
    nz.add_argument("gamma", nargs=3, metavar="GAMMA")
    nz.add_argument("--json", action="store_true")
    nz.set_defaults(func=cmd_normalize)

    c = sub.add_parser("catalog", help="list families or emit an algebra file")
    c.add_argument("action", choices=["list", "emit"])
    c.add_argument("family", nargs="?")
    c.add_argument("n", nargs="?", type=int)
    c.add_argument("params", nargs="*", metavar="NAME=VALUE")
    c.add_argument("-o", "--output")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_catalog)

    s = sub.add_parser("separate", help="fingerprint separation of the canonical gamma algebras")
    s.add_argument("--n", type=int, default=5)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_separate)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except LeibalgError as exc:
        print(f"leibalg: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
