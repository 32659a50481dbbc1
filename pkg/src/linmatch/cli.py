"""Command line experiment runner.

Every subcommand calls into the library, wraps the outcome in a
:class:`~linmatch.report.Report` and writes it as JSON, CSV or text.

Exit codes: 0 a verdict was produced (whatever it says), 2 bad arguments,
3 a search bound was exceeded, 4 an internal invariant was violated.
"""

from __future__ import annotations

import argparse
import itertools
import sys
import time
from typing import Optional, Sequence

from . import group_matching as gm
from . import linear_matching as lm
from . import prime_degree as pd
from .errors import (BoundExceeded, InvariantViolation, LinmatchError, SearchExhausted,
                     TooLarge)
from .finite_field import (QQ, ExtensionContext, Polynomial, PrimeField, poly_is_irreducible,
                           subfield_basis, subfield_degrees)
from .report import Report

EXIT_OK, EXIT_USAGE, EXIT_BOUND, EXIT_INVARIANT = 0, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


class _UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def _elements(text: str) -> list[str]:
    return [t.strip() for t in text.split(";") if t.strip()]


def _add_field_args(p: argparse.ArgumentParser, rational: bool = True):
    p.add_argument("--p", type=int, help="characteristic of the base field GF(p)")
    p.add_argument("--n", type=int, help="degree of L over GF(p)")
    p.add_argument("--modulus", help="defining polynomial, little-endian coefficients")
    if rational:
        p.add_argument("--rational", action="store_true", help="use Q as the base field")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linmatch", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("match-group", help="matching between subsets of a finite abelian group")
    p.add_argument("--group", required=True, help='e.g. "Z4" or "Z2xZ3"')
    p.add_argument("--set-a", required=True)
    p.add_argument("--set-b", required=True)
    _add_common(p)

    p = sub.add_parser("field-info", help="subfield lattice of GF(p^n)")
    _add_field_args(p, rational=False)
    p.add_argument("--base-sub-degree", type=int, default=1)
    _add_common(p)

    p = sub.add_parser("matched-basis", help="verify or search a matched basis")
    _add_field_args(p)
    p.add_argument("--base-sub-degree", type=int, default=1)
    p.add_argument("--a-basis", required=True, help='elements separated by ";"')
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--b-basis", help="ordered basis of B to verify")
    g.add_argument("--b-space", help="spanning set of B to search in")
    _add_common(p)

    p = sub.add_parser("lmp", help="linear matching property sweep")
    _add_field_args(p)
    p.add_argument("--base-sub-degree", type=int, default=1)
    p.add_argument("--dims", type=_int_list)
    p.add_argument("--mode", choices=("auto", "exhaustive", "sampled"), default="auto")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--max-pairs", type=int, default=200_000)
    p.add_argument("--all-witnesses", action="store_true",
                   help="keep sweeping after the first failure")
    _add_common(p)

    p = sub.add_parser("min-lmp-witness", help="prime-degree extension with the LMP")
    _add_field_args(p)
    _add_common(p)

    p = sub.add_parser("prime-combo", help="prime-valued combination of degrees")
    p.add_argument("--degrees", type=_int_list, required=True)
    p.add_argument("--max-total", type=int, default=pd.MAX_TOTAL)
    p.add_argument("--min-coefficient", type=int, default=0)
    _add_common(p)

    p = sub.add_parser("has-root", help="root existence of a polynomial")
    p.add_argument("--poly", required=True, help="little-endian coefficients")
    p.add_argument("--p", type=int)
    p.add_argument("--n", type=int, default=1, help="search roots in GF(p^n)")
    p.add_argument("--rational", action="store_true")
    _add_common(p)
    return parser


def _context(args) -> ExtensionContext:
    if getattr(args, "rational", False):
        if not args.modulus:
            raise _UsageError("--rational needs --modulus")
        return ExtensionContext.parse(args.modulus, QQ)
    if args.p is None:
        raise _UsageError("--p is required")
    if args.modulus:
        return ExtensionContext.parse(args.modulus, args.p)
    if args.n is None:
        raise _UsageError("give --n or --modulus")
    return ExtensionContext.galois(args.p, args.n)


def _field_config(args, ctx: ExtensionContext) -> dict:
    return {
        "base": str(ctx.base),
        "p": ctx.characteristic,
        "n": ctx.degree,
        "modulus": ctx.modulus.to_text(),
    }


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def _match_group(args) -> Report:
    G = gm.GroupSpec.parse(args.group)
    A = gm.GroupSubset.parse(G, args.set_a)
    B = gm.GroupSubset.parse(G, args.set_b)
    phi = gm.find_matching(A, B)
    result = {"size": len(A), "exhaustive_check": None}
    if len(A) <= gm.EXHAUSTIVE_LIMIT:
        exists = gm.exhaustive_matching_exists(A, B)
        if exists != (phi is not None):
            raise InvariantViolation("augmenting-path search disagrees with the exhaustive oracle")
        result["exhaustive_check"] = exists
    witness = None
    if phi is not None:
        witness = [[G.format_element(a), G.format_element(b)] for a, b in phi.pairs]
    config = {"group": str(G), "set_a": A.to_text(), "set_b": B.to_text(), "seed": args.seed}
    return Report("match-group", config, "matching" if phi else "no-matching", result, witness,
                  {"mode": "exhaustive"})


def _field_info(args) -> Report:
    ctx = _context(args)
    m0 = args.base_sub_degree
    subfields = []
    for m in subfield_degrees(ctx):
        S = subfield_basis(ctx, m)
        subfields.append({"m": m, "size": S.order, "basis": [b.to_text() for b in S.basis]})
    inter = lm.intermediate_subfield_degrees(ctx, m0)
    result = {
        "order": ctx.order,
        "subfield_degrees": subfield_degrees(ctx),
        "subfields": subfields,
        "base_sub_degree": m0,
        "relative_degree": ctx.degree // m0,
        "intermediate_degrees": inter,
    }
    config = {**_field_config(args, ctx), "base_sub_degree": m0, "seed": args.seed}
    verdict = "intermediate-subfield" if inter else "no-intermediate-subfield"
    return Report("field-info", config, verdict, result, None, {"mode": "exhaustive"})


def _matched_basis(args) -> Report:
    ctx = _context(args)
    m0 = 1 if ctx.base == QQ else args.base_sub_degree
    ext = lm.relative_extension(ctx, m0)
    a_basis = lm.BasisTuple.of(ext, [ctx.from_text(t) for t in _elements(args.a_basis)])
    config = {**_field_config(args, ctx), "base_sub_degree": m0,
              "a_basis": a_basis.to_texts(), "seed": args.seed}
    if args.b_basis:
        b_basis = lm.BasisTuple.of(ext, [ctx.from_text(t) for t in _elements(args.b_basis)])
        config["b_basis"] = b_basis.to_texts()
        cert = lm.certify(a_basis, b_basis)
        verdict = "matched" if cert else "not-matched"
        witness = cert.to_dict() if cert else None
        return Report("matched-basis", config, verdict, {"mode": "verify"}, witness)
    B = lm.Subspace.span(ext, [ctx.from_text(t) for t in _elements(args.b_space)])
    config["b_space"] = B.to_texts()
    found = lm.find_matched_basis(a_basis, B)
    if found is None:
        return Report("matched-basis", config, "none-exists", {"mode": "search"}, None)
    cert = lm.certify(a_basis, found)
    return Report("matched-basis", config, "matched", {"mode": "search"}, cert.to_dict())


def _lmp(args) -> Report:
    ctx = _context(args)
    m0 = 1 if ctx.base == QQ else args.base_sub_degree
    rep = lm.linear_matching_property_by_search(
        ctx, m0, args.dims, mode=args.mode, max_pairs=args.max_pairs, samples=args.samples,
        seed=args.seed, stop_at_first=not args.all_witnesses)
    config = {**_field_config(args, ctx), "base_sub_degree": m0, "dims": rep.dims,
              "mode": args.mode, "samples": args.samples, "max_pairs": args.max_pairs,
              "seed": args.seed}
    result = rep.to_dict()
    coverage = {"mode": rep.coverage, "pairs": rep.pairs_checked, "bases": rep.bases_checked}
    if ctx.is_finite:
        result["has_proper_intermediate_subfield"] = lm.has_proper_intermediate_subfield(ctx, m0)
    return Report("lmp", config, rep.verdict, result, rep.witness, coverage)


def _min_lmp_witness(args) -> Report:
    if args.rational:
        base = QQ
    elif args.p is not None:
        base = PrimeField(args.p)
    else:
        raise _UsageError("give --p or --rational")
    if not args.modulus:
        if base == QQ:
            raise _UsageError("--rational needs --modulus")
        f = pd.prime_degree_irreducible_witness(args.p)
    else:
        f = Polynomial.from_text(args.modulus, base)
    ctx = lm.minimal_lmp_witness(base, f)
    config = {"base": str(base), "modulus": f.to_text(), "seed": args.seed}
    result = {"degree": ctx.degree, "modulus": ctx.modulus.to_text(),
              "extension": ctx.describe(), "intermediate_degrees": []}
    return Report("min-lmp-witness", config, "witness", result, {"modulus": ctx.modulus.to_text()})


def _prime_combo(args) -> Report:
    sol = pd.prime_combination(args.degrees, args.max_total, args.min_coefficient)
    config = {"degrees": list(args.degrees), "max_total": args.max_total,
              "min_coefficient": args.min_coefficient, "seed": args.seed}
    result = {"coefficients": list(sol.coefficients), "total": sol.total}
    return Report("prime-combo", config, "prime-found", result,
                  {"coefficients": list(sol.coefficients), "total": sol.total})


def _has_root(args) -> Report:
    if args.rational:
        f = Polynomial.from_text(args.poly, QQ)
        field, where = None, "Q"
    else:
        if args.p is None:
            raise _UsageError("give --p or --rational")
        f = Polynomial.from_text(args.poly, args.p)
        field = None if args.n == 1 else ExtensionContext.galois(args.p, args.n)
        where = f"GF({args.p}^{args.n})"
    found = pd.has_root(f, field)
    result = {"has_root": found, "degree": f.degree, "field": where}
    try:
        result["irreducible"] = poly_is_irreducible(f)
    except LinmatchError:
        result["irreducible"] = None
    config = {"poly": f.to_text(), "field": where, "seed": args.seed}
    return Report("has-root", config, "root" if found else "no-root", result, None,
                  {"mode": "exhaustive"})


_COMMANDS = {
    "match-group": _match_group,
    "field-info": _field_info,
    "matched-basis": _matched_basis,
    "lmp": _lmp,
    "min-lmp-witness": _min_lmp_witness,
    "prime-combo": _prime_combo,
    "has-root": _has_root,
}


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> tuple[int, Optional[Report]]:
    """Run one subcommand; returns the exit code and the report (if any)."""
    stdout = sys.stdout if stdout is None else stdout
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"linmatch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    start = time.perf_counter()
    try:
        report = _COMMANDS[args.command](args)
    except (BoundExceeded, SearchExhausted, TooLarge) as exc:
        print(f"linmatch: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND, None
    except InvariantViolation as exc:
        print(f"linmatch: internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT, None
    except (_UsageError, LinmatchError, ValueError, ZeroDivisionError) as exc:
        print(f"linmatch: error: {exc}", file=sys.stderr)
        return EXIT_USAGE, None
    report.wall_time = round(time.perf_counter() - start, 6)
    text = report.render(args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return EXIT_OK, report


def main(argv: Optional[Sequence[str]] = None) -> int:
    return run(argv)[0]


# ---------------------------------------------------------------------------
# Re-verification of stored reports
# ---------------------------------------------------------------------------

def _ctx_from_config(config: dict) -> ExtensionContext:
    base = QQ if config["base"] == "Q" else int(config["p"])
    return ExtensionContext.parse(config["modulus"], base)


def verify_report(report: Report) -> bool:
    """Re-check a report's verdict and witness through the library alone."""
    cmd, cfg, w = report.command, report.config, report.witness
    if cmd == "match-group":
        G = gm.GroupSpec.parse(cfg["group"])
        A = gm.GroupSubset.parse(G, cfg["set_a"])
        B = gm.GroupSubset.parse(G, cfg["set_b"])
        if report.verdict == "matching":
            pairs = tuple((G.reduce(tuple(map(int, a.split(",")))),
                           G.reduce(tuple(map(int, b.split(","))))) for a, b in w)
            return gm.is_matching(A, B, gm.GroupMatching(pairs))
        return not gm.exhaustive_matching_exists(A, B)
    if cmd == "field-info":
        ctx = _ctx_from_config(cfg)
        for sub in report.result["subfields"]:
            elems = _span(ctx, sub["basis"])
            if len(elems) != sub["size"]:
                return False
            if sub["size"] <= 256 and any(x * y not in elems for x in elems for y in elems):
                return False
        return True
    if cmd == "matched-basis":
        ctx = _ctx_from_config(cfg)
        ext = lm.relative_extension(ctx, cfg["base_sub_degree"])
        a_basis = lm.BasisTuple.of(ext, [ctx.from_text(t) for t in cfg["a_basis"]])
        if report.verdict == "matched":
            b_basis = lm.BasisTuple.of(ext, [ctx.from_text(t) for t in w["b_basis"]])
            return lm.is_matched_basis(a_basis, b_basis)
        if report.verdict == "not-matched":
            b_basis = lm.BasisTuple.of(ext, [ctx.from_text(t) for t in cfg["b_basis"]])
            return not lm.is_matched_basis(a_basis, b_basis)
        B = lm.Subspace.span(ext, [ctx.from_text(t) for t in cfg["b_space"]])
        return lm.find_matched_basis(a_basis, B, strategy="exhaustive") is None
    if cmd == "lmp":
        if report.verdict == "holds":
            return w is None
        return lm.verify_lmp_witness(_ctx_from_config(cfg), cfg["base_sub_degree"], w)
    if cmd == "min-lmp-witness":
        base = QQ if cfg["base"] == "Q" else int(cfg["base"][3:-1])
        f = Polynomial.from_text(w["modulus"], base)
        return lm.minimal_lmp_witness(base, f).degree == report.result["degree"]
    if cmd == "prime-combo":
        sol = pd.PrimeComboSolution(tuple(cfg["degrees"]), tuple(w["coefficients"]), w["total"])
        return sol.total == report.result["total"]
    if cmd == "has-root":
        if cfg["field"] == "Q":
            found = pd.has_root(Polynomial.from_text(cfg["poly"], QQ))
        else:
            p, n = map(int, cfg["field"][3:-1].split("^"))
            field = None if n == 1 else ExtensionContext.galois(p, n)
            found = pd.has_root(Polynomial.from_text(cfg["poly"], p), field)
        return found == report.result["has_root"] == (report.verdict == "root")
    raise ValueError(f"unknown command {cmd!r}")


def _span(ctx: ExtensionContext, texts: list) -> set:
    basis = [ctx.from_text(t) for t in texts]
    p = ctx.base.p
    out = set()
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        acc = ctx.zero
        for c, b in zip(coeffs, basis):
            acc = acc + b * c
        out.add(acc)
    return out


if __name__ == "__main__":
    sys.exit(main())
