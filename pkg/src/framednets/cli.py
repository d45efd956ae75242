"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical check fails, 2 on bad input.
All numbers in the output are exact (integers, ``p/16`` weights, ``a/b``
rationals and ``(a+b√2)/2^e`` scalars with their integer triples).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import catalog
from .codes import BinaryCode, BitWord, build_chain, divisibility_class, dual, make_code
from .errors import FramedNetError, InputError, ModelInconsistency
from .extension import StructureCodes, build_delta, certify_main_theorem, check_chain
from .induction import AlphaClass, BetaReport, beta_report, full_report
from .ising import DyadicRootTwo, SixteenthWeight
from .pointed import discriminate

COMMANDS = ("verify", "sectors", "beta", "chain", "delta", "discriminate", "catalog")


class UsageError(Exception):
    pass


# -- input ---------------------------------------------------------------------


def load_code(ref: str) -> BinaryCode:
    """Read a code from a JSON file, or from the catalog by name."""
    if not os.path.exists(ref) and ref in catalog.CATALOG:
        return catalog.get(ref)
    try:
        with open(ref, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read code file {ref!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"{ref}: invalid JSON ({exc.msg})") from None
    return code_from_json(doc)


def code_from_json(doc: Any) -> BinaryCode:
    if isinstance(doc, list):
        doc = {"generators": doc}
    if not isinstance(doc, dict) or not isinstance(doc.get("generators"), list):
        raise UsageError('code JSON must be {"length": n, "generators": ["0101...", ...]}')
    gens = doc["generators"]
    length = doc.get("length")
    if length is None:
        if not gens:
            raise UsageError("length is required when there are no generators")
        length = len(gens[0])
    if not isinstance(length, int) or any(not isinstance(g, str) for g in gens):
        raise UsageError("length must be an integer and generators bitstrings")
    try:
        return make_code(length, [BitWord.from_string(g) for g in gens])
    except InputError as exc:
        raise UsageError(str(exc)) from None


def code_to_json(C: BinaryCode) -> dict[str, Any]:
    return {"length": C.length, "generators": C.generator_strings()}


# -- rendering helpers -------------------------------------------------------------


def scalar(x: DyadicRootTwo) -> dict[str, Any]:
    return {"value": str(x), "a": x.a, "b": x.b, "e": x.e}


def weight_str(w: SixteenthWeight) -> str:
    return f"{w.numerator}/16"


def spin_str(w: SixteenthWeight) -> str:
    return {0: "+1", 8: "-1"}.get(w.spin_exponent, f"exp(2πi·{w.spin_exponent}/16)")


def class_doc(c: AlphaClass) -> dict[str, Any]:
    return {
        "rep": str(c.rep),
        "weight": weight_str(c.spin),
        "weight_reduced": c.spin.reduced(),
        "spin": spin_str(c.spin),
    }


def beta_doc(r: BetaReport, classes: bool = True) -> dict[str, Any]:
    doc = {
        "beta": str(r.beta),
        "weight": r.weight,
        "num_lambda": r.num_lambda,
        "c_beta_size": r.c_beta_size,
        "num_classes": r.num_classes,
        "m": r.multiplicity_m,
        "t": r.split_t,
        "d": r.irreducible_dim_d,
        "lambda_dim": scalar(DyadicRootTwo.sqrt2_power(r.weight)),
        "mu_contribution": r.mu_contribution,
        "sectors": r.num_sectors,
        "spins": sorted(spin_str(c.spin) for c in r.class_list for _ in range(r.split_t)),
    }
    if classes:
        doc["classes"] = [class_doc(c) for c in r.class_list]
    return doc


def render(doc: dict[str, Any], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if fmt == "markdown":
        return _markdown(doc)
    return _text(doc)


def _text(doc: Any, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        if "summary" in doc and indent == 0:
            lines.append(str(doc["summary"]))
        for k in sorted(doc):
            if k == "summary" and indent == 0:
                continue
            v = doc[k]
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(doc, list):
        for item in doc:
            if isinstance(item, dict):
                lines.append(f"{pad}- " + ", ".join(f"{k}={_inline(item[k])}" for k in sorted(item)))
            else:
                lines.append(f"{pad}- {_inline(item)}")
    return "\n".join(lines) + "\n"


def _flat_list(v: Any) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _inline(v: Any) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        if "value" in v:
            return str(v["value"])
        return "{" + ", ".join(f"{k}={_inline(v[k])}" for k in sorted(v)) + "}"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _markdown(doc: dict[str, Any]) -> str:
    out = [f"# {doc.get('command', 'report')}", ""]
    if "summary" in doc:
        out += [f"**{doc['summary']}**", ""]
    scalars = {k: v for k, v in doc.items() if not isinstance(v, list) or _flat_list(v)}
    scalars.pop("summary", None)
    if scalars:
        out += ["| key | value |", "|---|---|"]
        out += [f"| {k} | {_inline(scalars[k])} |" for k in sorted(scalars)]
        out.append("")
    for k in sorted(doc):
        v = doc[k]
        if isinstance(v, list) and v and isinstance(v[0], dict):
            cols = [c for c in sorted(v[0]) if not isinstance(v[0][c], list) or _flat_list(v[0][c])]
            out += [f"## {k}", "", "| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
            for row in v:
                out.append("| " + " | ".join(_inline(row.get(c, "")) for c in cols) + " |")
            out.append("")
    return "\n".join(out)


# -- commands ----------------------------------------------------------------------


def _codes(args: argparse.Namespace, need_d: bool) -> tuple[BinaryCode | None, BinaryCode | None]:
    C = load_code(args.c_code) if args.c_code else None
    D = load_code(args.d_code) if args.d_code else None
    if D is None and args.catalog:
        D = catalog.get(args.catalog)
    if C is None and D is None:
        raise UsageError("give --c-code and/or --d-code (a JSON file or a catalog name)")
    if C is not None and D is not None and C.length != D.length:
        raise UsageError("C and D have different lengths")
    if C is None:
        C = dual(D)
    if D is None and need_d:
        D = dual(C)
    return C, D


def _parse_beta(args: argparse.Namespace, length: int) -> BitWord | None:
    if args.beta is None:
        return None
    try:
        beta = BitWord.from_string(args.beta)
    except InputError as exc:
        raise UsageError(str(exc)) from None
    if beta.length != length:
        raise UsageError(f"--beta has length {beta.length}, codes have length {length}")
    return beta


def cmd_verify(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    C, D = _codes(args, need_d=True)
    cert = certify_main_theorem(StructureCodes(C, D), threads=args.threads)
    doc: dict[str, Any] = {
        "command": "verify",
        "summary": cert.summary,
        "passed": cert.passed,
        "failed_stage": cert.failed_stage,
        "c_code": code_to_json(C),
        "d_code": code_to_json(D),
        "stages": [{"stage": s, "ok": ok} for s, ok in cert.stages],
        "details": {k: {kk: _jsonable(vv) for kk, vv in v.items()} for k, v in cert.detail.items()},
    }
    if cert.report is not None:
        doc["total_sectors"] = cert.report.total_sectors
        doc["total_mu"] = cert.report.total_mu
    if cert.mu is not None:
        doc["holomorphic_mu"] = _fraction(cert.mu)
    if cert.delta is not None:
        doc["delta"] = _delta_entries(cert.delta)
    if cert.chains:
        doc["chains"] = [{"beta": str(w.beta), "ranks": list(w.ranks), "valid": w.valid} for w in cert.chains]
    return (0 if cert.passed else 1), doc


def cmd_sectors(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    C, _ = _codes(args, need_d=False)
    try:
        report = full_report(C, threads=args.threads)
    except ModelInconsistency as exc:
        return 1, {"command": "sectors", "summary": f"model inconsistency: {exc}",
                   "failed_stage": "sector accounting", "quantities": exc.quantities}
    # round i lists the i-th copy of every class, lightest first
    ordered = sorted(report.sectors(), key=lambda ci: (ci[1], ci[0].spin, ci[0].beta, ci[0].rep.sort_key()))
    weights = [c.spin for c, _ in ordered]
    summary = (f"{report.total_sectors} sectors; weights "
               f"{', '.join(w.reduced() for w in weights)}; μ = {report.total_mu}")
    doc = {
        "command": "sectors",
        "summary": summary,
        "c_code": code_to_json(C),
        "dual_rank": report.dual.rank,
        "total_sectors": report.total_sectors,
        "total_mu": report.total_mu,
        "target_mu": report.target_mu,
        "consistent": report.consistent,
        "weights": [weight_str(w) for w in weights],
        "betas": [beta_doc(r, classes=False) for r in report.beta_reports],
    }
    return (0 if report.consistent else 1), doc


def cmd_beta(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    C, _ = _codes(args, need_d=False)
    beta = _parse_beta(args, C.length)
    if beta is None:
        raise UsageError("beta needs --beta BITSTRING")
    try:
        r = beta_report(C, beta)
    except ModelInconsistency as exc:
        return 1, {"command": "beta", "summary": f"model inconsistency: {exc}", "quantities": exc.quantities}
    except FramedNetError as exc:
        return 1, {"command": "beta", "summary": str(exc)}
    doc = {"command": "beta", "summary": f"{r.num_sectors} sectors with tau-word {beta}", **beta_doc(r)}
    return 0, doc


def cmd_chain(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    _, D = _codes(args, need_d=True)
    beta = _parse_beta(args, D.length)
    one = BitWord.ones(D.length)
    betas = [beta] if beta is not None else [b for b in D.codewords() if b.bits not in (0, one.bits)]
    if not betas:
        return 1, {"command": "chain", "summary": "no admissible β (D has no word besides (0)_n, (1)_n)"}
    chains = []
    ok = True
    for b in betas:
        try:
            steps = build_chain(D, b)
        except InputError as exc:
            return 1, {"command": "chain", "summary": str(exc)}
        w = check_chain(D, b)
        ok &= w.valid
        chains.append({
            "beta": str(b),
            "valid": w.valid,
            "problems": list(w.problems),
            "steps": [
                {"r": r, "rank": Dr.rank, "divisibility": divisibility_class(Dr),
                 "dual_rank": Cr.rank, "generators": Dr.generator_strings()}
                for r, (Dr, Cr) in enumerate(steps, start=1)
            ],
        })
    doc = {"command": "chain", "summary": f"{len(chains)} chain(s), {'all valid' if ok else 'INVALID'}",
           "chains": chains}
    return (0 if ok else 1), doc


def _delta_entries(delta) -> list[dict[str, Any]]:
    return [{"beta": str(b), **class_doc(c)} for b, c in delta.entries]


def cmd_delta(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    C, D = _codes(args, need_d=True)
    try:
        delta = build_delta(StructureCodes(C, D))
    except FramedNetError as exc:
        return 1, {"command": "delta", "summary": f"construction failure: {exc}"}
    doc = {
        "command": "delta",
        "summary": f"Δ-table with {len(delta)} spin-1 entries",
        "entries": _delta_entries(delta),
        "generators": [{"beta": str(b), "rep": str(s)} for b, s in delta.generator_choices],
        "generated": [
            {"beta": str(g.beta), "rep": str(g.alpha_class.rep), "spin": spin_str(g.alpha_class.spin),
             "matches_chosen": g.matches_chosen}
            for g in delta.generated
        ],
        "generated_mismatches": [str(b) for b in delta.mismatches],
    }
    return 0, doc


def abelian_groups(order: int) -> list[tuple[int, ...]]:
    """Abelian groups of the given order as lists of prime-power cyclic factors."""

    def partitions(n: int, largest: int) -> list[list[int]]:
        if n == 0:
            return [[]]
        return [[k, *rest] for k in range(min(n, largest), 0, -1) for rest in partitions(n - k, k)]

    factors: list[tuple[int, int]] = []
    m, p = order, 2
    while m > 1:
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        if e:
            factors.append((p, e))
        p += 1
    groups: list[tuple[int, ...]] = [()]
    for p, e in factors:
        groups = [g + tuple(p**k for k in part) for g in groups for part in partitions(e, e)]
    return [g or (1,) for g in groups]


def cmd_discriminate(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    if not args.spins:
        raise UsageError("discriminate needs --spins, e.g. --spins 0,2,8,2 (sixteenths)")
    try:
        spins = [int(s) for s in args.spins.split(",")]
        groups = ([tuple(int(x) for x in g.split(",")) for g in args.groups] if args.groups
                  else abelian_groups(len(spins)))
    except ValueError:
        raise UsageError("spins and groups are comma-separated integers") from None
    results = discriminate(spins, groups)
    doc = {
        "command": "discriminate",
        "spins": [f"{s % 16}/16" for s in spins],
        "summary": "admissible: " + (", ".join("Z" + "xZ".join(map(str, r.orders)) for r in results if r.admissible)
                                     or "none"),
        "groups": [
            {"group": list(r.orders), "admissible": r.admissible, "assignments_tried": r.tried,
             "witness": [f"{s}/16" for _, s in r.witness.spins] if r.witness else None}
            for r in results
        ],
    }
    return (0 if any(r.admissible for r in results) else 1), doc


def cmd_catalog(args: argparse.Namespace) -> tuple[int, dict[str, Any]]:
    names = [args.catalog] if args.catalog else list(catalog.CATALOG)
    entries = []
    for name in names:
        try:
            C = catalog.get(name)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
        entries.append({"name": name, "description": catalog.CATALOG[name][0], **code_to_json(C), "rank": C.rank})
    return 0, {"command": "catalog", "summary": f"{len(entries)} code(s)", "codes": entries}


def _fraction(x: Fraction) -> str:
    return str(x)


def _jsonable(v: Any) -> Any:
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, Fraction):
        return str(v)
    return str(v)


HANDLERS = {
    "verify": cmd_verify,
    "sectors": cmd_sectors,
    "beta": cmd_beta,
    "chain": cmd_chain,
    "delta": cmd_delta,
    "discriminate": cmd_discriminate,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="framednets",
        description="Sector theory of code nets and holomorphic framed-extension certificates.",
    )
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--c-code", metavar="PATH", help="C as a JSON code file or catalog name")
    ap.add_argument("--d-code", metavar="PATH", help="D as a JSON code file or catalog name")
    ap.add_argument("--beta", metavar="BITSTRING", help="a tau-word, e.g. 1111111100000000")
    ap.add_argument("--format", choices=("json", "markdown", "text"), default="text")
    ap.add_argument("--catalog", metavar="NAME", help="built-in code (used as D when no code is given)")
    ap.add_argument("--threads", type=int, default=1, metavar="N")
    ap.add_argument("--spins", help="discriminate: comma-separated spin numerators in sixteenths")
    ap.add_argument("--groups", action="append", metavar="ORDERS",
                    help="discriminate: a candidate group as cyclic orders, e.g. 2,2 (repeatable)")
    return ap


def run(argv: Sequence[str] | None = None) -> tuple[int, str]:
    """Parse ``argv`` and execute; returns ``(exit status, rendered report)``."""
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        return 2, "error: --threads must be positive\n"
    try:
        status, doc = HANDLERS[args.command](args)
    except UsageError as exc:
        return 2, f"error: {exc}\n"
    except KeyError as exc:
        return 2, f"error: {exc.args[0]}\n"
    except InputError as exc:
        return 2, f"error: {exc}\n"
    return status, render(doc, args.format)


def main(argv: Sequence[str] | None = None) -> int:
    status, out = run(argv)
    (sys.stdout if status != 2 else sys.stderr).write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
