"""Command-line front end.

Input files are JSON documents. A system file::

    {"m": 3, "n": 3, "p": 1, "r": 1,
     "E": [["0", "1", "0"], ...], "A": [...], "C": [["0", "0", "1"]], "L": [["0", "1", "0"]]}

A canonical-form file::

    {"epsilon": [1], "jf": [{"eigenvalue": "2", "size": 1}], "sigma": [3], "eta": [],
     "C": [[...]], "L": [[...]]}

Entries are strings ``"p"`` or ``"p/q"`` (plain JSON integers are accepted as
well). Exit status: 0 when the analysis ran (whatever the verdict), 2 on bad
input, 3 when two criteria that must agree disagree.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any

from .criteria import (
    InternalInconsistency,
    ObservabilityReport,
    analyze,
    check_darouach,
    check_pio_rank,
    check_pio_wong,
)
from .kcf import KcfSpec, KcfSystem, assemble, check_thm1, oracle_pio
from .pencil import DescriptorSystem, InvalidL, augment
from .ratmat import DimensionMismatch, Mat
from .wong import wong_sequence
from .subspace import intersect, image, preimage

EXIT_OK, EXIT_INPUT, EXIT_INCONSISTENT = 0, 2, 3

_ENTRY = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")
SYSTEM_KEYS = {"m", "n", "p", "r", "E", "A", "C", "L"}
KCF_KEYS = {"epsilon", "jf", "sigma", "eta", "C", "L"}


class ParseError(ValueError):
    pass


def parse_entry(value: Any, where: str) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"{where}: booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ParseError(f"{where}: expected a string like '3' or '-1/2', got {value!r}")
    m = _ENTRY.match(value)
    if not m:
        raise ParseError(f"{where}: cannot parse {value!r} as a rational")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"{where}: zero denominator in {value!r}")
    return Fraction(int(m.group(1)), den)


def parse_count(value: Any, where: str, minimum: int = 0) -> int:
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ParseError(f"{where}: expected an integer >= {minimum}, got {value!r}")
    return value


def parse_matrix(value: Any, name: str, rows: int | None, cols: int) -> Mat:
    if not isinstance(value, list) or any(not isinstance(r, list) for r in value):
        raise ParseError(f"{name}: expected a list of rows")
    if rows is not None and len(value) != rows:
        raise DimensionMismatch(f"{name}: expected {rows} rows, got {len(value)}")
    for i, row in enumerate(value):
        if len(row) != cols:
            raise DimensionMismatch(f"{name}: row {i} has {len(row)} entries, expected {cols}")
    data = [[parse_entry(x, f"{name}[{i}][{j}]") for j, x in enumerate(row)] for i, row in enumerate(value)]
    return Mat(data, cols=cols)


def _load_json(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    return doc


def _reject_unknown(doc: dict, allowed: set[str]) -> None:
    unknown = sorted(set(doc) - allowed)
    if unknown:
        raise ParseError(f"unknown top-level key(s): {', '.join(unknown)}")


def system_from_dict(doc: dict) -> DescriptorSystem:
    _reject_unknown(doc, SYSTEM_KEYS)
    missing = sorted(SYSTEM_KEYS - set(doc))
    if missing:
        raise ParseError(f"missing key(s): {', '.join(missing)}")
    m = parse_count(doc["m"], "m")
    n = parse_count(doc["n"], "n", minimum=1)
    p = parse_count(doc["p"], "p")
    r = parse_count(doc["r"], "r")
    return DescriptorSystem(
        parse_matrix(doc["E"], "E", m, n),
        parse_matrix(doc["A"], "A", m, n),
        parse_matrix(doc["C"], "C", p, n),
        parse_matrix(doc["L"], "L", r, n),
    )


def kcf_from_dict(doc: dict) -> KcfSystem:
    _reject_unknown(doc, KCF_KEYS)
    for key in ("C", "L"):
        if key not in doc:
            raise ParseError(f"missing key: {key}")

    def counts(key: str, minimum: int) -> tuple[int, ...]:
        val = doc.get(key, [])
        if not isinstance(val, list):
            raise ParseError(f"{key}: expected a list of counts")
        return tuple(parse_count(x, f"{key}[{i}]", minimum) for i, x in enumerate(val))

    jf_raw = doc.get("jf", [])
    if not isinstance(jf_raw, list):
        raise ParseError("jf: expected a list of {eigenvalue, size} objects")
    jf = []
    for i, blk in enumerate(jf_raw):
        if not isinstance(blk, dict) or set(blk) != {"eigenvalue", "size"}:
            raise ParseError(f"jf[{i}]: expected an object with keys eigenvalue and size")
        jf.append((parse_entry(blk["eigenvalue"], f"jf[{i}].eigenvalue"), parse_count(blk["size"], f"jf[{i}].size", 1)))
    spec = KcfSpec(
        epsilon_sizes=counts("epsilon", 0),
        finite_jordan=tuple(jf),
        sigma_sizes=counts("sigma", 1),
        eta_sizes=counts("eta", 0),
    )
    if spec.n < 1:
        raise DimensionMismatch("blocks give n = 0")
    return KcfSystem(spec, parse_matrix(doc["C"], "C", None, spec.n), parse_matrix(doc["L"], "L", None, spec.n))


def load_system(path: str) -> DescriptorSystem:
    return system_from_dict(_load_json(path))


def load_kcf(path: str) -> KcfSystem:
    return kcf_from_dict(_load_json(path))


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def format_vector(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def format_report(sys_: DescriptorSystem, rep: ObservabilityReport) -> str:
    lines = [
        f"system: m={sys_.m} n={sys_.n} p={sys_.p} r={sys_.r}",
        f"Darouach rank test (published)        : {'satisfied' if rep.darouach_eq2 else 'violated'}",
        f"I-observable (rank test)              : {_yn(rep.i_obs_rank)}",
        f"I-observable (Wong test)              : {_yn(rep.i_obs_wong)}",
        f"partially impulse observable (rank)   : {_yn(rep.pio_rank)}   [l = {rep.l}]",
        f"partially impulse observable (Wong)   : {_yn(rep.pio_wong)}",
    ]
    if rep.discrepancy_flag:
        lines.append("DISCREPANCY: the published rank test disagrees with the verdict above")
    lines.append("rank details:")
    for l, a, b in rep.rank_details:
        mark = "=" if a == b else "!="
        lines.append(f"  l={l}: rank F_l = {a} {mark} {b} = rank F_l,L")
    if rep.witness is not None:
        lines.append(f"witness (L w != 0): {format_vector(rep.witness)}")
    return "\n".join(lines)


def cmd_check(path: str, as_json: bool = False, l: int | None = None) -> int:
    sys_ = load_system(path)
    rep = analyze(sys_, l=l)
    if as_json:
        print(json.dumps(rep.to_dict(), sort_keys=True, indent=2))
    else:
        print(format_report(sys_, rep))
    return EXIT_OK


def cmd_wong(path: str) -> int:
    sys_ = load_system(path)
    aug = augment(sys_)
    seq = wong_sequence(aug.Ebar, aug.Abar)
    inter = intersect(seq.limit, preimage(aug.Abar, image(aug.Ebar)))
    dims = seq.dims[1:]
    print(f"Wong sequence dims W^1..W^s: {', '.join(map(str, dims)) if dims else '-'}")
    print(f"stabilization index s: {seq.stabilization_index}")
    print(f"limit dim: {seq.limit.dim}")
    for v in seq.limit.vectors():
        print(f"  limit basis {format_vector(v)}")
    print(f"intersection with Abar^-1(im Ebar) dim: {inter.dim}")
    for v in inter.vectors():
        print(f"  intersection basis {format_vector(v)}")
    return EXIT_OK


def cmd_kcf(path: str, as_json: bool = False) -> int:
    ks = load_kcf(path)
    sys_ = assemble(ks)
    verdicts = {
        "thm1": check_thm1(ks),
        "oracle": oracle_pio(ks),
        "pio_rank": check_pio_rank(sys_),
        "pio_wong": check_pio_wong(sys_),
    }
    agree = len(set(verdicts.values())) == 1
    if as_json:
        out = dict(verdicts, darouach_eq2=check_darouach(sys_), agree=agree, n=ks.n)
        print(json.dumps(out, sort_keys=True, indent=2))
    else:
        print(f"canonical system: n={ks.n} p={ks.p} r={ks.r}")
        for k, v in verdicts.items():
            print(f"{k:<10}: {_yn(v)}")
        print(f"{'darouach':<10}: {'satisfied' if check_darouach(sys_) else 'violated'}")
        print("AGREE" if agree else "DISAGREE")
    return EXIT_OK if agree else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="impobs", description="Impulse observability of descriptor systems")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("check", help="analyze a system file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true", help="machine-readable report")
    p.add_argument("--l", type=int, default=None, help="block count for the rank test (>= n + 1)")
    p = sub.add_parser("wong", help="print the Wong sequence trace of a system file")
    p.add_argument("file")
    p = sub.add_parser("kcf", help="check a system given by canonical-form blocks")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            return cmd_check(args.file, args.json, args.l)
        if args.command == "wong":
            return cmd_wong(args.file)
        return cmd_kcf(args.file, args.json)
    except (ParseError, DimensionMismatch, InvalidL, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())
