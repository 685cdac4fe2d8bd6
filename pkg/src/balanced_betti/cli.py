"""Command line: Betti tables, bound reports, generators and the linear-strand scan.

Exit codes: 0 success, 2 parse error, 3 vertex cap exceeded, 4 hypothesis
check failed, 5 empty construction pool.
"""

from __future__ import annotations

import argparse
import hashlib
import io
import json
import os
import random
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable

from .bounds import applicable_bounds, betti_cross_stacked_closed
from .complex import ComplexError, SimplicialComplex
from .generators import (
    FAMILIES,
    GluingPlan,
    cross_polytope_boundary,
    even_cycle,
    generate,
    stacked_cross_polytopal,
)
from .hochster import DEFAULT_CAP, BettiTable, CapExceeded, graded_betti, linear_strand
from .homology import FieldSpec
from .io import ComplexFormatError, dumps, read_complex, to_document

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_HYPOTHESIS, EXIT_EMPTY = 0, 2, 3, 4, 5
TAGS = ("balanced", "cm", "pseudomanifold")


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


# -- betti ----------------------------------------------------------------------


def _cache_path(cx: SimplicialComplex, fld: FieldSpec, max_j: int | None) -> Path | None:
    root = os.environ.get("BETTI_CACHE_DIR")
    if not root:
        return None
    key = json.dumps([to_document(cx), fld.name, max_j], sort_keys=True)
    return Path(root) / (hashlib.sha256(key.encode()).hexdigest()[:32] + ".csv")


def compute_table(cx: SimplicialComplex, fld: FieldSpec, max_j: int | None = None,
                  threads: int = 1, cap: int = DEFAULT_CAP) -> BettiTable:
    """:func:`graded_betti` with an optional on-disk cache under ``BETTI_CACHE_DIR``."""
    path = _cache_path(cx, fld, max_j)
    if path is not None and path.exists():
        table = BettiTable.from_csv(path.read_text(), cx.n, cx.d, fld.name)
        table.max_j = max_j
        return table
    table = graded_betti(cx, fld, max_j, cap=cap, threads=threads)
    if path is not None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(table.to_csv())
    return table


def render_table(table: BettiTable) -> str:
    return table.to_csv() + "\n" + f"field: {table.field}\n\n" + table.to_markdown()


def cmd_betti(args) -> int:
    cx, _ = _load(args.file)
    fld = _field(args.field)
    table = _run_capped(lambda: compute_table(cx, fld, args.max_j, args.threads, args.cap))
    if args.output:
        Path(args.output + ".csv").write_text(table.to_csv())
        Path(args.output + ".md").write_text(f"field: {table.field}\n\n" + table.to_markdown())
    else:
        sys.stdout.write(render_table(table))
    return EXIT_OK


# -- bounds ----------------------------------------------------------------------


@dataclass
class BoundReport:
    """Actual Betti numbers next to every bound whose hypotheses were claimed.

    Bound columns are only filled once the claimed tags are verified (or
    trusted); ``passed`` means every populated slack is non-negative.
    """

    complex_id: str
    field: str
    claimed: list[str]
    verified: dict[str, bool]
    trusted: bool
    bounds: list[str] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)
    applicable: bool = True
    passed: bool = True
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=1) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        cols = ["i", "j", "actual"]
        for b in self.bounds:
            cols += [b, f"slack_{b}"]
        buf.write(",".join(cols) + "\n")
        for row in self.rows:
            vals = [row["i"], row["j"], row["actual"]]
            for b in self.bounds:
                v = row["bounds"].get(b)
                s = row["slack"].get(b)
                vals += ["" if v is None else v, "" if s is None else s]
            buf.write(",".join(str(v) for v in vals) + "\n")
        return buf.getvalue()


def verify_tags(cx: SimplicialComplex, tags: list[str], fld: FieldSpec) -> dict[str, bool]:
    out = {}
    for tag in tags:
        if tag == "balanced":
            out[tag] = cx.coloring is not None and cx.is_pure and cx.is_balanced()
        elif tag == "cm":
            out[tag] = cx.is_cohen_macaulay(fld)
        elif tag == "pseudomanifold":
            out[tag] = cx.is_normal_pseudomanifold()
    return out


def build_report(cx: SimplicialComplex, tags: list[str], fld: FieldSpec, *, trust: bool = False,
                 complex_id: str = "", threads: int = 1, cap: int = DEFAULT_CAP) -> BoundReport:
    unknown = set(tags) - set(TAGS)
    if unknown:
        raise CliError(f"unknown hypothesis tags: {', '.join(sorted(unknown))}", EXIT_PARSE)
    verified = {t: True for t in tags} if trust else verify_tags(cx, tags, fld)
    report = BoundReport(complex_id, fld.name, list(tags), verified, trust)
    failed = [t for t, ok in verified.items() if not ok]
    if failed:
        report.applicable = False
        report.passed = False
        report.notes.append(f"hypothesis check failed: {', '.join(failed)}")
        return report
    table = compute_table(cx, fld, None, threads, cap)
    sizes = cx.color_class_sizes() if cx.coloring is not None else None
    specs = applicable_bounds(cx.n, cx.d, sizes, set(tags))
    report.bounds = [s.name for s in specs]
    for j in range(0, cx.d + 1):
        for i in range(0, cx.n + 1):
            actual = table[(i, j)]
            row_bounds, slack = {}, {}
            for spec in specs:
                v = spec(i, j)
                if v is not None:
                    row_bounds[spec.name] = v
                    slack[spec.name] = v - actual
            if actual or any(row_bounds.values()):
                report.rows.append({"i": i, "j": j, "actual": actual, "bounds": row_bounds, "slack": slack})
                if any(s < 0 for s in slack.values()):
                    report.passed = False
    return report


def cmd_bounds(args) -> int:
    cx, _ = _load(args.file)
    fld = _field(args.field)
    tags = [t.strip() for t in args.assume.split(",") if t.strip()]
    report = _run_capped(lambda: build_report(cx, tags, fld, trust=args.trust, complex_id=Path(args.file).name,
                                              threads=args.threads, cap=args.cap))
    out = report.to_csv() if args.format == "csv" else report.to_json()
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    if not report.applicable:
        print(report.notes[0], file=sys.stderr)
        return EXIT_HYPOTHESIS
    return EXIT_OK


# -- generate ----------------------------------------------------------------------


def cmd_generate(args) -> int:
    sizes = None
    if args.sizes:
        try:
            sizes = [int(s) for s in args.sizes.split(",")]
        except ValueError:
            raise CliError(f"bad --sizes {args.sizes!r}", EXIT_PARSE)
    try:
        cx = generate(args.family, d=args.d, k=args.k, n=args.n, sizes=sizes, plan=args.plan, seed=args.seed)
    except (ValueError, ComplexError) as exc:
        raise CliError(str(exc), EXIT_PARSE)
    params = {k: v for k, v in (("d", args.d), ("k", args.k), ("n", args.n), ("sizes", sizes)) if v is not None}
    if args.family == "cross-stacked":
        params["plan"] = args.plan
    meta = {"family": args.family, "params": params, "seed": args.seed}
    text = dumps(cx, meta)
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- conjecture scan -------------------------------------------------------------------

Builder = Callable[[random.Random], SimplicialComplex]


def _sphere_builders(d: int, n: int, depth: int = 0) -> list[tuple[str, Builder]]:
    """Constructions of balanced ``(d-1)``-spheres on ``n`` vertices."""
    out: list[tuple[str, Builder]] = []
    if d == 2 and n >= 4 and n % 2 == 0:
        out.append((f"cycle({n})", lambda rng, m=n // 2: even_cycle(m)))
    if d >= 3 and n % d == 0 and n // d >= 2:
        k = n // d
        out.append((f"cross-stacked(d={d},k={k},path)", lambda rng: stacked_cross_polytopal(d, k, GluingPlan("path"))))
        if k - 2 <= 2 ** (d - 1):
            out.append((f"cross-stacked(d={d},k={k},star)", lambda rng: stacked_cross_polytopal(d, k, GluingPlan("star"))))
        out.append((f"cross-stacked(d={d},k={k},random)",
                    lambda rng: stacked_cross_polytopal(d, k, GluingPlan("random", rng.randrange(1 << 30)))))
    if depth < 2:
        # joins with a cross-polytope boundary; a = 1 is a suspension
        for a in range(1, d - 1):
            for name, inner in _sphere_builders(d - a, n - 2 * a, depth + 1):
                out.append((f"C{a}*{name}", lambda rng, a=a, inner=inner: cross_polytope_boundary(a).join(inner(rng))))
        if d >= 4:
            for m in range(4, n - 3, 2):
                for name, inner in _sphere_builders(d - 2, n - m, depth + 1):
                    if name.startswith("cycle"):
                        out.append((f"cycle({m})*{name}", lambda rng, m=m, inner=inner: even_cycle(m // 2).join(inner(rng))))
    return out


def construction_pool(d: int, k: int) -> list[tuple[str, Builder]]:
    """The documented pool of balanced normal pseudomanifolds on ``kd`` vertices."""
    if d < 3 or k < 2:
        return []
    return _sphere_builders(d, k * d)


def conjecture_scan(d: int, k: int, samples: int, seed: int, cap: int = 20) -> dict:
    pool = construction_pool(d, k)
    if not pool:
        raise CliError(f"no constructions available for d={d}, k={k}", EXIT_EMPTY)
    if k * d > cap:
        raise CliError(f"{k * d} vertices exceeds the linear-strand cap {cap}", EXIT_CAP)
    rng = random.Random(seed)
    target = [betti_cross_stacked_closed(k, d, i, 1) for i in range(k * d)]
    records, violations = [], []
    for s in range(samples):
        name, build = pool[rng.randrange(len(pool))]
        cx = build(rng)
        if not (cx.n == k * d and cx.d == d and cx.is_balanced() and cx.is_normal_pseudomanifold()):
            records.append({"sample": s, "construction": name, "skipped": "not a balanced normal pseudomanifold"})
            continue
        strand = linear_strand(cx, cap=cap)
        over = [i for i, (a, b) in enumerate(zip(strand, target)) if a > b]
        rec = {"sample": s, "construction": name, "linear_strand": strand, "equal": strand == target}
        records.append(rec)
        if over:
            violations.append({**rec, "indices": over, "facets": sorted(cx.facet_lists())})
    return {"d": d, "k": k, "samples": samples, "seed": seed, "target": target,
            "pool": [name for name, _ in pool], "records": records, "violations": violations}


def cmd_conjecture_scan(args) -> int:
    if args.samples < 1:
        raise CliError("--samples must be at least 1", EXIT_PARSE)
    if args.d == 3:
        print("warning: the conjectured inequality is stated for d >= 4; d = 3 is scanned anyway", file=sys.stderr)
    result = conjecture_scan(args.d, args.k, args.samples, args.seed)
    sys.stdout.write(json.dumps(result, sort_keys=True, indent=1) + "\n")
    n_eq = sum(1 for r in result["records"] if r.get("equal"))
    print(f"{len(result['violations'])} violations, {n_eq} samples with equality, "
          f"{len(result['records'])} samples", file=sys.stderr)
    return EXIT_OK


# -- plumbing ----------------------------------------------------------------------------


def _load(path: str) -> tuple[SimplicialComplex, dict]:
    try:
        return read_complex(path)
    except ComplexFormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE)


def _field(text: str) -> FieldSpec:
    try:
        return FieldSpec.parse(text)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE)


def _run_capped(fn):
    try:
        return fn()
    except CapExceeded as exc:
        raise CliError(str(exc), EXIT_CAP)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="balanced-betti", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("betti", help="graded Betti table of a complex file")
    p.add_argument("file")
    p.add_argument("--field", default="gf2", help="gf2 (default), gfP for a prime P, or qq")
    p.add_argument("--max-j", type=int, default=None)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="largest vertex count to enumerate")
    p.add_argument("-o", "--output", help="write OUTPUT.csv and OUTPUT.md instead of stdout")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("bounds", help="compare a complex's Betti table with the applicable bounds")
    p.add_argument("file")
    p.add_argument("--assume", required=True, help="comma list from: " + ", ".join(TAGS))
    p.add_argument("--trust", action="store_true", help="skip the hypothesis checks")
    p.add_argument("--field", default="gf2")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("generate", help="write a complex from a named family")
    p.add_argument("family", choices=FAMILIES)
    p.add_argument("--d", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--sizes", help="color class sizes, e.g. 3,3,2")
    p.add_argument("--plan", choices=("path", "star", "random"), default="path")
    p.add_argument("--seed", type=int)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("conjecture-scan", help="compare linear strands against stacked cross-polytopal spheres")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_conjecture_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
