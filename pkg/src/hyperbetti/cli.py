"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable, Sequence

from . import formats
from .betti import (
    DEFAULT_LIMIT,
    BettiTable,
    betti_from_fvector_linear,
    hilbert_from_fvector,
    hilbert_numerator_from_betti,
    hochster_graded,
    hochster_multigraded,
    krull_dimension,
    HilbertSeries,
)
from .exceptions import InputError, ResourceLimitError
from .families import FAMILY_KINDS, FamilySpec, IntervalSpec, closed_betti_product, da_dual_as_join
from .homology import FieldSpec, reduced_homology
from .hypergraph import Hypergraph
from .simplicial import SimplicialComplex

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

LIMIT_ENV = "HYPERBETTI_LIMIT"
JOBS_ENV = "HYPERBETTI_JOBS"


@dataclass
class RunConfig:
    command: str
    family: FamilySpec | None
    input_path: str | None
    field: FieldSpec
    method: str
    fmt: str
    limit: int
    jobs: int
    d: int | None


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}") from None


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{name} must be an integer, got {raw!r}") from None


def build_config(args: argparse.Namespace) -> RunConfig:
    family = None
    if args.family:
        if args.n is None:
            raise InputError("--family needs --n")
        ns = _int_list(args.n)
        a = _int_list(args.a) if args.a else ()
        intervals = IntervalSpec.parse(args.intervals) if args.intervals else None
        family = FamilySpec(args.family, ns, args.d, a, intervals, strict_intervals=args.strict_intervals)
    elif args.input is None:
        raise InputError("give either --family or --input")
    limit = args.limit if args.limit is not None else _env_int(LIMIT_ENV, DEFAULT_LIMIT)
    jobs = args.jobs if args.jobs is not None else _env_int(JOBS_ENV, 1)
    method = getattr(args, "method", "hochster") or "hochster"
    d = args.d if args.d is not None else (family.degree if family is not None else None)
    if method == "closed" and family is None:
        raise InputError("--method closed needs a family spec")
    if method == "fvector" and args.command == "betti" and d is None:
        raise InputError("--method fvector needs --d")
    return RunConfig(args.command, family, args.input, FieldSpec.parse(args.field), method,
                     args.format, limit, jobs, d)


def load_object(cfg: RunConfig) -> SimplicialComplex | Hypergraph:
    """The family hypergraph, or the complex/hypergraph stored in ``--input``."""
    if cfg.family is not None:
        return cfg.family.build()
    assert cfg.input_path is not None
    text = formats.read_text(cfg.input_path)
    if formats.looks_like_json(text):
        data = json.loads(text)
        if "facets" in data or data.get("void"):
            return formats.complex_from_json(data)
        return formats.hypergraph_from_json(data)
    body = [line.split("#", 1)[0].strip().lower() for line in text.splitlines()]
    if any(line.startswith("facet") or line == "void" for line in body):
        return formats.parse_complex(text)
    if any(line.startswith("edge") for line in body):
        return formats.parse_hypergraph(text)
    # no facet or edge lines: an edgeless hypergraph and {∅} are both plausible;
    # treat it as a hypergraph so that betti on it gives the polynomial ring
    return formats.parse_hypergraph(text)


def _complex_of(obj: SimplicialComplex | Hypergraph) -> SimplicialComplex:
    return obj.independence_complex() if isinstance(obj, Hypergraph) else obj


def _out(text: str) -> None:
    sys.stdout.write(text)


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------

def cmd_generate(cfg: RunConfig, args: argparse.Namespace) -> int:
    if cfg.family is None:
        raise InputError("generate needs a family spec")
    h = cfg.family.build()
    if cfg.fmt == "json":
        text = formats.dumps(formats.hypergraph_to_json(h))
    else:
        text = formats.format_hypergraph(h)
    message = f"{len(h.edges)} edges"
    if args.output and args.output != "-":
        formats.write_text(args.output, text)
        print(message)
    else:
        _out(text)
        print(message, file=sys.stderr)
    if not h.edges:
        print("warning: the hypergraph has no edges", file=sys.stderr)
    return EXIT_OK


def compute_betti(cfg: RunConfig, obj: SimplicialComplex | Hypergraph, method: str | None = None,
                  f: FieldSpec | None = None) -> BettiTable:
    method = method or cfg.method
    f = f or cfg.field
    if method == "hochster":
        return hochster_graded(obj, f, limit=cfg.limit, jobs=cfg.jobs)
    if method == "closed":
        assert cfg.family is not None
        table = cfg.family.closed_betti()
        return BettiTable(table.entries, table.n, f)
    if method == "fvector":
        assert cfg.d is not None
        table = betti_from_fvector_linear(_complex_of(obj), cfg.d)
        return BettiTable(table.entries, table.n, f)
    raise InputError(f"unknown method {method!r}")


def _render_betti(cfg: RunConfig, table: BettiTable) -> str:
    if cfg.fmt == "json":
        return formats.dumps(formats.betti_to_json(table, cfg.d))
    if cfg.fmt == "csv":
        return formats.format_betti_csv(table)
    pd = table.projective_dimension()
    lines = [formats.format_betti_text(table).rstrip("\n"), f"pd: {pd}", f"depth: {table.n - pd}"]
    d = cfg.d if cfg.d is not None else table.linear_degree()
    if d is not None:
        lines.append(f"linear resolution (d={d}): {'yes' if table.is_linear(d) else 'no'}")
    else:
        lines.append("linear resolution: no")
    return "\n".join(lines) + "\n"


def cmd_betti(cfg: RunConfig, args: argparse.Namespace) -> int:
    obj = load_object(cfg)
    if args.multigraded:
        if cfg.method != "hochster":
            raise InputError("--multigraded needs --method hochster")
        table = hochster_multigraded(obj, cfg.field, limit=cfg.limit, jobs=cfg.jobs)
        _out(formats.dumps(formats.multigraded_to_json(table)))
        return EXIT_OK
    _out(_render_betti(cfg, compute_betti(cfg, obj)))
    return EXIT_OK


def cmd_dual(cfg: RunConfig, args: argparse.Namespace) -> int:
    dual = _complex_of(load_object(cfg)).alexander_dual()
    if cfg.fmt == "json":
        _out(formats.dumps(formats.complex_to_json(dual)))
    else:
        _out(formats.format_complex(dual))
    return EXIT_OK


def cmd_homology(cfg: RunConfig, args: argparse.Namespace) -> int:
    profile = reduced_homology(_complex_of(load_object(cfg)), cfg.field)
    if cfg.fmt == "json":
        _out(json.dumps(profile.to_json()) + "\n")
    else:
        for r, d in profile.to_json().items():
            _out(f"H~_{r}: {d}\n")
    return EXIT_OK


def cmd_hilbert(cfg: RunConfig, args: argparse.Namespace) -> int:
    cx = _complex_of(load_object(cfg))
    if cfg.method == "fvector":
        series = hilbert_from_fvector(cx)
    else:
        table = compute_betti(cfg, cx)
        series = HilbertSeries(tuple(hilbert_numerator_from_betti(table)), table.n)
    if cfg.fmt == "json":
        _out(formats.dumps(formats.hilbert_to_json(series)))
    else:
        _out(f"{series}\n")
    return EXIT_OK


# --------------------------------------------------------------------------
# verification
# --------------------------------------------------------------------------

class Report:
    def __init__(self) -> None:
        self.lines: list[str] = []
        self.failures = 0

    def check(self, name: str, ok: bool, detail: str = "") -> bool:
        self.lines.append(f"{'PASS' if ok else 'FAIL'} {name}" + (f": {detail}" if detail and not ok else ""))
        if not ok:
            self.failures += 1
        return ok


def _diff(a: BettiTable, b: BettiTable) -> str:
    keys = sorted(set(a.entries) | set(b.entries))
    bad = [f"β{k}={a[k]} vs {b[k]}" for k in keys if a[k] != b[k]]
    if a.n != b.n:
        bad.insert(0, f"n={a.n} vs {b.n}")
    return "; ".join(bad[:6]) + (" ..." if len(bad) > 6 else "")


def verify_family(spec: FamilySpec, fields: Sequence[FieldSpec], report: Report, *, limit: int, jobs: int,
                  expect: BettiTable | None = None) -> None:
    tag = f"{spec.kind} n={','.join(map(str, spec.n))} d={spec.d}"
    if spec.kind == "da":
        tag += f" a={','.join(map(str, spec.a))}"
    if spec.kind == "dI":
        tag += f" I={spec.normalized_intervals()}"
    h = spec.build()
    cx = h.independence_complex()
    d = spec.degree
    tables = {f.name: hochster_graded(cx, f, limit=limit, jobs=jobs) for f in fields}
    base_name = fields[0].name
    base = tables[base_name]
    for name, table in tables.items():
        if name != base_name:
            report.check(f"{tag}: hochster {name} == {base_name}", table == base, _diff(table, base))
    if expect is not None:
        report.check(f"{tag}: hochster == expected table", base == expect, _diff(base, expect))
    if spec.has_closed_form():
        closed = spec.closed_betti()
        report.check(f"{tag}: closed form == hochster", closed == base, _diff(closed, base))
    factors = spec.product_factors()
    if factors and len(factors) >= 2:
        prod_table = closed_betti_product(factors, fields[0], limit=limit, jobs=jobs)
        report.check(f"{tag}: product formula == hochster", prod_table == base, _diff(prod_table, base))
    if not h.edges:
        report.check(f"{tag}: edgeless, only beta_00", base.entries == {(0, 0): 1})
        return
    linear = base.is_linear(d)
    report.check(f"{tag}: {d}-linear resolution", linear)
    if linear:
        fv = betti_from_fvector_linear(cx, d)
        report.check(f"{tag}: f-vector route == hochster", fv == base, _diff(fv, base))
    pd = base.projective_dimension()
    expected_pd = spec.expected_pd()
    if expected_pd is not None:
        report.check(f"{tag}: pd == N-d+1", pd == expected_pd, f"pd={pd}, expected {expected_pd}")
    cm = base.depth() == krull_dimension(cx)
    prediction = spec.cm_prediction()
    if prediction is not None:
        report.check(f"{tag}: Cohen-Macaulay predicate", cm == prediction, f"depth==dim is {cm}, predicted {prediction}")
    big_n = spec.vertex_count
    dual = cx.alexander_dual()
    report.check(f"{tag}: dim of dual == N-d-1", dual.dimension() == big_n - d - 1, f"dim={dual.dimension()}")
    dual_table = hochster_graded(dual, fields[0], limit=limit, jobs=jobs)
    report.check(f"{tag}: pd of dual == d", dual_table.projective_dimension() == d,
                 f"pd={dual_table.projective_dimension()}")
    report.check(f"{tag}: Krull dim of dual == N-d", krull_dimension(dual) == big_n - d)
    report.check(f"{tag}: dual Cohen-Macaulay", dual_table.depth() == krull_dimension(dual))
    if spec.kind == "da":
        report.check(f"{tag}: dual == join of skeletons", dual == da_dual_as_join(spec.n, spec.a))


def cmd_verify(cfg: RunConfig, args: argparse.Namespace) -> int:
    if cfg.family is None:
        raise InputError("verify needs a family spec")
    fields = [FieldSpec.parse(x) for x in args.fields.split(",")] if args.fields else [cfg.field]
    expect = None
    if args.expect:
        expect = formats.betti_from_json(json.loads(formats.read_text(args.expect)))
    specs = [cfg.family]
    if args.sweep:
        if cfg.family.kind != "knd":
            raise InputError("--sweep is available for knd only")
        top = cfg.family.n[0]
        specs = [FamilySpec("knd", (m,), d) for m in range(2, top + 1) for d in range(2, m + 1)]
    report = Report()
    for spec in specs:
        verify_family(spec, fields, report, limit=cfg.limit, jobs=cfg.jobs, expect=expect)
    _out("\n".join(report.lines) + "\n")
    verdict = "all checks passed" if not report.failures else f"{report.failures} check(s) failed"
    _out(f"{verdict}\n")
    return EXIT_OK if not report.failures else EXIT_MISMATCH


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def _add_common(p: argparse.ArgumentParser, *, methods: Sequence[str] | None, formats_: Sequence[str]) -> None:
    src = p.add_argument_group("input")
    src.add_argument("--family", choices=FAMILY_KINDS, help="build a family instance")
    src.add_argument("--n", help="block sizes, comma separated")
    src.add_argument("--d", type=int, help="edge size / linearity degree")
    src.add_argument("--a", help="da composition, comma separated")
    src.add_argument("--intervals", help="dI intervals, e.g. 1:2,1:1,2:3")
    src.add_argument("--strict-intervals", action="store_true", help="reject non-normalized intervals")
    src.add_argument("--input", metavar="FILE", help="complex or hypergraph file ('-' for stdin)")
    p.add_argument("--field", default="2", help="prime p for GF(p), or q for the rationals (default 2)")
    if methods:
        p.add_argument("--method", choices=methods, default=methods[0])
    p.add_argument("--format", choices=formats_, default=formats_[0])
    p.add_argument("--limit", type=int, help=f"max vertices for the subset sweep (env {LIMIT_ENV}, default {DEFAULT_LIMIT})")
    p.add_argument("--jobs", type=int, help=f"worker processes for the sweep (env {JOBS_ENV}, default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyperbetti", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a family instance as a hypergraph file")
    _add_common(p, methods=None, formats_=("text", "json"))
    p.add_argument("--output", "-o", default="-", help="output file (default stdout)")

    p = sub.add_parser("betti", help="graded Betti numbers")
    _add_common(p, methods=("hochster", "closed", "fvector"), formats_=("text", "json", "csv"))
    p.add_argument("--multigraded", action="store_true", help="print the multigraded table as JSON")

    p = sub.add_parser("verify", help="cross-check every applicable method on a family")
    _add_common(p, methods=None, formats_=("text",))
    p.add_argument("--fields", help="comma-separated fields to compare, e.g. 2,3,q (default: --field)")
    p.add_argument("--expect", metavar="FILE", help="Betti table JSON the Hochster table must equal")
    p.add_argument("--sweep", action="store_true", help="knd only: every 2 <= d <= m <= n")

    p = sub.add_parser("dual", help="Alexander dual of a complex (of the independence complex for hypergraphs)")
    _add_common(p, methods=None, formats_=("text", "json"))

    p = sub.add_parser("homology", help="reduced homology")
    _add_common(p, methods=None, formats_=("json", "text"))

    p = sub.add_parser("hilbert", help="Hilbert series of the Stanley-Reisner ring")
    _add_common(p, methods=("fvector", "hochster", "closed"), formats_=("text", "json"))
    return parser


COMMANDS: dict[str, Callable[[RunConfig, argparse.Namespace], int]] = {
    "generate": cmd_generate,
    "betti": cmd_betti,
    "verify": cmd_verify,
    "dual": cmd_dual,
    "homology": cmd_homology,
    "hilbert": cmd_hilbert,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = build_config(args)
        return COMMANDS[args.command](cfg, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
