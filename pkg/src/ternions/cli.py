"""Command-line front end.

Data goes to stdout (or ``--out``); diagnostics and errors go to stderr.
Exit status: 0 ok, 1 a requested check failed, 2 bad invocation,
3 an algebraic error (axiom violation, budget, ...).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from . import reports
from .core_projective import core_chart, induced_factorization, ordinary_factorization
from .errors import BudgetExceeded, RingError
from .module_geometry import DEFAULT_BUDGET, enumerate_nonunimodular_free
from .radical_decomposition import decompose
from .reproduce import run_checks
from .ring_core import FiniteRing, format_tables, load_ring
from .ternion_builder import FieldSpec, build_field, build_ternions

FORMATS = ("text", "json", "csv", "dot")


@dataclass
class RunConfig:
    ring_source: str = "ternion:2"
    rank: int = 3
    fmt: str = "text"
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    out: Path | None = None
    poly: tuple[int, ...] | None = None

    def validate(self, ring: FiniteRing) -> None:
        if self.rank < 2:
            raise ValueError("--rank must be at least 2")
        if self.fmt not in FORMATS:
            raise ValueError(f"--format must be one of {FORMATS}")
        if ring.order**self.rank > self.budget:
            raise BudgetExceeded(ring.order**self.rank, self.budget)


def _order(text: str) -> int:
    if "^" in text:
        p, k = text.split("^", 1)
        return int(p) ** int(k)
    return int(text)


def parse_ring(source: str, poly: tuple[int, ...] | None = None) -> FiniteRing:
    kind, _, arg = source.partition(":")
    if not arg:
        raise ValueError(f"ring source must look like ternion:q, field:p^k or file:PATH, got {source!r}")
    if kind == "file":
        ring, _ = load_ring(arg)
        return ring
    spec = FieldSpec.of_order(_order(arg))
    if poly is not None:
        spec = FieldSpec(spec.p, spec.k, poly)
    field = build_field(spec)
    if kind == "field":
        return field
    if kind == "ternion":
        return build_ternions(field)
    raise ValueError(f"unknown ring kind {kind!r}")


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out is not None:
        cfg.out.write_text(text)
    else:
        sys.stdout.write(text)


def _pipeline(ring: FiniteRing, cfg: RunConfig):
    subs = enumerate_nonunimodular_free(ring, cfg.rank, cfg.budget, cfg.workers)
    classes = decompose(subs, ring.radical)
    return subs, classes


# -- subcommands -------------------------------------------------------------


def cmd_tables(ring: FiniteRing, cfg: RunConfig) -> int:
    if cfg.fmt == "json":
        _emit(cfg, reports.canonical_json({
            "ring": reports.ring_info(ring),
            "add_table": [list(r) for r in ring.add_table],
            "mul_table": [list(r) for r in ring.mul_table],
        }))
    else:
        _emit(cfg, format_tables(ring))
    return 0


def cmd_ideals(ring: FiniteRing, cfg: RunConfig) -> int:
    payload = reports.ideals_payload(ring)
    if cfg.fmt == "json":
        _emit(cfg, reports.canonical_json(payload))
    else:
        _emit(cfg, reports.ideals_text(ring, payload))
    return 0


def cmd_enumerate(ring: FiniteRing, cfg: RunConfig) -> int:
    cfg.validate(ring)
    subs = enumerate_nonunimodular_free(ring, cfg.rank, cfg.budget, cfg.workers)
    if cfg.fmt == "json":
        _emit(cfg, reports.canonical_json(reports.enumerate_payload(subs)))
    elif cfg.fmt == "csv":
        _emit(cfg, reports.enumerate_csv(ring, subs))
    else:
        _emit(cfg, reports.enumerate_text(ring, cfg.rank, subs))
    return 0


def cmd_classify(ring: FiniteRing, cfg: RunConfig) -> int:
    cfg.validate(ring)
    _, classes = _pipeline(ring, cfg)
    if cfg.fmt == "json":
        _emit(cfg, reports.canonical_json(reports.classify_payload(classes)))
    else:
        _emit(cfg, reports.classify_text(ring, classes))
    return 0


def _factorizations(ring: FiniteRing, cfg: RunConfig):
    _, classes = _pipeline(ring, cfg)
    J = ring.radical
    induced = induced_factorization(classes, J)
    field = core_chart(J).field
    ordinary = ordinary_factorization(cfg.rank, field.order, field)
    return classes, induced, ordinary


def cmd_factorize(ring: FiniteRing, cfg: RunConfig) -> int:
    cfg.validate(ring)
    _, induced, ordinary = _factorizations(ring, cfg)
    if cfg.fmt == "json":
        _emit(cfg, reports.canonical_json(reports.factorize_payload(induced, ordinary)))
    else:
        _emit(cfg, reports.factorize_text(induced, ordinary))
    return 0


def cmd_export(ring: FiniteRing, cfg: RunConfig) -> int:
    cfg.validate(ring)
    classes, induced, _ = _factorizations(ring, cfg)
    _emit(cfg, reports.incidence_dot(ring, classes, induced))
    return 0


def cmd_reproduce(ring: FiniteRing | None, cfg: RunConfig, paper: bool) -> int:
    if not paper:
        # summary only: every number the pipeline produces for the chosen ring
        ring = ring if ring is not None else parse_ring("ternion:2")
        cfg.validate(ring)
        classes, induced, ordinary = _factorizations(ring, cfg)
        _emit(cfg, reports.ideals_text(ring, reports.ideals_payload(ring))
              + reports.classify_text(ring, classes)
              + reports.factorize_text(induced, ordinary))
        return 0
    checks = run_checks(ring, workers=cfg.workers)
    if cfg.fmt == "json":
        _emit(cfg, reports.canonical_json(
            [{"check": c.name, "passed": c.passed, "detail": c.detail} for c in checks]
        ))
    else:
        failed = sum(not c.passed for c in checks)
        _emit(cfg, "\n".join(c.line() for c in checks) + f"\n{len(checks) - failed}/{len(checks)} checks passed\n")
    return 0 if all(c.passed for c in checks) else 1


# -- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--ring", default=None,
                        help="ternion:q, field:p^k or file:PATH (default: ternion:2)")
    common.add_argument("--poly", default=None,
                        help="reduction polynomial for GF(p^k), coefficients low to high, e.g. 1,1,1")
    common.add_argument("--rank", type=int, default=3, help="number of module coordinates n (default: 3)")
    common.add_argument("--format", dest="fmt", choices=FORMATS, default="text")
    common.add_argument("--json", dest="fmt", action="store_const", const="json", help="same as --format json")
    common.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="same as --format csv")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="max vectors to scan")
    common.add_argument("--workers", type=int, default=1, help="worker processes for the scan")
    common.add_argument("--out", type=Path, default=None, help="write output here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="ternions",
        description="Finite rings, free cyclic submodules and their radical decomposition.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("tables", parents=[common], help="print Cayley tables in the loader format")
    sub.add_parser("ideals", parents=[common], help="units, zero-divisors, maximal ideals, radical")
    sub.add_parser("enumerate", parents=[common], help="free cyclic submodules with non-unimodular generators")
    sub.add_parser("classify", parents=[common], help="group submodules by radical entries of generators")
    sub.add_parser("factorize", parents=[common], help="induced vs ordinary line factorizations")
    sub.add_parser("export", parents=[common], help="incidence graph (DOT)")
    rp = sub.add_parser("reproduce", parents=[common], help="run the T(2)^3 pipeline end to end")
    rp.add_argument("--paper", action="store_true",
                    help="diff every result against the bundled reference values")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        poly = tuple(int(c) for c in args.poly.split(",")) if args.poly else None
        cfg = RunConfig(args.ring or "ternion:2", args.rank, args.fmt, args.budget, args.workers, args.out, poly)
        if args.command == "export" and cfg.fmt == "text":
            cfg.fmt = "dot"
        if args.command == "reproduce":
            ring = parse_ring(args.ring, poly) if args.ring else None
            return cmd_reproduce(ring, cfg, args.paper)
        ring = parse_ring(cfg.ring_source, poly)
        handler = {
            "tables": cmd_tables,
            "ideals": cmd_ideals,
            "enumerate": cmd_enumerate,
            "classify": cmd_classify,
            "factorize": cmd_factorize,
            "export": cmd_export,
        }[args.command]
        return handler(ring, cfg)
    except RingError as exc:
        print(json.dumps({"error": exc.kind, **exc.detail()}), file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
