"""JSON-ready report payloads and their plain-text renderings."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .core_projective import CoreLine, LineFactorization, Point
from .module_geometry import CyclicSubmodule, Vector
from .radical_decomposition import RadicalClass
from .ring_core import FiniteRing, maximal_ideals, units, zero_divisors


def canonical_json(obj) -> str:
    """Deterministic serialization; ``canonical_json(json.loads(s)) == s`` for its own output."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def vec_label(ring: FiniteRing, v: Vector) -> str:
    return "(" + ",".join(ring.label(x) for x in v) + ")"


def set_label(ring: FiniteRing, xs) -> str:
    labels = [ring.label(x) for x in sorted(xs)]
    sep = ", " if any(lb.startswith("(") for lb in labels) else ","
    return "{" + sep.join(labels) + "}"


def point_label(p: Point) -> str:
    return "(" + ",".join(str(c) for c in p) + ")"


def line_key(points: Sequence[Point]) -> str:
    return "".join(point_label(p) for p in sorted(points))


def ring_info(ring: FiniteRing) -> dict:
    info = {"name": ring.name, "order": ring.order}
    if ring.matrix_entries is not None:
        info["elements"] = [list(e) for e in ring.matrix_entries]
    return info


# -- ideals ----------------------------------------------------------------


def ideals_payload(ring: FiniteRing) -> dict:
    maxi = maximal_ideals(ring, "two-sided")
    zd = zero_divisors(ring)
    return {
        "ring": ring_info(ring),
        "units": sorted(units(ring)),
        "zero_divisors": sorted(zd),
        "zero_divisor_count_with_zero": len(zd),
        "zero_divisor_count_without_zero": len(zd) - 1,
        "maximal_two_sided_ideals": [i.sorted() for i in maxi],
        "jacobson_radical": ring.radical.sorted(),
    }


def ideals_text(ring: FiniteRing, payload: dict) -> str:
    lines = [f"ring {ring.name}, order {ring.order}"]
    lines.append(f"units ({len(payload['units'])}): {set_label(ring, payload['units'])}")
    lines.append(
        f"zero-divisors: {payload['zero_divisor_count_with_zero']} with 0, "
        f"{payload['zero_divisor_count_without_zero']} without: "
        f"{set_label(ring, payload['zero_divisors'])}"
    )
    lines.append("maximal two-sided ideals:")
    for k, ideal in enumerate(payload["maximal_two_sided_ideals"], 1):
        lines.append(f"  I{k} = {set_label(ring, ideal)}")
    lines.append(f"J = {set_label(ring, payload['jacobson_radical'])}")
    return "\n".join(lines) + "\n"


# -- enumeration -----------------------------------------------------------


def submodule_record(sub: CyclicSubmodule) -> dict:
    return {
        "canonical_generator": list(sub.canonical_id),
        "generators": [list(g) for g in sub.generators],
        "orbit": [list(v) for v in sub.sorted_orbit()],
        "orbit_size": sub.size,
    }


def enumerate_payload(subs: Sequence[CyclicSubmodule]) -> list[dict]:
    return [submodule_record(s) for s in subs]


def enumerate_text(ring: FiniteRing, n: int, subs: Sequence[CyclicSubmodule]) -> str:
    out = [f"{len(subs)} non-unimodular free cyclic submodules of {ring.name}^{n}"]
    for s in subs:
        gens = " = ".join(f"R{vec_label(ring, g)}" for g in s.generators)
        orb = ", ".join(vec_label(ring, v) for v in s.sorted_orbit())
        out.append(f"{gens} = {{{orb}}}")
    return "\n".join(out) + "\n"


def enumerate_csv(ring: FiniteRing, subs: Sequence[CyclicSubmodule]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["canonical_generator", "generators", "orbit_size", "orbit"])
    for s in subs:
        w.writerow([
            vec_label(ring, s.canonical_id),
            " ".join(vec_label(ring, g) for g in s.generators),
            s.size,
            " ".join(vec_label(ring, v) for v in s.sorted_orbit()),
        ])
    return buf.getvalue()


# -- classification --------------------------------------------------------


def classify_payload(classes: Sequence[RadicalClass]) -> dict:
    return {
        str(c.radical_entry_count): {
            "count": len(c),
            "canonical_generators": [list(g) for g in c.canonical_generators],
        }
        for c in classes
    }


def classify_text(ring: FiniteRing, classes: Sequence[RadicalClass]) -> str:
    out = [f"{'radical entries':>15}  {'submodules':>10}  generators"]
    for c in classes:
        gens = " ".join(
            "=".join(vec_label(ring, g) for g in m.generators)
            if len(m.generators) <= 2
            else f"{vec_label(ring, m.canonical_id)}[{len(m.generators)} gens]"
            for m in c.members
        )
        out.append(f"{c.radical_entry_count:>15}  {len(c):>10}  {gens}")
    return "\n".join(out) + "\n"


# -- factorization ---------------------------------------------------------


def _points(line: CoreLine) -> list[list[int]]:
    return [list(p) for p in line.points]


def factorize_payload(induced: LineFactorization, ordinary: LineFactorization) -> dict:
    ind = {}
    for sig, lines in induced.classes.items():
        ind[str(sig)] = {
            "distinct_lines": len(lines),
            "submodules": sum(induced.multiplicity[sig].values()),
            "line_list": [_points(ln) for ln in lines],
            "multiplicity_map": {line_key(k): v for k, v in induced.multiplicity[sig].items()},
        }
    return {
        "induced": ind,
        "ordinary": {str(z): [_points(ln) for ln in lines] for z, lines in ordinary.classes.items()},
        "ordinary_dual_coordinates": {
            str(z): [list(ln.coordinates) for ln in lines] for z, lines in ordinary.classes.items()
        },
        "induced_pairwise_disjoint": induced.pairwise_disjoint,
        "ordinary_pairwise_disjoint": ordinary.pairwise_disjoint,
    }


def factorize_text(induced: LineFactorization, ordinary: LineFactorization) -> str:
    def dual(ln: CoreLine) -> str:
        return f"[{point_label(ln.coordinates)}]" if ln.coordinates is not None else ""

    out = ["induced factorization (radical entries: distinct lines / submodules)"]
    for sig, lines in induced.classes.items():
        total = sum(induced.multiplicity[sig].values())
        out.append(f"  {sig}: {len(lines)} lines / {total} submodules")
        for ln in lines:
            out.append(f"     {line_key(ln.points)}{dual(ln)} x{induced.multiplicity[sig][ln.points]}")
    out.append(f"  pairwise disjoint: {induced.pairwise_disjoint}")
    out.append("ordinary factorization (zero entries of line coordinates: lines)")
    for z, lines in ordinary.classes.items():
        out.append(f"  {z}: {len(lines)} lines")
        for ln in lines:
            out.append(f"     {line_key(ln.points)}{dual(ln)}")
    out.append(f"  pairwise disjoint: {ordinary.pairwise_disjoint}")
    return "\n".join(out) + "\n"


# -- DOT export ------------------------------------------------------------


def incidence_dot(ring: FiniteRing, classes: Sequence[RadicalClass], induced: LineFactorization) -> str:
    """Bipartite submodule/core-line graph in Graphviz syntax."""
    out = ["graph snowflake_incidence {", "  node [fontsize=10];"]
    edges = []
    line_nodes: dict[str, CoreLine] = {}
    for lines in induced.classes.values():
        for ln in lines:
            line_nodes.setdefault(line_key(ln.points), ln)
    for c in classes:
        for m in c.members:
            sid = "s:" + ",".join(str(x) for x in m.canonical_id)
            gens = " = ".join(vec_label(ring, g) for g in m.generators)
            out.append(
                f'  "{sid}" [shape=ellipse, kind=submodule, signature={c.radical_entry_count}, label="{gens}"];'
            )
    for key in sorted(line_nodes):
        out.append(f'  "l:{key}" [shape=box, kind=line, label="{key}"];')
    for lines in induced.classes.values():
        for ln in lines:
            for src in ln.source_submodules:
                sid = "s:" + ",".join(str(x) for x in src)
                edges.append(f'  "{sid}" -- "l:{line_key(ln.points)}";')
    out.extend(sorted(edges))
    out.append("}")
    return "\n".join(out) + "\n"
