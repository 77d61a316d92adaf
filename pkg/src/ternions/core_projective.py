"""The projective space sitting inside J^n and the two line factorizations.

Nonzero vectors of J^n are read as homogeneous coordinates over GF(q) through
an additive identification of J with GF(q). For ternion rings that is the
upper-right matrix entry; for table-loaded rings it is available only when
|J| is prime (multiples of the least nonzero radical element).

Points are tuples of field element indices, normalized so the first nonzero
coordinate is 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence
from weakref import WeakKeyDictionary

from .errors import CoreUnavailable, NotALine, NotInCore, ZeroVector
from .module_geometry import CyclicSubmodule, Vector, generate_submodule
from .radical_decomposition import RadicalClass
from .ring_core import FiniteRing, Ideal
from .ternion_builder import FieldSpec, build_field, is_prime

Point = tuple[int, ...]


@dataclass(frozen=True)
class CoreChart:
    field: FiniteRing
    coordinate: dict[int, int]


_charts: WeakKeyDictionary = WeakKeyDictionary()


def core_chart(J: Ideal) -> CoreChart:
    ring = J.ring
    if ring in _charts:
        return _charts[ring]
    if ring.matrix_entries is not None and ring.base_field is not None:
        coord = {}
        for x in J.elements:
            a, b, c = ring.matrix_entries[x]
            if a or c:
                raise CoreUnavailable(f"radical element {x} is not strictly upper triangular")
            coord[x] = b
        chart = CoreChart(ring.base_field, coord)
    elif is_prime(len(J)):
        p = len(J)
        j0 = min(J.elements - {0})
        coord, x = {}, 0
        for k in range(p):
            coord[x] = k
            x = ring.add(x, j0)
        chart = CoreChart(build_field(FieldSpec(p, max_order=p)), coord)
    else:
        raise CoreUnavailable(
            f"radical of {ring.name} has order {len(J)}, not identifiable with a prime field"
        )
    _charts[ring] = chart
    return chart


# -- projective helpers over a field ----------------------------------------


def canonical_point(F: FiniteRing, coords: Sequence[int]) -> Point:
    lead = next((c for c in coords if c != 0), None)
    if lead is None:
        raise ZeroVector("the zero vector has no projective point")
    inv = F.inverse(lead)
    return tuple(F.mul(inv, c) for c in coords)


def projective_points(F: FiniteRing, n: int) -> list[Point]:
    return sorted({canonical_point(F, v) for v in product(F.elements, repeat=n) if any(v)})


def span(F: FiniteRing, p1: Point, p2: Point) -> frozenset[Point]:
    out = set()
    for lam, mu in product(F.elements, repeat=2):
        v = tuple(F.add(F.mul(lam, a), F.mul(mu, b)) for a, b in zip(p1, p2))
        if any(v):
            out.add(canonical_point(F, v))
    return frozenset(out)


def dot(F: FiniteRing, u: Sequence[int], x: Sequence[int]) -> int:
    total = 0
    for a, b in zip(u, x):
        total = F.add(total, F.mul(a, b))
    return total


def is_line(F: FiniteRing, points: Iterable[Point]) -> bool:
    pts = set(points)
    if len(pts) != F.order + 1:
        return False
    p1, p2 = sorted(pts)[:2]
    return span(F, p1, p2) == pts


def normal_vector(F: FiniteRing, points: Iterable[Point]) -> Point | None:
    """Canonical u with u.x = 0 for every point, if unique up to scalars."""
    pts = list(points)
    n = len(pts[0])
    hits = [u for u in projective_points(F, n) if all(dot(F, u, x) == 0 for x in pts)]
    return hits[0] if len(hits) == 1 else None


# -- core points and lines ---------------------------------------------------


@dataclass
class CoreLine:
    points: tuple[Point, ...]
    source_submodules: list[Vector] = field(default_factory=list)
    # dual (hyperplane) coordinates; set when the line is a hyperplane, i.e. n == 3
    coordinates: Point | None = None


def core_point_of(v: Vector, J: Ideal) -> Point:
    chart = core_chart(J)
    if any(x not in J.elements for x in v):
        raise NotInCore(f"{v} has a coordinate outside the radical")
    if not any(v):
        raise ZeroVector("the zero vector has no core point")
    return canonical_point(chart.field, [chart.coordinate[x] for x in v])


def core_points_of(sub: CyclicSubmodule, J: Ideal) -> frozenset[Point]:
    return frozenset(
        core_point_of(v, J) for v in sub.orbit if any(v) and all(x in J.elements for x in v)
    )


def core_line_of(sub: CyclicSubmodule, J: Ideal) -> CoreLine:
    F = core_chart(J).field
    pts = core_points_of(sub, J)
    if not is_line(F, pts):
        raise NotALine(pts)
    ordered = tuple(sorted(pts))
    coords = normal_vector(F, ordered) if len(ordered[0]) == 3 else None
    return CoreLine(ordered, [sub.canonical_id], coords)


@dataclass
class LineFactorization:
    classes: dict[int, list[CoreLine]]
    pairwise_disjoint: bool
    # class key -> line points -> number of submodules (induced only)
    multiplicity: dict[int, dict[tuple[Point, ...], int]] = field(default_factory=dict)

    @property
    def distinct_counts(self) -> dict[int, int]:
        return {k: len(v) for k, v in self.classes.items()}

    def line_sets(self) -> dict[int, set[tuple[Point, ...]]]:
        return {k: {ln.points for ln in v} for k, v in self.classes.items()}

    def total_hits(self) -> Counter:
        hits: Counter = Counter()
        for per_line in self.multiplicity.values():
            hits.update(per_line)
        return hits


def _disjoint(sets: Iterable[set]) -> bool:
    return all(not (a & b) for a, b in combinations(list(sets), 2))


def induced_factorization(classes: Sequence[RadicalClass], J: Ideal) -> LineFactorization:
    lines: dict[int, list[CoreLine]] = {}
    mult: dict[int, dict[tuple[Point, ...], int]] = {}
    for cls in classes:
        by_points: dict[tuple[Point, ...], CoreLine] = {}
        for sub in cls.members:
            ln = core_line_of(sub, J)
            if ln.points in by_points:
                by_points[ln.points].source_submodules.extend(ln.source_submodules)
            else:
                by_points[ln.points] = ln
        key = cls.radical_entry_count
        lines[key] = [by_points[k] for k in sorted(by_points)]
        mult[key] = {k: len(by_points[k].source_submodules) for k in sorted(by_points)}
    disjoint = _disjoint({ln.points for ln in v} for v in lines.values())
    return LineFactorization(lines, disjoint, mult)


def ordinary_factorization(n: int, q: int, field: FiniteRing | None = None) -> LineFactorization:
    """Hyperplanes of PG(n-1, q) grouped by zero entries of their dual coordinates.

    For n = 3 these are the lines of the plane. Each dual vector u also names
    the field's cyclic submodule GF(q).u, which is how the classes are usually
    written down.
    """
    F = field if field is not None else build_field(FieldSpec.of_order(q))
    pts = projective_points(F, n)
    classes: dict[int, list[CoreLine]] = {}
    for u in pts:
        members = tuple(x for x in pts if dot(F, u, x) == 0)
        zeros = sum(1 for c in u if c == 0)
        classes.setdefault(zeros, []).append(CoreLine(members, [], u))
    classes = {k: classes[k] for k in sorted(classes, reverse=True)}
    disjoint = _disjoint({ln.points for ln in v} for v in classes.values())
    return LineFactorization(classes, disjoint)


def field_cyclic_submodule(F: FiniteRing, u: Point) -> CyclicSubmodule:
    return generate_submodule(F, u)
