"""Cyclic submodules of the free left module R^n.

Vectors are plain tuples of element indices. Scalars always act from the
left: ``alpha . (r1, ..., rn) = (alpha*r1, ..., alpha*rn)``.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .errors import BudgetExceeded
from .ring_core import FiniteRing

log = logging.getLogger(__name__)

Vector = tuple[int, ...]

DEFAULT_BUDGET = 2**24


def scale(ring: FiniteRing, alpha: int, v: Vector) -> Vector:
    row = ring.mul_table[alpha]
    return tuple(row[x] for x in v)


def orbit(ring: FiniteRing, v: Vector) -> frozenset[Vector]:
    mt = ring.mul_table
    return frozenset(tuple(mt[a][x] for x in v) for a in ring.elements)


@dataclass(frozen=True)
class CyclicSubmodule:
    ring: FiniteRing = field(repr=False, compare=False)
    orbit: frozenset[Vector] = field(repr=False)
    generators: tuple[Vector, ...]
    canonical_id: Vector

    @property
    def is_free(self) -> bool:
        return len(self.orbit) == self.ring.order

    @property
    def size(self) -> int:
        return len(self.orbit)

    def sorted_orbit(self) -> list[Vector]:
        return sorted(self.orbit)


def generate_submodule(ring: FiniteRing, g: Vector) -> CyclicSubmodule:
    g = tuple(g)
    orb = orbit(ring, g)
    gens = tuple(sorted(v for v in orb if orbit(ring, v) == orb))
    return CyclicSubmodule(ring, orb, gens, gens[0])


# ---------------------------------------------------------------------------
# unimodularity
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _right_span(ring: FiniteRing, coords: frozenset[int]) -> frozenset[int]:
    # r1*R + ... + rn*R: each r*R is an additive subgroup, so the sum is the
    # additive closure of their union.
    at = ring.add_table
    span = {0}
    for r in coords:
        piece = ring.right_multiples[r]
        span = {at[s][t] for s in span for t in piece}
    return frozenset(span)


def right_span(ring: FiniteRing, v: Vector) -> frozenset[int]:
    """The right ideal ``r1*R + ... + rn*R`` generated by the coordinates."""
    return _right_span(ring, frozenset(v))


def is_unimodular(ring: FiniteRing, v: Vector) -> bool:
    return 1 in right_span(ring, v)


def is_unimodular_bruteforce(ring: FiniteRing, v: Vector) -> bool:
    """Search every coefficient tuple x for ``sum r_i x_i == 1``. Test oracle only."""
    at, mt = ring.add_table, ring.mul_table
    for xs in product(ring.elements, repeat=len(v)):
        total = 0
        for r, x in zip(v, xs):
            total = at[total][mt[r][x]]
        if total == 1:
            return True
    return False


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


@dataclass
class Enumeration:
    submodules: list[CyclicSubmodule]
    # free submodules reached from a non-unimodular vector but having a
    # unimodular generator; excluded from ``submodules``
    mixed: list[CyclicSubmodule] = field(default_factory=list)


def _decode(index: int, base: int, n: int) -> Vector:
    out = [0] * n
    for i in range(n - 1, -1, -1):
        index, out[i] = divmod(index, base)
    return tuple(out)


def _scan_range(ring: FiniteRing, n: int, start: int, stop: int) -> set[frozenset[Vector]]:
    N = ring.order
    found: set[frozenset[Vector]] = set()
    for idx in range(start, stop):
        v = _decode(idx, N, n)
        if is_unimodular(ring, v):
            continue
        orb = orbit(ring, v)
        if len(orb) == N:
            found.add(orb)
    return found


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step = -(-total // parts)
    return [(s, min(s + step, total)) for s in range(0, total, step)]


def scan_free_submodules(
    ring: FiniteRing, n: int, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> Enumeration:
    """Exhaustive scan of R^n for free cyclic submodules with non-unimodular generators."""
    if n < 1:
        raise ValueError("rank must be positive")
    total = ring.order**n
    if total > budget:
        raise BudgetExceeded(total, budget)

    if workers > 1:
        ranges = _chunks(total, workers * 4)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(_scan_range, [ring] * len(ranges), [n] * len(ranges),
                             [a for a, _ in ranges], [b for _, b in ranges])
            orbits = set().union(*parts)
    else:
        orbits = _scan_range(ring, n, 0, total)

    result = Enumeration([])
    for orb in orbits:
        sub = generate_submodule(ring, next(v for v in sorted(orb) if orbit(ring, v) == orb))
        flags = {is_unimodular(ring, g) for g in sub.generators}
        if flags == {False}:
            result.submodules.append(sub)
        else:
            log.warning("submodule %s has unimodular and non-unimodular generators", sub.canonical_id)
            result.mixed.append(sub)
    result.submodules.sort(key=lambda s: s.canonical_id)
    result.mixed.sort(key=lambda s: s.canonical_id)
    return result


def enumerate_nonunimodular_free(
    ring: FiniteRing, n: int, budget: int = DEFAULT_BUDGET, workers: int = 1
) -> list[CyclicSubmodule]:
    """All free cyclic submodules of R^n whose generators are all non-unimodular,
    deduplicated by orbit and sorted by canonical generator."""
    return scan_free_submodules(ring, n, budget, workers).submodules
