"""Finite unital rings given by exhaustive Cayley tables.

Elements are the integers ``0 .. N-1``. After :func:`build_ring` the additive
identity is always ``0`` and the multiplicative identity always ``1``; the
relabeling that achieved this is returned to the caller.

Ideal computations are brute force (closure from seeds), which is fine for the
orders this package targets (N <= 64).
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Literal, Sequence

import numpy as np

from .errors import AxiomViolation, InternalDisagreement, NoUnity, TableShapeError

Sidedness = Literal["left", "right", "two-sided"]
SIDEDNESS: tuple[str, ...] = ("left", "right", "two-sided")

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A validated finite ring with unity.

    Build instances with :func:`build_ring` (or the ternion/field builders);
    the constructor itself does not check the axioms.

    ``matrix_entries`` and ``base_field`` are only set for ternion rings, where
    element ``i`` is the matrix ``(a b; 0 c)`` with ``(a, b, c) = matrix_entries[i]``
    over ``base_field``.
    """

    add_table: Table
    mul_table: Table
    name: str = "ring"
    matrix_entries: tuple[tuple[int, int, int], ...] | None = field(default=None, repr=False)
    base_field: FiniteRing | None = field(default=None, repr=False)

    zero = 0
    one = 1

    @property
    def order(self) -> int:
        return len(self.add_table)

    @property
    def elements(self) -> range:
        return range(self.order)

    def add(self, a: int, b: int) -> int:
        return self.add_table[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_table[a][b]

    @cached_property
    def negatives(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.add_table)

    def neg(self, a: int) -> int:
        return self.negatives[a]

    def sub(self, a: int, b: int) -> int:
        return self.add_table[a][self.negatives[b]]

    def label(self, x: int) -> str:
        """Display label: ``(a,b,c)`` for ternions other than T(2), else the index."""
        if self.matrix_entries is not None and self.base_field is not None and self.base_field.order > 2:
            a, b, c = self.matrix_entries[x]
            return f"({a},{b},{c})"
        return str(x)

    @cached_property
    def right_multiples(self) -> tuple[frozenset[int], ...]:
        """``right_multiples[r]`` is the principal right ideal ``r*R``."""
        return tuple(frozenset(row) for row in self.mul_table)

    @cached_property
    def radical(self) -> Ideal:
        return jacobson_radical(self)

    @cached_property
    def unit_set(self) -> frozenset[int]:
        return frozenset(units(self))

    def inverse(self, x: int) -> int:
        for y in self.elements:
            if self.mul_table[x][y] == 1 and self.mul_table[y][x] == 1:
                return y
        raise ZeroDivisionError(f"{x} is not a unit")

    def is_commutative(self) -> bool:
        m = np.asarray(self.mul_table)
        return bool((m == m.T).all())


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing = field(repr=False, compare=False)
    elements: frozenset[int]
    sidedness: str = "two-sided"

    def __contains__(self, x: int) -> bool:
        return x in self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(sorted(self.elements))

    def sorted(self) -> list[int]:
        return sorted(self.elements)

    @property
    def is_proper(self) -> bool:
        return len(self.elements) < self.ring.order


# ---------------------------------------------------------------------------
# construction and axiom checks
# ---------------------------------------------------------------------------


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    bad = np.argwhere(mask)
    if len(bad) == 0:
        return None
    return tuple(int(i) for i in bad[0])


def _as_array(table: Sequence[Sequence[int]], what: str) -> np.ndarray:
    try:
        arr = np.array([list(row) for row in table], dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise TableShapeError(f"{what} table is not a rectangular integer array") from exc
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise TableShapeError(f"{what} table must be square, got shape {arr.shape}")
    return arr


def check_axioms(A: np.ndarray, M: np.ndarray) -> tuple[int, int]:
    """Scan every ring axiom exhaustively; return ``(zero, one)`` labels.

    Raises :class:`AxiomViolation` with the first witness found, in the order
    additive group, multiplicative associativity, distributivity, unity.
    """
    n = A.shape[0]
    i = np.arange(n)
    a, b, c = i[:, None, None], i[None, :, None], i[None, None, :]

    if (w := _first(A != A.T)) is not None:
        raise AxiomViolation("additive-commutativity", w)
    if (w := _first(A[A[a, b], c] != A[a, A[b, c]])) is not None:
        raise AxiomViolation("additive-associativity", w)

    zeros = [z for z in range(n) if (A[z] == i).all()]
    if not zeros:
        raise AxiomViolation(
            "additive-identity", tuple((z, int(np.argmax(A[z] != i))) for z in range(n))
        )
    zero = zeros[0]
    for x in range(n):
        if not (A[x] == zero).any():
            raise AxiomViolation("additive-inverse", (x,))

    if (w := _first(M[M[a, b], c] != M[a, M[b, c]])) is not None:
        raise AxiomViolation("multiplicative-associativity", w)
    if (w := _first(M[a, A[b, c]] != A[M[a, b], M[a, c]])) is not None:
        raise AxiomViolation("left-distributivity", w)
    if (w := _first(M[A[a, b], c] != A[M[a, c], M[b, c]])) is not None:
        raise AxiomViolation("right-distributivity", w)

    witness = []
    for e in range(n):
        bad = (M[e] != i) | (M[:, e] != i)
        if not bad.any():
            return zero, e
        witness.append((e, int(np.argmax(bad))))
    raise NoUnity(tuple(witness))


def build_ring(
    add_table: Sequence[Sequence[int]],
    mul_table: Sequence[Sequence[int]],
    name: str = "ring",
    *,
    matrix_entries: Sequence[tuple[int, int, int]] | None = None,
    base_field: FiniteRing | None = None,
) -> tuple[FiniteRing, list[int]]:
    """Validate Cayley tables and return ``(ring, relabeling)``.

    ``relabeling[old] == new``. Elements are renumbered only as far as needed
    to put zero at index 0 and unity at index 1; everything else keeps its
    relative order, so tables that are already canonical come back unchanged.
    """
    A = _as_array(add_table, "addition")
    M = _as_array(mul_table, "multiplication")
    n = A.shape[0]
    if M.shape != A.shape:
        raise TableShapeError(f"table sizes differ: {A.shape} vs {M.shape}")
    if n < 2:
        raise TableShapeError("a ring with unity different from zero needs N >= 2")
    for arr, what in ((A, "addition"), (M, "multiplication")):
        if arr.min() < 0 or arr.max() >= n:
            raise TableShapeError(f"{what} table has entries outside [0, {n})")

    zero, one = check_axioms(A, M)
    order = [zero, one] + [x for x in range(n) if x not in (zero, one)]
    perm = [0] * n
    for new, old in enumerate(order):
        perm[old] = new
    p = np.array(perm)
    idx = np.array(order)
    add = p[A[np.ix_(idx, idx)]]
    mul = p[M[np.ix_(idx, idx)]]
    entries = None
    if matrix_entries is not None:
        entries = tuple(tuple(matrix_entries[old]) for old in order)
    ring = FiniteRing(
        add_table=tuple(tuple(int(v) for v in row) for row in add),
        mul_table=tuple(tuple(int(v) for v in row) for row in mul),
        name=name,
        matrix_entries=entries,
        base_field=base_field,
    )
    return ring, perm


# ---------------------------------------------------------------------------
# element classes
# ---------------------------------------------------------------------------


def units(ring: FiniteRing) -> set[int]:
    mt = ring.mul_table
    return {
        x for x in ring.elements if any(mt[x][y] == 1 and mt[y][x] == 1 for y in ring.elements)
    }


def zero_divisors(ring: FiniteRing) -> set[int]:
    """Zero together with every two-sided zero-divisor.

    Zero is included by convention; subtract one for the count without it.
    """
    mt = ring.mul_table
    out = {0}
    for x in ring.elements:
        if any(y != 0 and (mt[x][y] == 0 or mt[y][x] == 0) for y in ring.elements):
            out.add(x)
    return out


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


def ideal_closure(ring: FiniteRing, seed: Iterable[int], sidedness: str = "two-sided") -> frozenset[int]:
    """Smallest ideal of the given sidedness containing ``seed``."""
    if sidedness not in SIDEDNESS:
        raise ValueError(f"unknown sidedness {sidedness!r}")
    at, mt = ring.add_table, ring.mul_table
    left = sidedness in ("left", "two-sided")
    right = sidedness in ("right", "two-sided")
    members = {0}
    todo = [x for x in seed if x != 0]
    while todo:
        x = todo.pop()
        if x in members:
            continue
        members.add(x)
        new = []
        for y in members:
            new.append(at[x][y])
        for r in ring.elements:
            if left:
                new.append(mt[r][x])
            if right:
                new.append(mt[x][r])
        todo.extend(v for v in new if v not in members)
    return frozenset(members)


def all_ideals(ring: FiniteRing, sidedness: str = "two-sided") -> list[Ideal]:
    """Every ideal of the given sidedness, smallest first.

    Principal closures of single elements are joined pairwise until no new
    ideal appears; every ideal is a sum of principal ones, so this is complete.
    """
    found = {ideal_closure(ring, [x], sidedness) for x in ring.elements}
    frontier = set(found)
    while frontier:
        fresh = set()
        for i in frontier:
            for k in found:
                if i <= k or k <= i:
                    continue
                j = ideal_closure(ring, i | k, sidedness)
                if j not in found:
                    fresh.add(j)
        found |= fresh
        frontier = fresh
    return [Ideal(ring, e, sidedness) for e in sorted(found, key=lambda s: (len(s), sorted(s)))]


def maximal_ideals(ring: FiniteRing, sidedness: str = "two-sided") -> list[Ideal]:
    proper = [i for i in all_ideals(ring, sidedness) if i.is_proper]
    maximal = [
        i for i in proper if not any(i.elements < k.elements for k in proper)
    ]
    # reverse lexicographic: lists T(2)'s ideals as {0,4,6,7}, {0,3,5,6}
    return sorted(maximal, key=lambda i: sorted(i.elements), reverse=True)


def quasi_regular_radical(ring: FiniteRing) -> frozenset[int]:
    """``{x : 1 - a*x is a unit for every a}``."""
    u = ring.unit_set
    mt = ring.mul_table
    return frozenset(
        x for x in ring.elements if all(ring.sub(1, mt[a][x]) in u for a in ring.elements)
    )


def jacobson_radical(ring: FiniteRing) -> Ideal:
    """Jacobson radical, computed two ways that must agree.

    (a) intersection of the maximal left ideals; (b) the quasi-regular set
    ``{x : 1 - a*x is a unit for all a}``. A mismatch raises
    :class:`InternalDisagreement`.
    """
    left_max = maximal_ideals(ring, "left")
    by_ideals = frozenset(ring.elements)
    for i in left_max:
        by_ideals &= i.elements
    by_units = quasi_regular_radical(ring)
    if by_ideals != by_units:
        raise InternalDisagreement(by_ideals, by_units)
    return Ideal(ring, by_ideals, "two-sided")


def is_ideal(ring: FiniteRing, elements: Iterable[int], sidedness: str = "two-sided") -> bool:
    s = frozenset(elements)
    return ideal_closure(ring, s, sidedness) == s


def noncommuting_pair(ring: FiniteRing) -> tuple[int, int] | None:
    for a, b in combinations(ring.elements, 2):
        if ring.mul(a, b) != ring.mul(b, a):
            return a, b
    return None


# ---------------------------------------------------------------------------
# Cayley-table text format
# ---------------------------------------------------------------------------


def format_tables(ring: FiniteRing) -> str:
    """Serialize as: N, then N addition rows, then N multiplication rows."""
    buf = io.StringIO()
    buf.write(f"{ring.order}\n")
    for table in (ring.add_table, ring.mul_table):
        for row in table:
            buf.write(" ".join(str(v) for v in row) + "\n")
    return buf.getvalue()


def parse_tables(text: str) -> tuple[list[list[int]], list[list[int]]]:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise TableShapeError("empty table file")
    try:
        n = int(lines[0])
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise TableShapeError(f"non-integer token in table file: {exc}") from exc
    if len(rows) != 2 * n:
        raise TableShapeError(f"expected {2 * n} table rows after N={n}, got {len(rows)}")
    for r in rows:
        if len(r) != n:
            raise TableShapeError(f"row of length {len(r)} in a table of size {n}")
    return rows[:n], rows[n:]


def load_ring(path: str | Path, name: str | None = None) -> tuple[FiniteRing, list[int]]:
    path = Path(path)
    add, mul = parse_tables(path.read_text())
    return build_ring(add, mul, name=name or f"file:{path.name}")
