"""Galois fields GF(p^k) and ternion rings T(q) of upper-triangular 2x2 matrices.

Field elements are integers whose base-p digits are polynomial coefficients,
lowest degree first: in GF(4) built on x^2+x+1 the element 3 is x + 1.
Polynomials are passed around as coefficient tuples in the same low-to-high
order, so ``(1, 1, 1)`` is x^2 + x + 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import NotAField, NotIrreducible, NotPrime, TableShapeError
from .ring_core import FiniteRing, build_ring

MAX_FIELD_ORDER = 16

# Element labels for T(2) as (a, b, c) entries of (a b; 0 c); index = label.
T2_LABELS: tuple[tuple[int, int, int], ...] = (
    (0, 0, 0),
    (1, 0, 1),
    (1, 1, 1),
    (1, 1, 0),
    (0, 0, 1),
    (1, 0, 0),
    (0, 1, 0),
    (0, 1, 1),
)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split ``q = p**k``; raise :class:`NotPrime` if q is not a prime power."""
    if q < 2:
        raise NotPrime(q)
    p = next(d for d in range(2, q + 1) if q % d == 0)
    k, rest = 0, q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrime(q)
    return p, k


# -- polynomials over GF(p), coefficient tuples low -> high -----------------


def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def poly_mod(num, den, p: int) -> tuple[int, ...]:
    r = _trim([x % p for x in num])
    d = _trim([x % p for x in den])
    if not d:
        raise ZeroDivisionError("polynomial division by zero")
    inv_lead = pow(d[-1], p - 2, p)
    while len(r) >= len(d):
        f = r[-1] * inv_lead % p
        shift = len(r) - len(d)
        for i, coef in enumerate(d):
            r[shift + i] = (r[shift + i] - f * coef) % p
        _trim(r)
    return tuple(r)


def _monic(degree: int, p: int):
    for low in product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def irreducible_factor(poly, p: int) -> tuple[int, ...] | None:
    """A monic factor of degree 1..deg/2, or None if ``poly`` is irreducible."""
    deg = len(_trim(list(poly))) - 1
    for d in range(1, deg // 2 + 1):
        for f in _monic(d, p):
            if not poly_mod(poly, f, p):
                return f
    return None


def default_polynomial(p: int, k: int) -> tuple[int, ...]:
    """Least monic irreducible of degree k, ordering by coefficients high to low."""
    for high_first in product(range(p), repeat=k):
        poly = tuple(reversed(high_first)) + (1,)
        if irreducible_factor(poly, p) is None:
            return poly
    raise AssertionError(f"no irreducible polynomial of degree {k} over GF({p})")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    k: int = 1
    reduction_polynomial: tuple[int, ...] | None = None
    max_order: int = MAX_FIELD_ORDER

    @property
    def q(self) -> int:
        return self.p**self.k

    def validate(self) -> FieldSpec:
        if not is_prime(self.p):
            raise NotPrime(self.p)
        if self.k < 1:
            raise ValueError("extension degree must be >= 1")
        if self.q > self.max_order:
            raise ValueError(f"GF({self.q}) exceeds the configured bound {self.max_order}")
        if self.k == 1:
            return self
        poly = self.reduction_polynomial
        if poly is None:
            return FieldSpec(self.p, self.k, default_polynomial(self.p, self.k), self.max_order)
        poly = tuple(int(c) % self.p for c in poly)
        if len(poly) != self.k + 1 or poly[-1] != 1:
            raise ValueError(f"reduction polynomial must be monic of degree {self.k}: {poly}")
        factor = irreducible_factor(poly, self.p)
        if factor is not None:
            raise NotIrreducible(poly, factor)
        return FieldSpec(self.p, self.k, poly, self.max_order)

    @classmethod
    def of_order(cls, q: int, **kw) -> FieldSpec:
        p, k = prime_power(q)
        return cls(p, k, **kw)


def _digits(x: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(x % p)
        x //= p
    return out


def _undigits(d, p: int) -> int:
    return sum(c * p**i for i, c in enumerate(d))


def build_field(spec: FieldSpec) -> FiniteRing:
    spec = spec.validate()
    p, k, q = spec.p, spec.k, spec.q
    digits = [_digits(x, p, k) for x in range(q)]
    add = [[_undigits([(s + t) % p for s, t in zip(digits[x], digits[y])], p) for y in range(q)] for x in range(q)]
    mul = []
    for x in range(q):
        row = []
        for y in range(q):
            prod = [0] * (2 * k - 1)
            for i, s in enumerate(digits[x]):
                for j, t in enumerate(digits[y]):
                    prod[i + j] += s * t
            rem = poly_mod(prod, spec.reduction_polynomial, p) if k > 1 else tuple(c % p for c in prod)
            row.append(_undigits(rem, p))
        mul.append(row)
    name = f"GF({q})"
    field, perm = build_ring(add, mul, name=name)
    assert perm == list(range(q))
    _require_field(field)
    return field


def _require_field(field: FiniteRing) -> None:
    for x in range(1, field.order):
        if 1 not in field.mul_table[x]:
            raise NotAField(x)
    if not field.is_commutative():
        raise NotAField(-1)


def ternion_order(q: int) -> list[tuple[int, int, int]]:
    """Element order for T(q): the standard labels 0..7 for q = 2, otherwise zero, identity,
    then the remaining (a, b, c) sorted lexicographically by (a, c, b)."""
    if q == 2:
        return list(T2_LABELS)
    rest = sorted(
        (t for t in product(range(q), repeat=3) if t not in ((0, 0, 0), (1, 0, 1))),
        key=lambda t: (t[0], t[2], t[1]),
    )
    return [(0, 0, 0), (1, 0, 1)] + rest


def build_ternions(field: FiniteRing) -> FiniteRing:
    """The ring of matrices (a b; 0 c) over ``field`` with matrix arithmetic."""
    _require_field(field)
    q = field.order
    fa, fm = field.add_table, field.mul_table
    entries = ternion_order(q)
    index = {t: i for i, t in enumerate(entries)}
    add, mul = [], []
    for a1, b1, c1 in entries:
        add.append([index[(fa[a1][a2], fa[b1][b2], fa[c1][c2])] for a2, b2, c2 in entries])
        # (a1 b1; 0 c1)(a2 b2; 0 c2) = (a1 a2, a1 b2 + b1 c2; 0, c1 c2)
        mul.append(
            [index[(fm[a1][a2], fa[fm[a1][b2]][fm[b1][c2]], fm[c1][c2])] for a2, b2, c2 in entries]
        )
    ring, perm = build_ring(add, mul, name=f"T({q})", matrix_entries=entries, base_field=field)
    if perm != list(range(len(entries))):
        raise TableShapeError("ternion labeling did not come out canonical")
    return ring


def ternions(q: int) -> FiniteRing:
    return build_ternions(build_field(FieldSpec.of_order(q)))


def radical_entry_indicator(ring: FiniteRing, element: int) -> bool:
    return element in ring.radical
