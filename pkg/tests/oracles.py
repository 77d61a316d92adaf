"""Independent brute-force oracles.

Nothing here touches the package's Cayley tables or closure machinery:
ternions are handled as explicit (a, b, c) matrices over Z/p, unimodularity
is a sumset search over all coefficient choices, and the radical is taken to
be the strictly upper-triangular matrices.

Run as a script to print the census values pinned in the tests.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def ternion_ops(p: int):
    elems = list(product(range(p), repeat=3))

    def add(x, y):
        return ((x[0] + y[0]) % p, (x[1] + y[1]) % p, (x[2] + y[2]) % p)

    def mul(x, y):
        a1, b1, c1 = x
        a2, b2, c2 = y
        return (a1 * a2 % p, (a1 * b2 + b1 * c2) % p, c1 * c2 % p)

    return elems, add, mul


def ring_axioms_hold(add, mul) -> bool:
    """Exhaustive axiom check on raw nested-list tables; True iff a unital ring."""
    n = len(add)
    r = range(n)
    for a in r:
        for b in r:
            if add[a][b] != add[b][a]:
                return False
            for c in r:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    return False
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    return False
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    return False
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]:
                    return False
    zeros = [z for z in r if all(add[z][x] == x for x in r)]
    if not zeros:
        return False
    if not all(any(add[x][y] == zeros[0] for y in r) for x in r):
        return False
    return any(all(mul[e][x] == x and mul[x][e] == x for x in r) for e in r)


def ternion_census(p: int, n: int) -> dict:
    """Free cyclic submodules of T(p)^n with only non-unimodular generators."""
    elems, add, mul = ternion_ops(p)
    one = (1, 0, 1)
    zero = (0, 0, 0)

    @lru_cache(maxsize=None)
    def sums(coords):
        reach = {zero}
        for r in coords:
            reach = {add(s, mul(r, x)) for s in reach for x in elems}
        return frozenset(reach)

    def unimodular(v):
        return one in sums(tuple(sorted(v)))

    def orbit(v):
        return frozenset(tuple(mul(al, r) for r in v) for al in elems)

    in_radical = lambda x: x[0] == 0 and x[2] == 0  # noqa: E731

    seen = {}
    for v in product(elems, repeat=n):
        if unimodular(v):
            continue
        o = orbit(v)
        if len(o) == len(elems):
            seen.setdefault(o, v)

    classes: dict[int, int] = {}
    gen_counts = set()
    kept = 0
    for o in seen:
        gens = [w for w in o if orbit(w) == o]
        if any(unimodular(w) for w in gens):
            continue
        kept += 1
        gen_counts.add(len(gens))
        sig = {sum(1 for x in w if in_radical(x)) for w in gens}
        assert len(sig) == 1, sig
        s = sig.pop()
        classes[s] = classes.get(s, 0) + 1
    return {"count": kept, "classes": dict(sorted(classes.items(), reverse=True)),
            "generators_per_submodule": sorted(gen_counts)}


def pg_line_zero_counts(q_prime: int) -> dict[int, int]:
    """Lines of PG(2, p) by zero entries of their normalized dual vectors."""
    p = q_prime
    seen = set()
    for u in product(range(p), repeat=3):
        if not any(u):
            continue
        lead = next(c for c in u if c)
        inv = pow(lead, p - 2, p)
        seen.add(tuple(c * inv % p for c in u))
    out: dict[int, int] = {}
    for u in seen:
        z = u.count(0)
        out[z] = out.get(z, 0) + 1
    return dict(sorted(out.items(), reverse=True))


if __name__ == "__main__":
    for p, n in ((2, 2), (2, 3), (3, 2), (3, 3)):
        print(f"T({p})^{n}:", ternion_census(p, n))
    print("PG(2,3) lines by zero count:", pg_line_zero_counts(3))
