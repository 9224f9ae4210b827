"""Independent reference implementations used only by the tests.

Everything here recomputes library answers by a different route:
fraction-arithmetic Gaussian elimination instead of Bareiss or modular
elimination, literal polynomial multiplication instead of precomputed
binomial steps, series expansion with Fractions instead of integer
prefix sums.  Slow and simple on purpose.
"""

from fractions import Fraction
from itertools import permutations


def gauss_rank(rows) -> int:
    """Row-reduction rank over Q."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    rank = 0
    cols = len(m[0])
    for c in range(cols):
        pivot = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][c]
        m[rank] = [x * inv for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def det_by_expansion(rows) -> int:
    """Leibniz expansion; fine for sizes <= 7."""
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        seen = [False] * n
        for i in range(n):
            if seen[i]:
                continue
            length = 0
            j = i
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
        term = sign
        for i in range(n):
            term *= rows[i][perm[i]]
            if term == 0:
                break
        total += term
    return total


def poly_mul(p: dict, q: dict) -> dict:
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def poly_pow(p: dict, n: int, num_vars: int) -> dict:
    out = {(0,) * num_vars: 1}
    for _ in range(n):
        out = poly_mul(out, p)
    return out


def multiplication_rank(ideal, i: int, d: int, characteristic: int) -> int:
    """Rank of multiplication by (x_1 + ... + x_r)^d from degree i, done
    with literal polynomial arithmetic and Gaussian elimination."""
    r = ideal.num_vars
    ell = {}
    for t in range(r):
        e = [0] * r
        e[t] = 1
        ell[tuple(e)] = 1
    ld = poly_pow(ell, d, r)
    source = ideal.standard_basis(i)
    target = {m.exponents: k for k, m in enumerate(ideal.standard_basis(i + d))}
    rows = []
    for m in source:
        vec = [0] * len(target)
        prod = poly_mul({m.exponents: 1}, ld)
        for e, c in prod.items():
            k = target.get(e)
            if k is not None:
                vec[k] = c
        rows.append(vec)
    if characteristic == 0:
        return gauss_rank(rows)
    return gauss_rank_mod(rows, characteristic)


def gauss_rank_mod(rows, p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    if not m or not m[0]:
        return 0
    rank = 0
    for c in range(len(m[0])):
        pivot = next((r for r in range(rank, len(m)) if m[r][c] % p), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return rank


def series_prefix(num_vars: int, degrees, upto: int) -> list:
    """Coefficients of prod(1 - t^a) / (1 - t)^r via Fraction division
    of truncated power series."""
    n = upto + 1
    num = [Fraction(0)] * n
    num[0] = Fraction(1)
    for a in degrees:
        nxt = list(num)
        for k in range(a, n):
            nxt[k] -= num[k - a]
        num = nxt
    den = [Fraction(0)] * n
    den[0] = Fraction(1)
    for _ in range(num_vars):
        nxt = list(den)
        for k in range(1, n):
            nxt[k] -= den[k - 1]
        den = nxt
    out = [Fraction(0)] * n
    for k in range(n):
        acc = num[k]
        for j in range(k):
            acc -= out[j] * den[k - j]
        out[k] = acc / den[0]
    return [int(x) for x in out]
