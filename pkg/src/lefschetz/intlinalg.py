"""Exact linear algebra over the integers and prime fields.

Rank and determinant computations here are exact: fraction-free (Bareiss)
elimination over Python big integers, and vectorized row reduction over
F_p for machine-word primes.  Floating point is never used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class NonSquare(ValueError):
    pass


class NonPrimeModulus(ValueError):
    pass


class NotMaximalRank(ValueError):
    pass


class ZeroInput(ValueError):
    pass


@dataclass(frozen=True)
class IntegerMatrix:
    """Immutable integer matrix, entries in row-major order."""

    rows: int
    cols: int
    entries: tuple = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")

    @classmethod
    def from_rows(cls, rows) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        n = len(rows[0]) if rows else 0
        if any(len(r) != n for r in rows):
            raise ValueError("ragged rows")
        flat = tuple(x for r in rows for x in r)
        return cls(len(rows), n, flat)

    def entry(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix.from_rows(list(zip(*self.to_rows())) if self.rows and self.cols
                                       else [[] for _ in range(self.cols)])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


@dataclass(frozen=True)
class PrimeFieldMatrix:
    """Matrix over F_p; modulus must pass the primality check."""

    modulus: int
    rows: int
    cols: int
    entries: tuple = ()

    def __post_init__(self):
        _check_modulus(self.modulus)
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match dimensions")
        if any(not (0 <= x < self.modulus) for x in self.entries):
            raise ValueError("entries not reduced")

    @classmethod
    def reduce(cls, m: IntegerMatrix, p: int) -> "PrimeFieldMatrix":
        _check_modulus(p)
        return cls(p, m.rows, m.cols, tuple(x % p for x in m.entries))

    def rank(self) -> int:
        return _rank_mod_p_array(
            np.array(self.entries, dtype=np.int64).reshape(self.rows, self.cols)
            if self.entries else np.zeros((self.rows, self.cols), dtype=np.int64),
            self.modulus)


# ---------------------------------------------------------------- primality

# Deterministic Miller-Rabin witness set: proves primality for all
# n < 3.3e24, which covers every modulus and every factor this package
# produces at desk scale.  Beyond that bound the same witnesses make the
# test a (very strong) probable-prime check.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _check_modulus(p: int):
    # rank_mod_p works over int64; products must stay below 2**63
    if not is_probable_prime(p):
        raise NonPrimeModulus(f"modulus {p} is not prime")
    if p >= 2 ** 31:
        raise NonPrimeModulus(f"modulus {p} exceeds the machine-word limit")


# ------------------------------------------------------------- elimination

def _bareiss(rows: list) -> tuple:
    """Fraction-free elimination, in place on `rows`.

    Returns (rank, last_pivot, pivot_cols, perm) where `perm[k]` is the
    original index of the row sitting in slot k after pivoting.  The
    last pivot equals the determinant of the submatrix on rows
    perm[0:rank] (in slot order) and the pivot columns.  Divisions are
    exact by the Bareiss identity.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    perm = list(range(m))
    prev = 1
    last = 1
    pivot_cols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if rows[i][c]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
            perm[r], perm[piv] = perm[piv], perm[r]
        top = rows[r]
        acc = top[c]
        for i in range(r + 1, m):
            cur = rows[i]
            low = cur[c]
            for j in range(c + 1, n):
                cur[j] = (acc * cur[j] - low * top[j]) // prev
            cur[c] = 0
        prev = acc
        last = acc
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    return r, last, pivot_cols, perm


def _inversion_sign(seq) -> int:
    inv = 0
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                inv += 1
    return -1 if inv % 2 else 1


def rank_exact(m: IntegerMatrix) -> int:
    """Rank over the rationals via fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rank, _, _, _ = _bareiss(m.to_rows())
    return rank


def determinant(m: IntegerMatrix) -> int:
    """Exact determinant; the empty 0x0 matrix has determinant 1."""
    if not m.is_square:
        raise NonSquare(f"{m.rows}x{m.cols} matrix has no determinant")
    if m.rows == 0:
        return 1
    rank, last, _, perm = _bareiss(m.to_rows())
    if rank < m.rows:
        return 0
    return _inversion_sign(perm) * last


def nonzero_maximal_minor(m: IntegerMatrix) -> int:
    """A nonzero minor of order min(rows, cols).

    Requires maximal rank.  The pivot rows and columns are the first
    independent ones in elimination order, so the choice is
    deterministic; the returned value is the determinant of that
    submatrix with rows and columns in their original order.
    """
    k = min(m.rows, m.cols)
    if k == 0:
        return 1
    rank, last, _, perm = _bareiss(m.to_rows())
    if rank < k:
        raise NotMaximalRank(f"rank {rank} < min(rows, cols) = {k}")
    return _inversion_sign(perm[:rank]) * last


def _rank_mod_p_array(a: np.ndarray, p: int) -> int:
    a = np.mod(a, p)
    m, n = a.shape
    r = 0
    for c in range(n):
        if r == m:
            break
        col = a[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r, c:] = a[r, c:] * inv % p
        rest = a[r + 1:, c]
        mask = rest != 0
        if mask.any():
            a[r + 1:][mask] = (a[r + 1:][mask] - np.outer(rest[mask], a[r, :])) % p
        r += 1
    return r


def rank_mod_p(m: IntegerMatrix, p: int) -> int:
    """Rank of m over F_p; p must be a machine-word prime."""
    _check_modulus(p)
    if m.rows == 0 or m.cols == 0:
        return 0
    reduced = np.array([x % p for x in m.entries], dtype=np.int64)
    return _rank_mod_p_array(reduced.reshape(m.rows, m.cols), p)


# Primes just below 2**31 for the modular rank certificate.
_PRIME_POOL: list = []


def _prime_pool(count: int) -> list:
    n = _PRIME_POOL[-1] - 2 if _PRIME_POOL else 2 ** 31 - 1
    while len(_PRIME_POOL) < count:
        while not is_probable_prime(n):
            n -= 2
        _PRIME_POOL.append(n)
        n -= 2
    return _PRIME_POOL[:count]


def _hadamard_minor_bits(m: IntegerMatrix) -> int:
    """Bits needed to exceed any maximal-rank minor of m (Hadamard)."""
    rows = m.to_rows()
    k = min(m.rows, m.cols)
    row_sq = sorted((sum(x * x for x in r) for r in rows), reverse=True)[:k]
    col_sq = sorted((sum(x * x for x in r) for r in zip(*rows)), reverse=True)[:k]
    h2 = min(math.prod(x for x in row_sq if x) or 1,
             math.prod(x for x in col_sq if x) or 1)
    # a minor D satisfies D^2 <= h2, so half the bits of h2 bound |D|
    return h2.bit_length() // 2 + 2


def modular_prime_estimate(m: IntegerMatrix) -> int:
    """How many ~31-bit primes rank_exact_modular would use on m."""
    if m.rows == 0 or m.cols == 0:
        return 0
    return _hadamard_minor_bits(m) // 30 + 1


def rank_exact_modular(m: IntegerMatrix) -> int:
    """Exact rank via enough modular ranks to beat the Hadamard bound.

    rank(m) over Q equals rank mod p for every prime p not dividing some
    fixed nonzero maximal-rank minor D.  Running over distinct primes
    whose product exceeds |D| guarantees at least one of them does not
    divide D, so the maximum of the modular ranks is the exact rank.
    Much faster than Bareiss on large matrices; the result is still
    guaranteed, not heuristic.
    """
    if m.rows == 0 or m.cols == 0:
        return 0
    need_bits = _hadamard_minor_bits(m)
    primes = []
    have = 0
    i = 0
    while have < need_bits:
        primes = _prime_pool(i + 1)
        have += primes[i].bit_length() - 1
        i += 1
    return max(rank_mod_p(m, p) for p in primes)


# ------------------------------------------------------------ factorization

_TRIAL_LIMIT = 10 ** 6
_small_primes_cache: list = []


def _small_primes() -> list:
    if not _small_primes_cache:
        sieve = np.ones(_TRIAL_LIMIT + 1, dtype=bool)
        sieve[:2] = False
        for q in range(2, int(_TRIAL_LIMIT ** 0.5) + 1):
            if sieve[q]:
                sieve[q * q::q] = False
        _small_primes_cache.extend(int(x) for x in np.nonzero(sieve)[0])
    return _small_primes_cache


def _pollard_rho(n: int, max_steps: int) -> int:
    """Brent-cycle rho; returns a nontrivial factor or 1 on failure."""
    if n % 2 == 0:
        return 2
    for c in range(1, 20):
        y, r, q = 2, 1, 1
        g = 1
        x = ys = y
        steps = 0
        while g == 1 and steps < max_steps:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            j = 0
            while j < r and g == 1:
                ys = y
                for _ in range(min(128, r - j)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                j += 128
                steps += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return 1


@dataclass(frozen=True)
class Factorization:
    """Prime factorization with an explicit marker for what resisted.

    `cofactor` is 1 when the factorization is complete; otherwise it is
    a composite (never prime) residue that the rho budget did not split,
    coprime to every listed prime.
    """

    sign: int
    factors: dict = field(default_factory=dict)
    cofactor: int = 1

    @property
    def complete(self) -> bool:
        return self.cofactor == 1

    def value(self) -> int:
        return self.sign * math.prod(p ** e for p, e in self.factors.items()) * self.cofactor


def factor(n: int, rho_steps: int = 500_000) -> Factorization:
    """Factor n by trial division to 1e6, then Pollard rho on cofactors."""
    if n == 0:
        raise ZeroInput("cannot factor 0")
    sign = -1 if n < 0 else 1
    n = abs(n)
    found: dict = {}
    for p in _small_primes():
        if p * p > n:
            break
        while n % p == 0:
            found[p] = found.get(p, 0) + 1
            n //= p
    if n > 1 and n < _TRIAL_LIMIT ** 2:
        # below the square of the trial bound the residue must be prime
        found[n] = found.get(n, 0) + 1
        n = 1
    stack = [n] if n > 1 else []
    cofactor = 1
    while stack:
        x = stack.pop()
        if x == 1:
            continue
        if is_probable_prime(x):
            found[x] = found.get(x, 0) + 1
            continue
        g = _pollard_rho(x, rho_steps)
        if g in (1, x):
            cofactor *= x
            continue
        stack.append(g)
        stack.append(x // g)
    # keep the cofactor coprime to everything we did find
    for p in list(found):
        while cofactor % p == 0:
            found[p] += 1
            cofactor //= p
    return Factorization(sign, found, cofactor)
