"""Artinian monomial algebras: standard bases, Hilbert functions, socle.

A quotient R/I by a monomial ideal has the standard monomials (those
outside I) as a vector-space basis; everything in this module reduces to
combinatorics on exponent tuples.  Monomial orders are fixed to
reverse-lexicographic so bases are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations


class DimensionMismatch(ValueError):
    pass


class NotArtinian(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Monomial:
    exponents: tuple

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("negative exponent")

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def divides(self, other: "Monomial") -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def times_var(self, i: int) -> "Monomial":
        e = list(self.exponents)
        e[i] += 1
        return Monomial(tuple(e))

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))


def revlex_key(exponents: tuple) -> tuple:
    return tuple(reversed(exponents))


@lru_cache(maxsize=None)
def monomials_of_degree(num_vars: int, degree: int) -> tuple:
    """All exponent tuples of the given total degree, revlex order."""
    if num_vars == 0:
        return (() ,) if degree == 0 else ()
    out = []
    for bars in combinations(range(degree + num_vars - 1), num_vars - 1):
        prev = -1
        e = []
        for b in bars:
            e.append(b - prev - 1)
            prev = b
        e.append(degree + num_vars - 2 - prev)
        out.append(tuple(e))
    out.sort(key=revlex_key)
    return tuple(out)


class HVector(tuple):
    """Hilbert function of an artinian algebra, trailing zeros stripped."""

    def __new__(cls, values):
        vals = list(values)
        while vals and vals[-1] == 0:
            vals.pop()
        if any(v < 0 for v in vals):
            raise ValueError("negative value")
        if vals and vals[0] != 1:
            raise ValueError("degree-0 piece must have dimension 1")
        return super().__new__(cls, vals)

    @property
    def socle_degree(self) -> int:
        return len(self) - 1


@dataclass(frozen=True)
class SocleProfile:
    cm_type: int
    socle_degrees: tuple
    is_level: bool
    monomials: tuple


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal given by its minimal generators.

    Use `minimalize` (or the `of` convenience constructor) rather than
    building instances directly, so the generator set is reduced and
    deterministically ordered.
    """

    num_vars: int
    gens: tuple
    _basis_cache: dict = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def of(cls, num_vars: int, exponent_tuples) -> "MonomialIdeal":
        return minimalize(num_vars, [Monomial(tuple(e)) for e in exponent_tuples])

    def is_artinian(self) -> bool:
        """True when every variable has a pure power among the generators."""
        for i in range(self.num_vars):
            if not any(all(e == 0 for j, e in enumerate(g.exponents) if j != i)
                       for g in self.gens):
                return False
        return True

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def standard_basis(self, degree: int) -> tuple:
        """Monomials of the given degree outside the ideal, revlex order.

        Cached per degree; recomputation is idempotent so concurrent
        readers at worst duplicate work, never disagree.
        """
        got = self._basis_cache.get(degree)
        if got is None:
            gens = [g.exponents for g in self.gens]
            got = tuple(Monomial(e) for e in monomials_of_degree(self.num_vars, degree)
                        if not any(all(x <= y for x, y in zip(g, e)) for g in gens))
            self._basis_cache[degree] = got
        return got

    def dim(self, degree: int) -> int:
        return len(self.standard_basis(degree))

    def hilbert_function(self) -> HVector:
        if not self.is_artinian():
            raise NotArtinian(f"no pure power for some variable in {self.gens}")
        vals = []
        d = 0
        while True:
            h = self.dim(d)
            if h == 0:
                break
            vals.append(h)
            d += 1
        return HVector(vals)

    def socle_degree(self) -> int:
        return self.hilbert_function().socle_degree

    def socle_profile(self) -> SocleProfile:
        """Socle = standard monomials killed by every variable."""
        if not self.is_artinian():
            raise NotArtinian(f"no pure power for some variable in {self.gens}")
        socle = []
        d = 0
        while True:
            basis = self.standard_basis(d)
            if not basis:
                break
            above = set(self.standard_basis(d + 1))
            for m in basis:
                if all(m.times_var(i) not in above for i in range(self.num_vars)):
                    socle.append(m)
            d += 1
        degrees = tuple(m.degree for m in socle)
        return SocleProfile(
            cm_type=len(socle),
            socle_degrees=degrees,
            is_level=len(set(degrees)) <= 1,
            monomials=tuple(socle),
        )


def minimalize(num_vars: int, monomials) -> MonomialIdeal:
    """Drop generators divisible by another; deduplicate and sort."""
    ms = []
    for m in monomials:
        if len(m.exponents) != num_vars:
            raise DimensionMismatch(
                f"generator {m.exponents} has {len(m.exponents)} exponents, expected {num_vars}")
        ms.append(m)
    ms = sorted(set(ms), key=lambda m: (m.degree, revlex_key(m.exponents)))
    kept = []
    for m in ms:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return MonomialIdeal(num_vars, tuple(kept))


def complete_intersection(exponents) -> MonomialIdeal:
    """The ideal of pure powers x_i^{a_i}."""
    a = list(exponents)
    r = len(a)
    if any(x < 1 for x in a):
        raise ValueError("exponents must be >= 1")
    gens = []
    for i, ai in enumerate(a):
        e = [0] * r
        e[i] = ai
        gens.append(Monomial(tuple(e)))
    return MonomialIdeal(r, tuple(gens))


def ideal_from_socle_monomials(num_vars: int, socle) -> MonomialIdeal:
    """The largest monomial ideal with the given monomials in its socle.

    The quotient has basis the divisors of the given monomials.  When
    all of them share one degree the quotient is level and its type is
    the number of monomials, which makes this the standard way to build
    level monomial algebras.
    """
    socle = [Monomial(tuple(m)) if not isinstance(m, Monomial) else m for m in socle]
    if not socle:
        raise ValueError("empty socle")
    if any(len(m.exponents) != num_vars for m in socle):
        raise DimensionMismatch("socle monomial with wrong variable count")

    def in_ideal(e):
        return not any(all(x <= y for x, y in zip(e, f.exponents)) for f in socle)

    top = max(m.degree for m in socle)
    gens = []
    for d in range(1, top + 2):
        for e in monomials_of_degree(num_vars, d):
            if not in_ideal(e):
                continue
            below = []
            for i in range(num_vars):
                if e[i]:
                    shrunk = list(e)
                    shrunk[i] -= 1
                    below.append(tuple(shrunk))
            if all(not in_ideal(x) for x in below):
                gens.append(Monomial(e))
    return minimalize(num_vars, gens)


def random_level_ideal(num_vars: int, socle_degree: int, cm_type: int, rng) -> MonomialIdeal:
    """Sample a level artinian monomial algebra of the given type."""
    pool = monomials_of_degree(num_vars, socle_degree)
    if cm_type < 1 or cm_type > len(pool):
        raise ValueError(f"type {cm_type} not achievable in degree {socle_degree}")
    chosen = rng.sample(pool, cm_type)
    return ideal_from_socle_monomials(num_vars, chosen)
