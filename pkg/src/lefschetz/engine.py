"""Weak/Strong Lefschetz decision procedures for monomial algebras.

For a monomial ideal the linear form ell = x_1 + ... + x_r is general
enough: the quotient has WLP (resp. SLP) for some general linear form
iff it does for this one.  All verdicts below are therefore exact
computations with this fixed ell, in characteristic 0 or mod p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .intlinalg import (IntegerMatrix, factor, Factorization,
                        nonzero_maximal_minor, rank_exact_modular, rank_mod_p)
from .monomials import MonomialIdeal, Monomial, monomials_of_degree

INJECTIVITY = "injectivity"
SURJECTIVITY = "surjectivity"
BIJECTIVITY = "bijectivity"


class WlpFailsInCharZero(ValueError):
    """Raised by bad_primes: failure in characteristic 0 spreads to every
    positive characteristic by semicontinuity, so no finite bad-prime set
    exists."""


class NotLevel(ValueError):
    pass


def multinomial(d: int, exponents) -> int:
    out = 1
    rem = d
    for e in exponents:
        out *= math.comb(rem, e)
        rem -= e
    return out


@dataclass(frozen=True)
class GradedMap:
    """Matrix of multiplication by ell^power from degree i to i+power,
    written in the standard monomial bases (revlex)."""

    source_degree: int
    power: int
    matrix: IntegerMatrix

    @property
    def source_dim(self) -> int:
        return self.matrix.cols

    @property
    def target_dim(self) -> int:
        return self.matrix.rows


def mult_matrix(ideal: MonomialIdeal, i: int, d: int) -> GradedMap:
    """Entry (m', m) is the multinomial coefficient of m'/m in ell^d
    when m divides m' and m' is standard, else 0."""
    if i < 0 or d < 0:
        raise ValueError("degrees must be non-negative")
    source = ideal.standard_basis(i)
    target = ideal.standard_basis(i + d)
    row_of = {m: k for k, m in enumerate(target)}
    rows = [[0] * len(source) for _ in target]
    steps = [(Monomial(e), multinomial(d, e)) for e in monomials_of_degree(ideal.num_vars, d)]
    for col, m in enumerate(source):
        for step, coeff in steps:
            k = row_of.get(m * step)
            if k is not None:
                rows[k][col] = coeff
    matrix = (IntegerMatrix.from_rows(rows) if target
              else IntegerMatrix(0, len(source)))
    return GradedMap(i, d, matrix)


@dataclass(frozen=True)
class MapRecord:
    source_degree: int
    power: int
    rank: int
    source_dim: int
    target_dim: int

    @property
    def maximal(self) -> bool:
        return self.rank == min(self.source_dim, self.target_dim)

    @property
    def injective(self) -> bool:
        return self.rank == self.source_dim

    @property
    def surjective(self) -> bool:
        return self.rank == self.target_dim


@dataclass(frozen=True)
class MapFailure:
    source_degree: int
    power: int
    kind: str


@dataclass(frozen=True)
class LefschetzReport:
    property_name: str
    characteristic: int
    holds: bool
    maps: tuple
    failures: tuple


# witness prime for the cheap full-rank shortcut below
_WITNESS_PRIME = 2147483647


def _rank(matrix: IntegerMatrix, characteristic: int) -> int:
    if characteristic != 0:
        return rank_mod_p(matrix, characteristic)
    full = min(matrix.rows, matrix.cols)
    if full == 0:
        return 0
    # rank mod p never exceeds the rational rank, so hitting the maximum
    # modulo one prime already proves maximal rank; only deficient-looking
    # matrices pay for the certified multimodular computation
    if rank_mod_p(matrix, _WITNESS_PRIME) == full:
        return full
    return rank_exact_modular(matrix)


def _classify(rec: MapRecord):
    if rec.maximal:
        return None
    if rec.source_dim == rec.target_dim:
        kind = BIJECTIVITY
    elif rec.source_dim < rec.target_dim:
        kind = INJECTIVITY
    else:
        kind = SURJECTIVITY
    return MapFailure(rec.source_degree, rec.power, kind)


def _check_propagation(records, is_level: bool):
    # Surjectivity persists upward for any artinian standard graded
    # algebra; injectivity persists downward for level ones.  A
    # violation here would mean the rank computation itself is broken.
    surj_seen = False
    for rec in records:
        if surj_seen and not rec.surjective:
            raise AssertionError(f"surjectivity did not persist at degree {rec.source_degree}")
        if rec.surjective:
            surj_seen = True
    if is_level:
        inj_failed = False
        for rec in records:
            if rec.injective and inj_failed:
                raise AssertionError(f"injectivity recovered at degree {rec.source_degree}")
            if not rec.injective:
                inj_failed = True


def decide_wlp(ideal: MonomialIdeal, characteristic: int = 0) -> LefschetzReport:
    """Check maximal rank of every ell-multiplication in one report.

    Every degree from 0 to the socle degree is computed and reported;
    persistence facts are used only as internal cross-checks, never to
    skip a degree.
    """
    h = ideal.hilbert_function()
    e = h.socle_degree
    records = []
    failures = []
    for i in range(e + 1):
        gm = mult_matrix(ideal, i, 1)
        if gm.source_dim == 0 or gm.target_dim == 0:
            rank = 0
        else:
            rank = _rank(gm.matrix, characteristic)
        rec = MapRecord(i, 1, rank, gm.source_dim, gm.target_dim)
        records.append(rec)
        bad = _classify(rec)
        if bad:
            failures.append(bad)
    _check_propagation(records, ideal.socle_profile().is_level)
    return LefschetzReport("WLP", characteristic, not failures,
                           tuple(records), tuple(failures))


def decide_slp(ideal: MonomialIdeal, characteristic: int = 0) -> LefschetzReport:
    """Check maximal rank of ell^d for all d >= 1 between nonzero pieces."""
    h = ideal.hilbert_function()
    e = h.socle_degree
    records = []
    failures = []
    for d in range(1, e + 1):
        for i in range(0, e - d + 1):
            gm = mult_matrix(ideal, i, d)
            rank = _rank(gm.matrix, characteristic)
            rec = MapRecord(i, d, rank, gm.source_dim, gm.target_dim)
            records.append(rec)
            bad = _classify(rec)
            if bad:
                failures.append(bad)
    return LefschetzReport("SLP", characteristic, not failures,
                           tuple(records), tuple(failures))


@dataclass(frozen=True)
class BadPrimeCertificate:
    """Exactly the primes p where WLP holds in characteristic 0 but fails
    mod p, with per-prime evidence of the rank drop.

    `minors` records, per degree, the factored nonzero maximal minor the
    candidates came from.  A prime can divide one minor without the rank
    dropping mod p (the drop must happen in every maximal minor), so
    candidates are verified by an actual mod-p rank before being listed.
    `unresolved_cofactor` is the product of composite residues the
    factoring budget could not split; it is coprime to all listed primes.
    """

    primes: tuple
    evidence: dict
    minors: dict
    unresolved_cofactor: int | None = None


def bad_primes(ideal: MonomialIdeal) -> BadPrimeCertificate:
    report = decide_wlp(ideal, 0)
    if not report.holds:
        raise WlpFailsInCharZero(
            "WLP already fails in characteristic 0; by semicontinuity it "
            "fails in every characteristic, so every prime is bad")
    e = ideal.hilbert_function().socle_degree
    grids = {}
    minors = {}
    for i in range(e):
        gm = mult_matrix(ideal, i, 1)
        if gm.source_dim == 0 or gm.target_dim == 0:
            continue
        grids[i] = gm.matrix
        mat = gm.matrix if gm.matrix.rows <= gm.matrix.cols else gm.matrix.transpose()
        minors[i] = factor(nonzero_maximal_minor(mat))
    candidates = sorted({p for f in minors.values() for p in f.factors})
    primes = []
    evidence = {}
    for p in candidates:
        for i, matrix in grids.items():
            expected = min(matrix.rows, matrix.cols)
            rank = rank_mod_p(matrix, p)
            if rank < expected:
                primes.append(p)
                evidence[p] = (i, rank, expected)
                break
    unresolved = 1
    for f in minors.values():
        c = f.cofactor
        for p in candidates:
            while c % p == 0:
                c //= p
        unresolved *= c
    return BadPrimeCertificate(tuple(primes), evidence, minors,
                               None if unresolved == 1 else unresolved)


@dataclass(frozen=True)
class HauselResult:
    injective: bool
    checked_degrees: tuple
    failures: tuple


def hausel_check(ideal: MonomialIdeal) -> HauselResult:
    """Injectivity of ell-multiplication on the lower half of a level
    algebra (characteristic 0), degree by degree with witnesses."""
    profile = ideal.socle_profile()  # raises NotArtinian when unbounded
    if not profile.is_level:
        raise NotLevel(f"socle degrees {sorted(set(profile.socle_degrees))}")
    e = ideal.hilbert_function().socle_degree
    checked = tuple(range((e - 1) // 2 + 1))
    failures = []
    for j in checked:
        gm = mult_matrix(ideal, j, 1)
        rank = _rank(gm.matrix, 0)
        if rank < gm.source_dim:
            failures.append((j, rank, gm.source_dim))
    return HauselResult(not failures, checked, tuple(failures))
