"""Ideals of powers of general linear forms, decided probabilistically.

"General" is realized as seeded integer coefficients: the first r forms
are the coordinate forms (harmless up to a change of coordinates) and
the rest get random coefficients in [-bound, bound].  All linear algebra
is integer-exact where affordable; on large instances ranks fall back to
screening modulo two fixed large primes.  The soundness rules are:

  * a full-rank witness certifies maximal rank for general forms
    (maximal rank is an open condition), so "holds" can be certified;
  * a rank deficiency for sampled forms never certifies generic
    deficiency, so "fails" is always at most probable;
  * any verdict that leaned on a screening prime (rather than an exact
    rank or a full-row-span certificate) is downgraded to probable.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .engine import multinomial
from .intlinalg import (IntegerMatrix, modular_prime_estimate, rank_exact,
                        rank_exact_modular, rank_mod_p)
from .monomials import HVector, monomials_of_degree

HOLDS = "holds"
FAILS = "fails"
OPEN = "open"
CONJECTURED_FAILS = "conjectured-fails"

CERTIFIED = "certified"
PROBABLE = "probable"
INCONCLUSIVE = "inconclusive"

# fixed screening primes, large enough that accidental rank drops of
# random integer matrices are practically impossible
_SCREEN_PRIMES = (2147483647, 2147483629)

# cost gates for the exact backends
_BAREISS_LIMIT = 48
_MODULAR_OP_LIMIT = 4_000_000_000


class NotArtinianInstance(ValueError):
    pass


class DegreeTooSmall(ValueError):
    pass


class Unsorted(ValueError):
    pass


class UnsupportedShape(ValueError):
    pass


class NonTerminatingPrediction(ValueError):
    """The requested series never goes non-positive; pass `length`."""


@dataclass(frozen=True)
class LinearFormConfig:
    num_vars: int
    exponents: tuple
    forms: tuple
    seed: int
    bound: int

    def __post_init__(self):
        if self.num_vars < 1:
            raise ValueError("need at least one variable")
        if not self.exponents or any(a < 1 for a in self.exponents):
            raise ValueError("exponents must be positive")
        if len(self.forms) != len(self.exponents):
            raise ValueError("one form per exponent required")
        for f in self.forms:
            if len(f) != self.num_vars or not any(f):
                raise ValueError("forms must be nonzero coefficient vectors")


def _sample_vector(rng, num_vars: int, bound: int) -> tuple:
    while True:
        v = tuple(rng.randint(-bound, bound) for _ in range(num_vars))
        if any(v):
            return v


def sample_config(num_vars: int, exponents, seed: int = 0, bound: int = 1000) -> LinearFormConfig:
    """Coordinate forms first, then seeded random forms; reproducible
    from (num_vars, exponents, seed, bound)."""
    exponents = tuple(exponents)
    if num_vars < 1:
        raise ValueError("need at least one variable")
    if bound < 10:
        raise ValueError("coefficient bound must be at least 10")
    rng = random.Random(f"forms:{num_vars}:{len(exponents)}:{seed}:{bound}")
    forms = []
    for i in range(len(exponents)):
        if i < num_vars:
            forms.append(tuple(1 if t == i else 0 for t in range(num_vars)))
        else:
            forms.append(_sample_vector(rng, num_vars, bound))
    return LinearFormConfig(num_vars, exponents, tuple(forms), seed, bound)


def _expand_power(coeffs, a: int) -> dict:
    """Monomial expansion of (sum c_t x_t)^a with exact coefficients."""
    r = len(coeffs)
    out = {}
    for e in monomials_of_degree(r, a):
        coeff = multinomial(a, e)
        for c, k in zip(coeffs, e):
            if k:
                coeff *= c ** k
        if coeff:
            out[e] = coeff
    return out


def _linear_poly(coeffs) -> dict:
    out = {}
    r = len(coeffs)
    for t, c in enumerate(coeffs):
        if c:
            e = tuple(1 if i == t else 0 for i in range(r))
            out[e] = c
    return out


class _GradedIdeal:
    """Degreewise spans of an ideal given by exact generator polynomials."""

    def __init__(self, num_vars: int, generators, horizon: int):
        self.num_vars = num_vars
        self.generators = list(generators)  # (degree, {exponent: coeff})
        self.horizon = horizon
        self._span_exact: dict = {}
        self._span_screen: dict = {}

    def ambient_dim(self, j: int) -> int:
        return len(monomials_of_degree(self.num_vars, j))

    def span_matrix(self, j: int, extra_columns=()) -> IntegerMatrix:
        """Columns: monomial multiples of the generators into degree j,
        preceded by any extra columns (each a {exponent: coeff} dict)."""
        basis = monomials_of_degree(self.num_vars, j)
        row_of = {e: i for i, e in enumerate(basis)}
        columns = list(extra_columns)
        for d, poly in self.generators:
            if d > j:
                continue
            for m in monomials_of_degree(self.num_vars, j - d):
                columns.append({tuple(a + b for a, b in zip(m, e)): c
                                for e, c in poly.items()})
        rows = [[0] * len(columns) for _ in basis]
        for ci, col in enumerate(columns):
            for e, c in col.items():
                rows[row_of[e]][ci] = c
        if not columns:
            return IntegerMatrix(len(basis), 0)
        return IntegerMatrix.from_rows(rows)

    # rank backends -----------------------------------------------------

    @staticmethod
    def _rank_exact_auto(m: IntegerMatrix):
        """Exact rank, or None when no exact backend fits the budget."""
        k = min(m.rows, m.cols)
        if k == 0:
            return 0
        if k <= _BAREISS_LIMIT:
            return rank_exact(m)
        primes = modular_prime_estimate(m)
        if primes * m.rows * m.cols <= _MODULAR_OP_LIMIT:
            return rank_exact_modular(m)
        return None

    def span_rank_exact(self, j: int, force: bool = False):
        got = self._span_exact.get(j)
        if got is None:
            m = self.span_matrix(j)
            got = self._rank_exact_auto(m)
            if got is None and force:
                got = rank_exact_modular(m)
            if got is not None:
                self._span_exact[j] = got
        return got

    def span_rank_screen(self, j: int, p: int) -> int:
        got = self._span_screen.get((j, p))
        if got is None:
            got = rank_mod_p(self.span_matrix(j), p)
            self._span_screen[(j, p)] = got
        return got

    def span_rank_best(self, j: int):
        """(rank, exact_flag); the screening value is a lower bound."""
        exact = self.span_rank_exact(j)
        if exact is not None:
            return exact, True
        return max(self.span_rank_screen(j, p) for p in _SCREEN_PRIMES), False

    def hilbert(self, force_exact: bool = False):
        """(values, all_exact).  Stops at the first zero; raises if the
        quotient is still alive past the horizon."""
        vals = []
        all_exact = True
        for j in range(self.horizon + 2):
            if force_exact:
                s, ex = self.span_rank_exact(j, force=True), True
            else:
                s, ex = self.span_rank_best(j)
            h = self.ambient_dim(j) - s
            if h == 0:
                return vals, all_exact
            vals.append(h)
            all_exact = all_exact and ex
        raise NotArtinianInstance(
            f"Hilbert function still positive in degree {self.horizon + 1}")


@dataclass(frozen=True)
class DegreeOutcome:
    """What happened at one multiplication map A_j -> A_{j+1}."""

    source_degree: int
    source_dim: int
    target_dim: int
    rank: int
    maximal: bool
    exact: bool
    trial: int | None = None
    deficiency: int | None = None


@dataclass(frozen=True)
class ProbabilisticVerdict:
    claim: str
    status: str
    trials: int
    successes: int
    degrees: tuple
    hilbert: tuple


def _assess_map(gi: _GradedIdeal, ell, j: int, h, h_exact: bool):
    """Decide maximal rank of x ell : A_j -> A_{j+1} for one sampled ell.

    Returns a DegreeOutcome without the trial index filled in.
    """
    src, tgt = h[j], h[j + 1]
    ell_cols = []
    for m in monomials_of_degree(gi.num_vars, j):
        col = {}
        for t, c in enumerate(ell):
            if c:
                e = list(m)
                e[t] += 1
                col[tuple(e)] = c
        ell_cols.append(col)
    K = gi.span_matrix(j + 1, extra_columns=ell_cols)
    ambient = gi.ambient_dim(j + 1)

    t1 = rank_mod_p(K, _SCREEN_PRIMES[0])
    if t1 == ambient:
        # the columns span everything over F_p, hence over Q: surjective,
        # so the map has maximal rank no matter what the dimensions are
        return DegreeOutcome(j, src, tgt, tgt, True, True)

    t_exact = gi._rank_exact_auto(K)
    s_exact = gi.span_rank_exact(j + 1) if t_exact is not None else None
    if t_exact is not None and s_exact is not None and h_exact:
        rank = t_exact - s_exact
        maximal = rank == min(src, tgt)
        return DegreeOutcome(j, src, tgt, rank, maximal, True,
                             deficiency=None if maximal else tgt - rank)

    # screening fallback: exact rank out of budget
    t2 = rank_mod_p(K, _SCREEN_PRIMES[1])
    s1 = gi.span_rank_screen(j + 1, _SCREEN_PRIMES[0])
    s2 = gi.span_rank_screen(j + 1, _SCREEN_PRIMES[1])
    rank = max(t1 - s1, t2 - s2)
    maximal = rank == min(src, tgt)
    return DegreeOutcome(j, src, tgt, rank, maximal, False,
                         deficiency=None if maximal else tgt - rank)


def _run_trials(gi: _GradedIdeal, num_vars: int, seed, bound: int, trials: int):
    h, h_exact = gi.hilbert()
    e = len(h) - 1
    pending = [j for j in range(e) if h[j] and h[j + 1]]
    outcomes = {}
    attempts: dict = {}
    successes = 0
    trials_run = 0
    for t in range(trials):
        if not pending:
            break
        trials_run += 1
        rng = random.Random(f"trial:{seed}:{t}:{bound}")
        ell = _sample_vector(rng, num_vars, bound)
        clean = True
        for j in list(pending):
            out = _assess_map(gi, ell, j, h, h_exact)
            if out.maximal:
                outcomes[j] = DegreeOutcome(out.source_degree, out.source_dim,
                                            out.target_dim, out.rank, True,
                                            out.exact, trial=t)
                pending.remove(j)
            else:
                clean = False
                prev = attempts.get(j)
                if prev is None or out.rank > prev.rank:
                    attempts[j] = out
        if clean:
            successes += 1
    for j in pending:
        outcomes[j] = attempts[j]
    ordered = tuple(outcomes[j] for j in sorted(outcomes))
    failed = [o for o in ordered if not o.maximal]
    if failed:
        claim, status = FAILS, PROBABLE
    else:
        claim = HOLDS
        status = CERTIFIED if all(o.exact for o in ordered) else PROBABLE
    return ProbabilisticVerdict(claim, status, trials_run, successes,
                                ordered, tuple(h))


def _power_ideal(cfg: LinearFormConfig) -> _GradedIdeal:
    coeff_rows = [list(f) for f in cfg.forms]
    if rank_exact(IntegerMatrix.from_rows(coeff_rows)) < cfg.num_vars:
        raise NotArtinianInstance("the linear forms do not span degree one")
    gens = [(a, _expand_power(f, a)) for f, a in zip(cfg.forms, cfg.exponents)]
    horizon = sum(a - 1 for a in cfg.exponents) + 1
    return _GradedIdeal(cfg.num_vars, gens, horizon)


def power_ideal_hf(cfg: LinearFormConfig) -> HVector:
    """Exact Hilbert function of R/(L_1^{a_1}, ..., L_n^{a_n})."""
    vals, _ = _power_ideal(cfg).hilbert(force_exact=True)
    return HVector(vals)


def wlp_powers(cfg: LinearFormConfig, trials: int = 5) -> ProbabilisticVerdict:
    """Probabilistic WLP check with a fresh linear form per trial.

    A degree certified maximal in any trial stays certified (maximal
    rank is open); only still-deficient degrees consume later trials.
    """
    if trials < 1:
        raise ValueError("need at least one trial")
    gi = _power_ideal(cfg)
    return _run_trials(gi, cfg.num_vars, cfg.seed, cfg.bound, trials)


def wlp_general_forms(num_vars: int, degrees, seed: int = 0,
                      trials: int = 5, bound: int = 1000) -> ProbabilisticVerdict:
    """Same probabilistic engine for dense random forms of the given
    degrees (e.g. random complete intersections)."""
    degrees = tuple(degrees)
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError("generator degrees must be positive")
    if bound < 10:
        raise ValueError("coefficient bound must be at least 10")
    rng = random.Random(f"genforms:{num_vars}:{degrees}:{seed}:{bound}")
    gens = []
    for d in degrees:
        basis = monomials_of_degree(num_vars, d)
        while True:
            poly = {e: rng.randint(-bound, bound) for e in basis}
            poly = {e: c for e, c in poly.items() if c}
            if poly:
                break
        gens.append((d, poly))
    horizon = sum(d - 1 for d in degrees) + 1
    gi = _GradedIdeal(num_vars, gens, horizon)
    return _run_trials(gi, num_vars, seed, bound, trials)


def froberg_prediction(num_vars: int, degrees, length: int | None = None) -> HVector:
    """Coefficients of the positive truncation of
    prod(1 - t^{a_i}) / (1 - t)^r.

    Without `length` the series must hit a non-positive coefficient; if
    it never does (fewer forms than variables, say) the call raises
    NonTerminatingPrediction and the caller should pass an explicit
    prefix length.
    """
    degrees = tuple(degrees)
    if num_vars < 1:
        raise ValueError("need at least one variable")
    if not degrees or any(a < 1 for a in degrees):
        raise ValueError("degrees must be positive")
    horizon = length if length is not None else sum(degrees) + num_vars + 2
    num = [0] * (horizon + 1)
    num[0] = 1
    for a in degrees:
        nxt = num[:]
        for i in range(a, horizon + 1):
            nxt[i] -= num[i - a]
        num = nxt
    for _ in range(num_vars):  # divide by (1 - t): running prefix sums
        for i in range(1, horizon + 1):
            num[i] += num[i - 1]
    out = []
    for c in num:
        if c <= 0:
            return HVector(out)
        out.append(c)
    if length is not None:
        return HVector(out[:length])
    raise NonTerminatingPrediction(
        "series stayed positive; pass length= for an infinite prefix")


def ei_fatpoint_dim(cfg: LinearFormConfig, j: int) -> int:
    """Dimension via fat-point duality: forms of degree j vanishing to
    order j - a_i + 1 at the point dual to L_i.

    Uses divided-power derivative rows, binomial(e, u) * c^(e-u), so the
    matrix stays integral.  Valid once j >= max exponent.
    """
    if j < max(cfg.exponents):
        raise DegreeTooSmall(f"duality needs degree >= {max(cfg.exponents)}")
    basis = monomials_of_degree(cfg.num_vars, j)
    rows = []
    for f, a in zip(cfg.forms, cfg.exponents):
        order = j - a + 1
        for total in range(order):
            for u in monomials_of_degree(cfg.num_vars, total):
                row = []
                for e in basis:
                    val = 1
                    for et, ut, ct in zip(e, u, f):
                        if et < ut:
                            val = 0
                            break
                        val *= math.comb(et, ut) * ct ** (et - ut)
                    row.append(val)
                rows.append(row)
    if not rows:
        return len(basis)
    m = IntegerMatrix.from_rows(rows)
    rank = _GradedIdeal._rank_exact_auto(m)
    if rank is None:
        rank = rank_exact_modular(m)
    return len(basis) - rank


# ------------------------------------------------------- encoded verdicts

def predict_4vars(exponents) -> str:
    """Known verdicts for five powers of general linear forms in four
    variables; anything not covered by an encoded fact is `open`."""
    exponents = tuple(exponents)
    if len(exponents) != 5:
        raise UnsupportedShape("need exactly five exponents")
    if list(exponents) != sorted(exponents):
        raise Unsorted("exponents must be sorted ascending")
    if any(a < 1 for a in exponents):
        raise ValueError("exponents must be positive")
    a1, a2, a3, a4, a5 = exponents
    if a1 < 2:
        return OPEN
    head = a1 + a2 + a3 + a4
    lam = head // 2 - 2 if head % 2 == 0 else (head - 7) // 2
    if a5 >= lam:
        return HOLDS
    if a1 == 2:
        return HOLDS
    if len(set(exponents)) == 1 and 3 <= a1 <= 12:
        return FAILS
    return OPEN


def predict_5vars(d: int, e: int) -> str:
    """Verdict for L_1^d, ..., L_5^d, L_6^(d+e) in five variables."""
    if d < 1 or e < 0:
        raise ValueError("need d >= 1 and e >= 0")
    if e == 0:
        return HOLDS if d <= 3 else FAILS
    if d % 2 == 1:
        return HOLDS if 2 * e >= 3 * d - 5 else FAILS
    return HOLDS if 2 * e >= 3 * d - 8 else FAILS


def predict_uniform(num_vars: int, num_forms: int, t: int) -> str:
    """Verdict for num_forms uniform t-th powers in num_vars variables;
    covers 2k variables with 2k+1 forms (k >= 2) and 7 variables with 8."""
    if t < 1:
        raise ValueError("power must be >= 1")
    if num_vars == 4 and num_forms == 5:
        # squares are covered by the smallest-exponent-2 clause of the
        # four-variable theorem; uniform failures start at t = 3
        return HOLDS if t <= 2 else FAILS
    if num_vars >= 6 and num_vars % 2 == 0 and num_forms == num_vars + 1:
        return HOLDS if t == 1 else FAILS
    if num_vars == 7 and num_forms == 8:
        if t <= 2:
            return HOLDS
        if t == 3:
            return CONJECTURED_FAILS
        return FAILS
    raise UnsupportedShape(f"{num_forms} forms in {num_vars} variables not encoded")
