"""Executable acceptance checks.

Shared by `lefschetz verify` and the test suite.  Each criterion is a
zero-argument callable returning (passed, detail); run_all wraps it with
timing and turns uncaught exceptions into failures.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import product

from . import aci as aci_mod
from . import engine, linforms, sequences
from .intlinalg import determinant, is_probable_prime
from .monomials import (MonomialIdeal, complete_intersection,
                        monomials_of_degree, random_level_ideal)

_BIG_ACI = (14, 21, 25, 2, 9, 13)
_BIG_ACI_DET = 2 * 3 ** 2 * 5 ** 3 * 11 ** 4 * 13 ** 5 * 19 * 23 ** 3 * 29 * 5011
_BIG_ACI_BAD = (2, 3, 5, 11, 13, 19, 23, 29, 5011)


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        word = "PASS" if self.passed else "FAIL"
        return f"[{self.number:2d}] {word} {self.name}: {self.detail} ({self.seconds:.1f}s)"


def _monomial_fixture():
    return MonomialIdeal.of(3, [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])


def _crit_fixture():
    ideal = _monomial_fixture()
    hf = tuple(ideal.hilbert_function())
    rep = engine.decide_wlp(ideal)
    prof = ideal.socle_profile()
    ok = (hf == (1, 3, 6, 6, 3) and not rep.holds
          and prof.cm_type == 3 and prof.is_level)
    return ok, (f"hf={hf}, wlp_holds={rep.holds}, "
                f"type={prof.cm_type}, level={prof.is_level}")


def _crit_stanley_slp():
    bad = []
    count = 0
    for r, cap in ((1, 5), (2, 5), (3, 5), (4, 3)):
        for exps in product(range(1, cap + 1), repeat=r):
            count += 1
            if not engine.decide_slp(complete_intersection(exps)).holds:
                bad.append(exps)
    return not bad, f"{count} monomial complete intersections, {len(bad)} SLP failures"


def _crit_char_p():
    facts = []
    for p in (2, 3, 5):
        facts.append(not engine.decide_wlp(complete_intersection((p, p, p)), p).holds)
        facts.append(engine.decide_wlp(complete_intersection((p, p)), p).holds)
    facts.append(not engine.decide_slp(complete_intersection((4, 4)), 2).holds)
    return all(facts), f"{sum(facts)}/7 expected mod-p outcomes"


def _crit_big_aci():
    data = aci_mod.aci_data(*_BIG_ACI)
    facts = [(data.s, data.A, data.B, data.C, data.M) == (26, 14, 7, 3, 4)]
    det_n = determinant(aci_mod.build_N(data))
    det_z = determinant(aci_mod.build_Z(data))
    facts.append(abs(det_n) == _BIG_ACI_DET)
    facts.append(abs(det_z) == _BIG_ACI_DET)
    ideal = aci_mod.aci_ideal(*_BIG_ACI)
    cert = engine.bad_primes(ideal)
    facts.append(tuple(sorted(cert.primes)) == _BIG_ACI_BAD)
    facts.append(cert.unresolved_cofactor is None
                 or all(cert.unresolved_cofactor % p for p in _BIG_ACI_BAD))
    for p in (7, 17, 31):
        facts.append(engine.decide_wlp(ideal, p).holds)
    for p in _BIG_ACI_BAD:
        facts.append(not engine.decide_wlp(ideal, p).holds)
    return all(facts), (f"(s,A,B,C,M)=({data.s},{data.A},{data.B},{data.C},"
                        f"{data.M}), |det|={abs(det_n)}, bad={sorted(cert.primes)}")


def _crit_nz_grid():
    checked = 0
    bad = []
    for a, b, c in product(range(1, 6), repeat=3):
        for al, be, ga in product(range(4), repeat=3):
            try:
                data = aci_mod.aci_data(a, b, c, al, be, ga)
            except aci_mod.NonMinimalGenerators:
                continue
            if not data.all_conditions:
                continue
            checked += 1
            dn = abs(determinant(aci_mod.build_N(data)))
            dz = abs(determinant(aci_mod.build_Z(data)))
            if dn != dz:
                bad.append((a, b, c, al, be, ga, dn, dz))
    return (not bad and checked > 0), f"{checked} admissible tuples, {len(bad)} |det N| vs |det Z| mismatches"


def _crit_li_zanello():
    primes = [p for p in range(2, 100) if is_probable_prime(p)]
    pairs = 0
    bad = []
    for a in range(1, 4):
        for b in range(a, 4):
            for c in range(b, 4):
                for p in primes:
                    pairs += 1
                    if not aci_mod.li_zanello_equiv(a, b, c, p):
                        bad.append((a, b, c, p))
    boxes = 0
    for a in range(1, 28):
        for b in range(a, 28):
            if a * b > 27:
                break
            for c in range(b, 28):
                if a * b * c > 27:
                    break
                boxes += 1
                if aci_mod.macmahon(a, b, c) != aci_mod.plane_partitions_bruteforce(a, b, c):
                    bad.append(("box", a, b, c))
    return not bad, f"{pairs} (box, prime) equivalences, {boxes} brute-force box counts, {len(bad)} failures"


def _crit_bk_char2():
    expected = {1, 3, 5, 11}
    bad = []
    for d in range(1, 13):
        holds = engine.decide_wlp(complete_intersection((d, d, d)), 2).holds
        if holds != (d in expected) or holds != aci_mod.brenner_kaid_char2(d):
            bad.append(d)
    return not bad, f"char-2 uniform CIs up to d=12 hold exactly on {sorted(expected)}; {len(bad)} mismatches"


def _crit_five_cubes():
    facts = []
    cfg = linforms.sample_config(4, (3,) * 5, seed=0)
    hf = tuple(linforms.power_ideal_hf(cfg))
    facts.append(hf == (1, 4, 10, 15, 15, 6))
    hits = 0
    for seed in range(5):
        v = linforms.wlp_powers(linforms.sample_config(4, (3,) * 5, seed=seed))
        at3 = {o.source_degree: o for o in v.degrees}.get(3)
        if (v.claim == linforms.FAILS and v.status == linforms.PROBABLE
                and at3 is not None and not at3.maximal and at3.deficiency == 1):
            hits += 1
    facts.append(hits == 5)
    fr = linforms.froberg_prediction(3, (3,) * 5)
    facts.append(len(fr) <= 4)
    h3 = linforms.power_ideal_hf(linforms.sample_config(3, (3,) * 5, seed=0))
    actual4 = h3[4] if len(h3) > 4 else 0
    facts.append(actual4 == 1)
    return all(facts), (f"hf={hf}, cokernel-1 witnessed on {hits}/5 seeds, "
                        f"prediction {tuple(fr)} vs actual degree-4 value {actual4}")


def _crit_three_vars_certified():
    rng = random.Random("acceptance-9")
    ok = 0
    worst = None
    for i in range(20):
        n = rng.randint(3, 6)
        exps = tuple(sorted(rng.randint(2, 5) for _ in range(n)))
        v = linforms.wlp_powers(linforms.sample_config(3, exps, seed=i))
        if v.claim == linforms.HOLDS and v.status == linforms.CERTIFIED:
            ok += 1
        elif worst is None:
            worst = (exps, v.claim, v.status)
    detail = f"{ok}/20 configs certified WLP"
    if worst:
        detail += f"; first miss {worst}"
    return ok == 20, detail


def _crit_predictors():
    bad = []
    for d, e in ((2, 0), (4, 0), (3, 1), (3, 2), (4, 1), (4, 2)):
        cfg = linforms.sample_config(5, (d,) * 5 + (d + e,), seed=0)
        got = linforms.wlp_powers(cfg, trials=3).claim
        want = linforms.predict_5vars(d, e)
        if got != want:
            bad.append(("six-forms", d, e, got, want))
    for t in (1, 2, 3):
        got = linforms.wlp_powers(linforms.sample_config(4, (t,) * 5, seed=0),
                                  trials=3).claim
        want = linforms.predict_uniform(4, 5, t)
        if got != want:
            bad.append(("uniform", t, got, want))
    for exps, want in (((3, 3, 3, 3, 3), linforms.FAILS),
                       ((2, 3, 3, 3, 3), linforms.HOLDS),
                       ((3, 3, 3, 3, 10), linforms.HOLDS)):
        pred = linforms.predict_4vars(exps)
        got = linforms.wlp_powers(linforms.sample_config(4, exps, seed=0),
                                  trials=3).claim
        if not (pred == want == got):
            bad.append(("five-forms", exps, pred, got, want))
    return not bad, f"12 predictor/computation comparisons, {len(bad)} disagreements" + (f": {bad}" if bad else "")


def _crit_fatpoints():
    rng = random.Random("acceptance-11")
    checked = 0
    bad = []
    for i in range(20):
        r = rng.randint(2, 4)
        n = rng.randint(r, 6)
        exps = tuple(sorted(rng.randint(2, 4) for _ in range(n)))
        cfg = linforms.sample_config(r, exps, seed=100 + i, bound=10)
        h = linforms.power_ideal_hf(cfg)
        for j in range(max(exps), len(h) + 1):
            want = h[j] if j < len(h) else 0
            if linforms.ei_fatpoint_dim(cfg, j) != want:
                bad.append((r, exps, j))
            checked += 1
    return not bad, f"{checked} fat-point/power-ideal dimension agreements, {len(bad)} failures"


def _crit_random_ci():
    rng = random.Random("acceptance-12")
    ok = 0
    for i in range(10):
        degs = tuple(sorted(rng.randint(2, 4) for _ in range(3)))
        v = linforms.wlp_general_forms(3, degs, seed=i)
        if v.claim == linforms.HOLDS and v.status == linforms.CERTIFIED:
            ok += 1
    return ok == 10, f"{ok}/10 random ternary complete intersections certified WLP"


def _crit_sequences():
    peak = (1, 13, 12, 13, 1)
    facts = [not sequences.is_unimodal(peak),
             not sequences.is_SI_sequence(peak),
             not sequences.wlp_hilbert_shape(peak)]
    fixtures = [complete_intersection(e) for e in
                ((1,), (4,), (2, 2), (3, 4), (2, 2, 2), (3, 3, 3), (4, 4, 4),
                 (5, 5, 5), (2, 3, 4), (2, 2, 2, 2), (3, 3, 3, 3))]
    fixtures.append(_monomial_fixture())
    shape_bad = []
    for ideal in fixtures:
        if engine.decide_wlp(ideal).holds:
            if not sequences.wlp_hilbert_shape(ideal.hilbert_function()):
                shape_bad.append(ideal.gens)
    rng = random.Random("acceptance-13")
    hausel_bad = []
    for _ in range(50):
        r = rng.randint(2, 4)
        e = rng.randint(2, 8)
        t = rng.randint(1, min(4, len(monomials_of_degree(r, e))))
        ideal = random_level_ideal(r, e, t, rng)
        res = engine.hausel_check(ideal)
        if not (res.injective and sequences.hausel_halfcheck(ideal.hilbert_function())):
            hausel_bad.append((r, e, t))
    type2_bad = []
    for _ in range(50):
        e = rng.randint(2, 8)
        ideal = random_level_ideal(3, e, 2, rng)
        if not engine.decide_wlp(ideal).holds:
            type2_bad.append(tuple(g.exponents for g in ideal.gens))
    ok = all(facts) and not shape_bad and not hausel_bad and not type2_bad
    return ok, (f"spike rejected {all(facts)}, shape misses {len(shape_bad)}, "
                f"bottom-half injectivity misses {len(hausel_bad)}/50, "
                f"type-2 WLP misses {len(type2_bad)}/50")


def _crit_hexagons():
    bad = []
    results = []
    for a in (1, 2):
        ci = complete_intersection((2 * a,) * 3)
        s = 3 * a - 2
        graph = aci_mod.bipartite_multiplication_graph(ci, s)
        tilings = aci_mod.count_matchings(graph)
        det = abs(determinant(engine.mult_matrix(ci, s, 1).matrix))
        mac = aci_mod.macmahon(a, a, a)
        results.append((a, tilings, mac, det))
        if not tilings == mac == det:
            bad.append((a, tilings, mac, det))
    return not bad, f"(a, tilings, box count, |det Z|) = {results}"


CRITERIA = (
    (1, "ternary cubes plus xyz fixture", _crit_fixture),
    (2, "monomial complete intersections have SLP", _crit_stanley_slp),
    (3, "characteristic-p power lemma", _crit_char_p),
    (4, "large almost complete intersection end-to-end", _crit_big_aci),
    (5, "reduced vs full determinant on the admissible grid", _crit_nz_grid),
    (6, "box-count divisibility matches mod-p WLP", _crit_li_zanello),
    (7, "characteristic-2 uniform complete intersections", _crit_bk_char2),
    (8, "five general cubes example", _crit_five_cubes),
    (9, "powers in three variables certified", _crit_three_vars_certified),
    (10, "encoded predictors agree with computation", _crit_predictors),
    (11, "fat-point duality agrees with power ideals", _crit_fatpoints),
    (12, "random ternary complete intersections certified", _crit_random_ci),
    (13, "sequence predicates and level-algebra suites", _crit_sequences),
    (14, "hexagon tilings, box counts, determinants", _crit_hexagons),
)


def run_all(only=None):
    """Yield CriterionResult for each criterion (or the `only` subset,
    given as an iterable of numbers or a comma-separated string)."""
    if isinstance(only, str):
        only = [int(x) for x in only.split(",") if x.strip()]
    wanted = set(only) if only else None
    for number, name, fn in CRITERIA:
        if wanted is not None and number not in wanted:
            continue
        start = time.perf_counter()
        try:
            passed, detail = fn()
        except Exception as exc:  # a crash is a failing criterion, not a crash of the runner
            passed, detail = False, f"raised {type(exc).__name__}: {exc}"
        yield CriterionResult(number, name, passed, detail,
                              time.perf_counter() - start)
