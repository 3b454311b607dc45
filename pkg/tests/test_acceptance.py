"""Acceptance criteria; a PASS/FAIL line per criterion is printed in the summary."""

import itertools
import random
from fractions import Fraction
from math import comb, factorial

import mpmath
import pytest

from tornheim.convergence import ConvergenceQuery, first_failing_k, mt_convergence_check, mzv_convergence_check
from tornheim.core import MTIndex, MZVIndex, lemma_identity_holds
from tornheim.evaluator import (
    eval_combination_truncated,
    eval_mt_float,
    eval_mzv_float,
    truncated_mt,
    truncated_tl,
)
from tornheim.reducer import (
    closed_form_ones,
    opposite_parity,
    product_to_mzv,
    reduce,
    reduce_level,
    reduce_top,
)

mpmath.mp.dps = 40
SEED = 20101


def sweep_indices():
    """Every MT index of depth <= 3 and weight <= 8."""
    out = []
    for r in range(1, 4):
        for entries in itertools.product(range(1, 8), repeat=r + 1):
            if sum(entries) <= 8:
                out.append(MTIndex(entries[:-1], entries[-1]))
    return out


@pytest.fixture(scope="module")
def sweep():
    return {t: reduce(t) for t in sweep_indices()}


@pytest.mark.criterion(1, "exact truncation equivalence, depth<=3, weight<=8, N in {10,25,50}")
def test_exact_truncation_equivalence(sweep):
    assert len(sweep) == 154
    mismatches = [
        (t, N)
        for t, combo in sweep.items()
        for N in (10, 25, 50)
        if truncated_mt(t, N) != eval_combination_truncated(combo, N)
    ]
    assert mismatches == []


def _rewrites(sweep):
    for t in sweep:
        if t.depth < 2:
            continue
        top = reduce_top(t)
        yield ("top", t, top)
        for key in top:
            if key.level > 1:
                yield ("level", key, reduce_level(key))


@pytest.mark.criterion(2, "stagewise truncation equivalence on 20 sampled rewrites, N in {10,25}")
def test_stagewise_truncation_equivalence(sweep):
    pool = list(_rewrites(sweep))
    tops = [p for p in pool if p[0] == "top"]
    levels = [p for p in pool if p[0] == "level"]
    rng = random.Random(SEED)
    sample = rng.sample(tops, 10) + rng.sample(levels, 10)
    for kind, left, right in sample:
        for N in (10, 25):
            lhs = truncated_mt(left, N) if kind == "top" else truncated_tl(left, N)
            rhs = sum((c * truncated_tl(k, N) for k, c in right.items()), Fraction(0))
            assert lhs == rhs, (left, N)


@pytest.mark.criterion(3, "reduce(T(1,...,1;s)) == r! zeta(s+1,1,...,1) for r<=5, s<=4")
def test_closed_form_oracle():
    for r, s in itertools.product(range(1, 6), range(1, 5)):
        assert reduce(MTIndex((1,) * r, s)) == closed_form_ones(r, s)


def euler_display(s, t):
    acc = {}
    for a in range(s):
        key = MZVIndex((t + a, s - a))
        acc[key] = acc.get(key, 0) + comb(a + t - 1, t - 1)
    for a in range(t):
        key = MZVIndex((s + a, t - a))
        acc[key] = acc.get(key, 0) + comb(a + s - 1, s - 1)
    return acc


@pytest.mark.criterion(4, "Euler decomposition for 2<=s,t<=6 and P(2,2) = pi^4/36 within 1e-6")
def test_euler_decomposition():
    for s, t in itertools.product(range(2, 7), repeat=2):
        assert product_to_mzv((s, t)) == euler_display(s, t), (s, t)
    combo = product_to_mzv((2, 2))
    value = sum(float(c) * eval_mzv_float(z, 1e-8) for z, c in combo.items())
    assert abs(value - float(mpmath.pi**4 / 36)) <= 1e-6


@pytest.mark.criterion(5, "partial fraction identity on 1000 random inputs, r<=4, s_k<=4")
def test_lemma_property_suite():
    rng = random.Random(SEED)
    checked = 0
    while checked < 1000:
        r = rng.randint(1, 4)
        s = [rng.randint(1, 4) for _ in range(r)]
        x = [
            Fraction(rng.choice([n for n in range(-9, 10) if n]), rng.randint(1, 9))
            for _ in range(r)
        ]
        if sum(x) == 0:
            continue
        assert lemma_identity_holds(x, s), (x, s)
        checked += 1


@pytest.mark.criterion(6, "output coefficients, weight, depth, admissibility, convergence")
def test_structural_invariants(sweep):
    for t, combo in sweep.items():
        assert combo
        for z, c in combo.items():
            assert c > 0 and c.denominator == 1
            assert (z.weight, z.depth) == (t.weight, t.depth)
            assert z.args[0] >= 2
            assert mzv_convergence_check(z.args)


@pytest.mark.criterion(7, "convergence criteria: (2,0,2) fails at k=2, sweep passes, permutations")
def test_convergence_criteria(sweep):
    q = ConvergenceQuery((2, 0, 2))
    assert not mzv_convergence_check(q) and first_failing_k(q) == 2
    for t in sweep:
        assert mt_convergence_check(ConvergenceQuery(t.args, t.last))
    rng = random.Random(SEED)
    for _ in range(100):
        r = rng.randint(1, 6)
        sigmas = [Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for _ in range(r)]
        sigma = Fraction(rng.randint(-4, 16), rng.randint(1, 4))
        perm = rng.sample(sigmas, r)
        assert mt_convergence_check(ConvergenceQuery(sigmas, sigma)) == mt_convergence_check(
            ConvergenceQuery(perm, sigma)
        )


@pytest.mark.criterion(8, "T(1,...,1;1) and T(1,...,1;2) against single-zeta formulas, 1e-4")
def test_single_zeta_identities():
    z = mpmath.zeta
    for r in range(1, 5):
        ones = (1,) * r
        expected_1 = factorial(r) * z(r + 1)
        expected_2 = factorial(r) * (
            mpmath.mpf(r + 1) / 2 * z(r + 2)
            - mpmath.mpf(1) / 2 * sum(z(k + 1) * z(r + 1 - k) for k in range(1, r))
        )
        assert abs(eval_mt_float(MTIndex(ones, 1), 1e-5) - float(expected_1)) <= 1e-4
        assert abs(eval_mt_float(MTIndex(ones, 2), 1e-5) - float(expected_2)) <= 1e-4


@pytest.mark.criterion(9, "opposite-parity predicate and parity preservation")
def test_parity(sweep):
    for r in range(1, 7):
        for w in range(r + 1, 13):
            assert opposite_parity(w, r) == ((w + r) % 2 == 1)
    for t, combo in sweep.items():
        for key in combo:
            assert opposite_parity(key.weight, key.depth) == opposite_parity(t.weight, t.depth)
