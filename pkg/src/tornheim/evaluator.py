"""Exact truncated sums and certified floating-point approximations.

Truncation conventions: MT and T_l sums keep the terms with
``m_1 + ... + m_r <= N``; MZVs keep ``n_1 <= N`` (the largest variable).
Under ``base_case`` these index sets coincide, which makes the truncated
identities exact for every rewrite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Mapping, Sequence, Tuple

import numpy as np

from .core import MTIndex, MZVCombination, MZVIndex, TlIndex
from .reducer import reduce

MIN_EPS = 1e-10
MAX_CUTOFF = 1 << 22
_START_CUTOFF = 64


@lru_cache(maxsize=None)
def _inv_pow(n: int, s: int) -> Fraction:
    return Fraction(1, n**s)


def _convolve_free(exponents: Sequence[int], N: int) -> List[Fraction]:
    """c[n] = sum over m_1+..+m_l = n of prod m_k**-exponents_k, n = 0..N."""
    c = [Fraction(0)] + [_inv_pow(m, exponents[0]) for m in range(1, N + 1)]
    for s in exponents[1:]:
        f = [_inv_pow(m, s) for m in range(1, N + 1)]
        nxt = [Fraction(0)] * (N + 1)
        for n in range(2, N + 1):
            nxt[n] = sum((c[n - m] * f[m - 1] for m in range(1, n)), Fraction(0))
        c = nxt
    return c


def truncated_mzv(z: MZVIndex, N: int) -> Fraction:
    """Sum over N >= n_1 > ... > n_r > 0 of prod n_j**-s_j, exactly."""
    if N < 1:
        raise ValueError("cutoff must be >= 1")
    partial = [Fraction(1)] * (N + 1)  # empty suffix
    for s in reversed(z.args):
        nxt = [Fraction(0)] * (N + 1)
        for n in range(1, N + 1):
            nxt[n] = nxt[n - 1] + _inv_pow(n, s) * partial[n - 1]
        partial = nxt
    return partial[N]


def truncated_mt(t: MTIndex, N: int) -> Fraction:
    """Sum of prod m_k**-s_k * (sum m_k)**-s over m_1 + ... + m_r <= N."""
    if N < 1:
        raise ValueError("cutoff must be >= 1")
    c = _convolve_free(t.args, N)
    return sum((c[n] * _inv_pow(n, t.last) for n in range(1, N + 1)), Fraction(0))


def truncated_tl(t: TlIndex, N: int) -> Fraction:
    """Truncation of T_l(s_1..s_r) to n_r <= N."""
    if N < 1:
        raise ValueError("cutoff must be >= 1")
    g = _convolve_free(t.args[: t.level], N)
    for s in t.args[t.level:]:
        nxt = [Fraction(0)] * (N + 1)
        below = Fraction(0)
        for n in range(1, N + 1):
            nxt[n] = below * _inv_pow(n, s)
            below += g[n]
        g = nxt
    return sum(g, Fraction(0))


def eval_combination_truncated(c: Mapping[MZVIndex, Fraction], N: int) -> Fraction:
    return sum((coeff * truncated_mzv(z, N) for z, coeff in c.items()), Fraction(0))


@dataclass(frozen=True)
class VerificationReport:
    input: MTIndex
    cutoffs: Tuple[int, ...]
    lhs: Tuple[Fraction, ...]
    rhs: Tuple[Fraction, ...]
    reduced: MZVCombination

    @property
    def verdict(self) -> bool:
        return all(a == b for a, b in zip(self.lhs, self.rhs))


def verify_reduction(t: MTIndex, cutoffs: Sequence[int]) -> VerificationReport:
    """Compare truncations of ``t`` and of ``reduce(t)`` at every cutoff.

    A failed verdict means a bug in the rewrite, never bad input.
    """
    cutoffs = tuple(cutoffs)
    if not cutoffs:
        raise ValueError("need at least one cutoff")
    reduced = reduce(t)
    lhs = tuple(truncated_mt(t, N) for N in cutoffs)
    rhs = tuple(eval_combination_truncated(reduced, N) for N in cutoffs)
    return VerificationReport(t, cutoffs, lhs, rhs, reduced)


# -- floating point ---------------------------------------------------------


class PrecisionError(ValueError):
    """Requested accuracy is out of reach; ``achievable`` is the best bound."""

    def __init__(self, requested: float, achievable: float):
        self.requested = requested
        self.achievable = achievable
        super().__init__(
            f"requested eps={requested:g} is below the supported floor; "
            f"achievable bound is {achievable:.3g}"
        )


@dataclass(frozen=True)
class Approximation:
    value: float
    error: float  # guaranteed bound on |value - exact|
    cutoff: int


def _tail_bounds(head: Tuple[int, ...], N: int) -> Tuple[float, float]:
    """Bounds on the sum over n_1 > ... > n_i > N of prod n_j**-head_j.

    Comparing the sum with integrals over unit boxes gives
    ``c * (N+1)**(i-S) * J <= tail <= N**(i-S) * J`` where S = sum(head),
    ``J = prod_k 1/(S_k - k)`` over the partial sums S_k, and
    ``c = prod_j (1 + (i-j)/(N+1))**-head_j``.
    """
    i = len(head)
    J = 1.0
    S = 0
    for k, s in enumerate(head, start=1):
        S += s
        J /= S - k
    c = 1.0
    for j, s in enumerate(head, start=1):
        c *= (1.0 + (i - j) / (N + 1)) ** -s
    upper = J * float(N) ** (i - S)
    lower = c * J * float(N + 1) ** (i - S)
    return lower, upper


def _suffix_partials(args: Tuple[int, ...], N: int) -> List[float]:
    """zeta_N(args[i:]) for i = 0..r, with zeta_N(empty) = 1."""
    n = np.arange(1, N + 1, dtype=np.longdouble)
    partial = np.ones(N + 1, dtype=np.longdouble)
    out = [1.0]
    for s in reversed(args):
        terms = n**-s * partial[:-1]
        partial = np.concatenate(([0], np.cumsum(terms)))
        out.append(partial[-1])
    return out[::-1]


def _bracket(z: MZVIndex, N: int) -> Tuple[float, float]:
    """Midpoint and half-width of an interval containing zeta(z).

    Splits the chain n_1 > ... > n_r by how many variables exceed N:
    zeta(s) = sum_i tail_{>N}(s_1..s_i) * zeta_N(s_{i+1}..s_r), exactly.
    """
    if not z.admissible:
        raise ValueError(f"{z} is not admissible (first argument must be >= 2)")
    partials = _suffix_partials(z.args, N)
    low = high = partials[0]
    for i in range(1, z.depth + 1):
        lo, hi = _tail_bounds(z.args[:i], N)
        low += lo * partials[i]
        high += hi * partials[i]
    rounding = 8 * N * z.depth * float(np.finfo(np.longdouble).eps) * high
    return float((low + high) / 2), float((high - low) / 2) + rounding


def approximate_combination(c: Mapping[MZVIndex, Fraction], eps: float) -> Approximation:
    """Evaluate a combination of admissible MZVs to absolute error <= eps."""
    if not eps > 0:
        raise ValueError("eps must be positive")
    if eps < MIN_EPS:
        raise PrecisionError(eps, MIN_EPS)
    for z in c:
        if not z.admissible:
            raise ValueError(f"{z} is not admissible (first argument must be >= 2)")
    N = _START_CUTOFF
    while True:
        value = 0.0
        error = 0.0
        for z, coeff in c.items():
            mid, half = _bracket(z, N)
            value += float(coeff) * mid
            error += abs(float(coeff)) * half
        # float conversion of the coefficients and the final sum
        error += 4 * np.finfo(float).eps * (abs(value) + error) * max(len(c), 1)
        if error <= eps:
            return Approximation(float(value), float(error), N)
        if N >= MAX_CUTOFF:
            raise PrecisionError(eps, float(error))
        N *= 2


def approximate_mzv(z: MZVIndex, eps: float) -> Approximation:
    return approximate_combination({z: Fraction(1)}, eps)


def approximate_mt(t: MTIndex, eps: float) -> Approximation:
    return approximate_combination(reduce(t), eps)


def eval_mzv_float(z: MZVIndex, eps: float) -> float:
    """zeta(z) to within ``eps`` (admissible ``z``, ``eps >= 1e-10``).

    >>> round(eval_mzv_float(MZVIndex((2,)), 1e-8), 6)
    1.644934
    """
    return approximate_mzv(z, eps).value


def eval_mt_float(t: MTIndex, eps: float) -> float:
    """Mordell-Tornheim value via its MZV reduction, to within ``eps``."""
    return approximate_mt(t, eps).value
