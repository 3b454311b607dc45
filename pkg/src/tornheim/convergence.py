"""Sufficient criteria for absolute convergence.

Real parts are exact rationals so the strict inequalities are decided
without rounding.  A failed check only means the criterion does not
certify convergence; it is not a divergence proof.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Optional, Sequence, Tuple


@dataclass(frozen=True)
class ConvergenceQuery:
    """Real parts of the arguments.

    ``sigma_last`` is the real part of the linear-form exponent and is
    present only for Mordell-Tornheim queries.  For MZV queries the order
    of ``sigmas`` matters.
    """

    sigmas: Tuple[Fraction, ...]
    sigma_last: Optional[Fraction] = None

    def __post_init__(self):
        sigmas = tuple(Fraction(v) for v in self.sigmas)
        if not sigmas:
            raise ValueError("need at least one real part")
        object.__setattr__(self, "sigmas", sigmas)
        if self.sigma_last is not None:
            object.__setattr__(self, "sigma_last", Fraction(self.sigma_last))

    @property
    def is_mt(self) -> bool:
        return self.sigma_last is not None


def _first_failure(sigmas: Sequence[Fraction], offset: Fraction) -> Optional[int]:
    for k, partial in enumerate(accumulate(sigmas), start=1):
        if offset + partial <= k:
            return k
    return None


def first_failing_k(q: ConvergenceQuery) -> Optional[int]:
    """Smallest k whose partial-sum inequality fails, or None.

    For MT queries k refers to the ascending order of ``sigmas``.
    """
    if q.is_mt:
        return _first_failure(sorted(q.sigmas), q.sigma_last)
    return _first_failure(q.sigmas, Fraction(0))


def mzv_convergence_check(q: ConvergenceQuery | Sequence) -> bool:
    """sigma_1 + ... + sigma_k > k for every k.

    >>> mzv_convergence_check([2, 0, 2])
    False
    """
    if not isinstance(q, ConvergenceQuery):
        q = ConvergenceQuery(tuple(q))
    if q.is_mt:
        raise ValueError("MZV query must not carry sigma_last")
    return first_failing_k(q) is None


def mt_convergence_check(q: ConvergenceQuery) -> bool:
    """sigma + sigma_1 + ... + sigma_k > k for every k, sigmas ascending."""
    if not q.is_mt:
        raise ValueError("MT query needs sigma_last")
    return first_failing_k(q) is None
