"""Index types, exact coefficients and the partial fraction expansion.

All coefficients are :class:`fractions.Fraction` values; nothing in this
module ever rounds.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

Rational = Fraction


def parse_rational(text: str) -> Fraction:
    """Parse ``p/q`` or an integer, e.g. ``"-3/4"`` or ``"7"``.

    Decimal and exponent notation are rejected so that every accepted
    string denotes its value exactly.
    """
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(p, q)


def render_rational(q: Fraction) -> str:
    return str(Fraction(q))


def _check_positive(values: Sequence[int], what: str) -> Tuple[int, ...]:
    values = tuple(values)
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ValueError(f"{what} must be positive integers, got {values!r}")
    return values


@dataclass(frozen=True, order=True)
class MZVIndex:
    """Arguments of zeta(s_1, ..., s_r) summed over n_1 > ... > n_r > 0.

    The first argument is the exponent of the largest summation variable.
    """

    args: Tuple[int, ...]

    def __post_init__(self):
        args = _check_positive(self.args, "MZV arguments")
        if not args:
            raise ValueError("an MZV needs at least one argument")
        object.__setattr__(self, "args", args)

    @property
    def depth(self) -> int:
        return len(self.args)

    @property
    def weight(self) -> int:
        return sum(self.args)

    @property
    def admissible(self) -> bool:
        return self.args[0] >= 2

    def __str__(self):
        return "Z(%s)" % ",".join(map(str, self.args))


@dataclass(frozen=True)
class MTIndex:
    """Arguments (s_1, ..., s_r; s) of a Mordell-Tornheim zeta value."""

    args: Tuple[int, ...]
    last: int

    def __post_init__(self):
        args = _check_positive(self.args, "Mordell-Tornheim arguments")
        if not args:
            raise ValueError("a Mordell-Tornheim sum needs depth >= 1")
        _check_positive((self.last,), "the linear-form exponent")
        object.__setattr__(self, "args", args)

    @property
    def depth(self) -> int:
        return len(self.args)

    @property
    def weight(self) -> int:
        return sum(self.args) + self.last

    def __str__(self):
        return "T(%s;%d)" % (",".join(map(str, self.args)), self.last)


@dataclass(frozen=True, order=True)
class TlIndex:
    """The hybrid sum T_l(s_1, ..., s_r).

    Sums over m_1, ..., m_r >= 1 of
    ``prod_{k<=l} m_k**-s_k * prod_{k>l} n_k**-s_k`` with
    ``n_k = m_1 + ... + m_k``.  A single argument with level 1 is accepted
    as the degenerate case zeta(s_1).
    """

    args: Tuple[int, ...]
    level: int

    def __post_init__(self):
        args = _check_positive(self.args, "T_l arguments")
        if not args:
            raise ValueError("T_l needs at least one argument")
        top = max(1, len(args) - 1)
        if not 1 <= self.level <= top:
            raise ValueError(f"level {self.level} outside 1..{top} for {args!r}")
        object.__setattr__(self, "args", args)

    @property
    def depth(self) -> int:
        return len(self.args)

    @property
    def weight(self) -> int:
        return sum(self.args)

    def __str__(self):
        return "T_%d(%s)" % (self.level, ",".join(map(str, self.args)))


class Combination(Mapping):
    """Finite linear combination ``{key: nonzero Fraction}``.

    Zero coefficients are never stored.  Supports ``+``, ``-`` and scaling
    by rationals; equality is equality of the underlying maps.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping | Iterable] = None):
        acc: Dict = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for key, coeff in items:
                acc[key] = acc.get(key, 0) + Fraction(coeff)
        self._terms = {k: v for k, v in acc.items() if v != 0}

    def __getitem__(self, key):
        return self._terms[key]

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, Mapping):
            return self._terms == {k: v for k, v in other.items() if v != 0}
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def _combine(self, other, sign):
        if not isinstance(other, Combination):
            return NotImplemented
        merged = dict(self._terms)
        for k, v in other.items():
            merged[k] = merged.get(k, 0) + sign * v
        return type(self)(merged)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return type(self)({k: -v for k, v in self._terms.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return type(self)({k: v * scalar for k, v in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: kv[0].args)

    def _shared(self, attr):
        values = {getattr(k, attr) for k in self._terms}
        return values.pop() if len(values) == 1 else None

    @property
    def weight(self) -> Optional[int]:
        """Common weight of all keys, or None if empty or mixed."""
        return self._shared("weight")

    @property
    def depth(self) -> Optional[int]:
        return self._shared("depth")

    @property
    def homogeneous(self) -> bool:
        return self.weight is not None and self.depth is not None

    def __repr__(self):
        inner = ", ".join(f"{k}: {v}" for k, v in self.sorted_items())
        return f"{type(self).__name__}({{{inner}}})"


class MZVCombination(Combination):
    """Linear combination of multiple zeta values."""


class TlCombination(Combination):
    """Linear combination of T_l sums sharing one level."""

    @property
    def level(self) -> Optional[int]:
        return self._shared("level")


@dataclass(frozen=True)
class PartialFractionTerm:
    """One summand of the partial fraction expansion around pivot ``j``.

    ``a`` lists a_k for k != j in ascending k; ``A`` is their sum and the
    summand is ``M * x**-pivot_exponent * prod_{k != j} x_k**(a_k - s_k)``.
    """

    j: int
    a: Tuple[int, ...]
    A: int
    M: int
    pivot_exponent: int


def multinomial_M(s_pivot: int, a: Sequence[int]) -> int:
    """(s_pivot + A - 1)! / ((s_pivot - 1)! * prod a_k!) with A = sum(a).

    >>> multinomial_M(2, (2,))
    3
    >>> multinomial_M(3, (1, 1))
    12
    """
    if s_pivot < 1 or any(ak < 0 for ak in a):
        raise ValueError("need s_pivot >= 1 and a_k >= 0")
    num = math.factorial(s_pivot + sum(a) - 1)
    den = math.factorial(s_pivot - 1)
    for ak in a:
        den *= math.factorial(ak)
    M, rem = divmod(num, den)
    assert rem == 0, (s_pivot, a)
    return M


def partial_fraction_terms(s: Sequence[int], j: int) -> list[PartialFractionTerm]:
    """All summands for pivot ``j`` (1-based), a-tuples in lexicographic order."""
    s = _check_positive(s, "exponents")
    if not 1 <= j <= len(s):
        raise ValueError(f"pivot {j} outside 1..{len(s)}")
    others = s[: j - 1] + s[j:]
    s_j = s[j - 1]
    out = []
    for a in itertools.product(*(range(sk) for sk in others)):
        A = sum(a)
        out.append(PartialFractionTerm(j, a, A, multinomial_M(s_j, a), s_j + A))
    return out


def lemma_identity_holds(x: Sequence, s: Sequence[int]) -> bool:
    """Check the partial fraction identity for prod x_j**-s_j exactly.

    Both sides are evaluated in rational arithmetic; the result is True on
    every valid input.
    """
    x = [Fraction(v) for v in x]
    s = _check_positive(s, "exponents")
    if len(x) != len(s) or not x:
        raise ValueError("x and s must be nonempty and of equal length")
    if any(v == 0 for v in x):
        raise ValueError("every x_k must be nonzero")
    total = sum(x)
    if total == 0:
        raise ValueError("x_1 + ... + x_r must be nonzero")

    lhs = Fraction(1)
    for xk, sk in zip(x, s):
        lhs /= xk**sk
    rhs = Fraction(0)
    for j in range(1, len(s) + 1):
        rest = list(zip(x[: j - 1] + x[j:], s[: j - 1] + s[j:]))
        for term in partial_fraction_terms(s, j):
            value = term.M / total**term.pivot_exponent
            for (xk, sk), ak in zip(rest, term.a):
                value *= xk ** (ak - sk)
            rhs += value
    return lhs == rhs
