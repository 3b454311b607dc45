"""Rewrite Mordell-Tornheim values into multiple zeta values.

The pipeline is::

    T(s_1..s_r; s)  --reduce_top-->   combination of T_{r-1}
                    --reduce_level--> ... --> combination of T_1
                    --base_case-->    combination of zeta(...)

Every step applies the partial fraction expansion to the free variables
m_1..m_l and relabels the survivors so that the pivot variable moves to
position l.  Coefficients are merged after each stage.
"""

from __future__ import annotations

import math
from collections import defaultdict
from typing import Iterator, List, Sequence

from .core import (
    MTIndex,
    MZVCombination,
    MZVIndex,
    TlCombination,
    TlIndex,
    partial_fraction_terms,
)


def _expand_free(args: Sequence[int], extra: int):
    """Yield (M, new_args) from expanding prod_{k<=l} m_k**-args_k.

    ``extra`` is added to the pivot exponent; it is the exponent already
    carried by n_l (``s`` at the top stage, 0 otherwise).
    """
    for j in range(1, len(args) + 1):
        others = args[: j - 1] + args[j:]
        for term in partial_fraction_terms(args, j):
            kept = tuple(sk - ak for sk, ak in zip(others, term.a))
            yield term.M, kept + (term.pivot_exponent + extra,)


def _top_expansion(args: Sequence[int], last: int) -> TlCombination:
    acc = defaultdict(int)
    for M, new_args in _expand_free(tuple(args), last):
        acc[TlIndex(new_args, len(args) - 1)] += M
    return TlCombination(acc)


def reduce_top(t: MTIndex) -> TlCombination:
    """First rewrite: T(s_1..s_r; s) as a combination of T_{r-1} sums.

    >>> reduce_top(MTIndex((1, 1), 1))
    TlCombination({T_1(1,2): 2})
    """
    if t.depth < 2:
        raise ValueError("reduce_top needs depth >= 2; depth 1 is zeta(s_1 + s)")
    return _top_expansion(t.args, t.last)


def reduce_level(t: TlIndex) -> TlCombination:
    """Lower the level of T_l by one; positions l+1..r are left untouched."""
    l = t.level
    if l < 2:
        raise ValueError("level 1 is terminal, use base_case")
    tail = t.args[l:]
    acc = defaultdict(int)
    for M, new_head in _expand_free(t.args[:l], 0):
        acc[TlIndex(new_head + tail, l - 1)] += M
    return TlCombination(acc)


def base_case(t: TlIndex) -> MZVIndex:
    """T_1(s_1..s_r) = zeta(s_r, ..., s_1)."""
    if t.level != 1:
        raise ValueError(f"base_case needs level 1, got {t.level}")
    return MZVIndex(t.args[::-1])


def lower_combination(c: TlCombination) -> TlCombination:
    """Apply :func:`reduce_level` to every key and merge."""
    acc = defaultdict(int)
    for key, coeff in c.items():
        for k2, m in reduce_level(key).items():
            acc[k2] += coeff * m
    return TlCombination(acc)


def finish(c: TlCombination) -> MZVCombination:
    """Lower a T_l combination all the way down to MZVs."""
    *_, bottom = _descend(c)
    return MZVCombination((base_case(k), v) for k, v in bottom.items())


def _descend(c: TlCombination) -> Iterator[TlCombination]:
    yield c
    while c and c.level > 1:
        c = lower_combination(c)
        yield c


def reduction_stages(t: MTIndex) -> List[TlCombination]:
    """Intermediate combinations T_{r-1}, T_{r-2}, ..., T_1 for ``t``."""
    if t.depth == 1:
        return []
    return list(_descend(reduce_top(t)))


def reduce(t: MTIndex) -> MZVCombination:
    """Express T(s_1..s_r; s) as a combination of depth-r MZVs.

    All coefficients are positive integers and every key is admissible.

    >>> reduce(MTIndex((1, 1, 1), 2))
    MZVCombination({Z(3,1,1): 6})
    """
    if t.depth == 1:
        return MZVCombination({MZVIndex((t.args[0] + t.last,)): 1})
    return finish(reduce_top(t))


def closed_form_ones(r: int, s: int) -> MZVCombination:
    """T(1,...,1; s) = r! zeta(s+1, 1, ..., 1), independent of the rewrite."""
    if r < 1 or s < 1:
        raise ValueError("need r >= 1 and s >= 1")
    return MZVCombination({MZVIndex((s + 1,) + (1,) * (r - 1)): math.factorial(r)})


def product_to_mzv(s: Sequence[int]) -> MZVCombination:
    """Write zeta(s_1) * ... * zeta(s_r) as a combination of depth-r MZVs.

    This is the top expansion with no linear-form exponent, since the
    product is the unrestricted sum over m_1..m_r.
    """
    s = tuple(s)
    if not s:
        raise ValueError("empty product")
    if any(not isinstance(v, int) or v < 2 for v in s):
        raise ValueError("divergent factor zeta(1): every argument must be >= 2")
    if len(s) == 1:
        return MZVCombination({MZVIndex(s): 1})
    return finish(_top_expansion(s, 0))


def opposite_parity(w: int, r: int) -> bool:
    """True when weight and depth have different parity."""
    return w % 2 != r % 2
