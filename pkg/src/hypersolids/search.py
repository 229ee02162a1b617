"""Inverse lookups: which coordinates produce a given value.

``rank_of`` inverts one sequence (fixed dimension and difference) by binary
search, relying on strict monotonicity in the rank.  ``representations``
finds every coordinate triple in a box whose value equals a target; for a
fixed dimension and rank the value is affine in the difference, so each
(v, n) cell is decided by a single exact division rather than a scan.
"""

from __future__ import annotations

from typing import NamedTuple

from .kernel import IndexTriple, RangeError, _check, _closed, binomial


class RepresentationHit(NamedTuple):
    triple: IndexTriple
    value: int


def rank_of(value: int, v: int, d: int) -> int | None:
    """Rank n >= 1 with hypersolid(v, d, n) == value, or None if value is skipped.

    Defined only where the sequence is strictly increasing in the rank:
    v >= 2, or v == 1 with d >= 1.  ``value`` must be >= 1.
    """
    _check("v", v)
    _check("d", d)
    if not (v >= 2 or (v == 1 and d >= 1)):
        raise RangeError(
            "rank lookup needs a strictly increasing sequence: v >= 2, or v == 1 with d >= 1"
        )
    if value < 1:
        raise RangeError(f"value must be >= 1, got {value}")
    lo, hi = 1, 2
    while _closed(v, d, hi) < value:
        hi *= 2
    while lo < hi:
        mid = (lo + hi) // 2
        if _closed(v, d, mid) < value:
            lo = mid + 1
        else:
            hi = mid
    return lo if _closed(v, d, lo) == value else None


def representations(
    target: int,
    v_range: tuple[int, int] = (2, 8),
    d_range: tuple[int, int] | None = None,
    n_min: int = 3,
    n_max: int | None = None,
) -> list[RepresentationHit]:
    """Every triple in the box whose value equals ``target``, in (v, d, n) order.

    The box is v in ``v_range``, d in ``d_range`` (default [0, target]),
    n from ``n_min`` (default 3, past the trivial rank-1/rank-2 hits) up to
    ``n_max`` or, by default, the last rank where the d = 0 value still fits
    under the target.  Complete relative to the box: a triple is returned
    iff it lies inside and its value is exactly ``target``.

    For v <= 1 the d = 0 value stops growing with the rank, so those
    dimensions admit arbitrarily large ranks and require an explicit
    ``n_max``.
    """
    if target < 1:
        raise RangeError(f"target must be >= 1, got {target}")
    v_lo, v_hi = v_range
    _check("v_range low", v_lo)
    _check("v_range high", v_hi)
    if v_lo > v_hi:
        raise RangeError(f"empty dimension range: {v_range}")
    d_lo, d_hi = d_range if d_range is not None else (0, target)
    if d_lo < 0 or d_lo > d_hi:
        raise RangeError(f"bad difference range: ({d_lo}, {d_hi})")
    _check("n_min", n_min)
    if n_max is not None:
        _check("n_max", n_max)
    if v_lo < 2 and n_max is None:
        raise RangeError("v < 2 admits arbitrarily large ranks; pass an explicit n_max")

    hits: list[RepresentationHit] = []
    for v in range(v_lo, v_hi + 1):
        n = n_min
        while n_max is None or n <= n_max:
            base = binomial(v + n - 2, v - 1)  # value at d = 0
            if base > target:
                break  # grows with n from here on, no more hits in this dimension
            slope = binomial(v + n - 2, v)  # increment per unit of d
            if slope == 0:
                # rank 0 or 1: value is constant in d
                if base == target:
                    hits.extend(
                        RepresentationHit(IndexTriple(v, d, n), target)
                        for d in range(d_lo, d_hi + 1)
                    )
            else:
                d, leftover = divmod(target - base, slope)
                if leftover == 0 and d_lo <= d <= d_hi:
                    hits.append(RepresentationHit(IndexTriple(v, d, n), target))
            n += 1
    hits.sort(key=lambda hit: hit.triple)
    return hits


def sequence_slice(v: int, d: int, n_from: int, n_to: int) -> list[int]:
    """Values at ranks n_from..n_to (inclusive) of one sequence."""
    _check("v", v)
    _check("d", d)
    _check("n_from", n_from)
    _check("n_to", n_to)
    if n_from > n_to:
        raise RangeError(f"empty rank range: [{n_from}, {n_to}]")
    return [_closed(v, d, n) for n in range(n_from, n_to + 1)]
