"""Two-row array counting: brute-force enumeration and the product expansion.

An array here is a pair of nonincreasing rows of nonnegative integers, top
length m1 and bottom length m2; its weight is m1 plus the sum of all entries,
and its row difference is m1 - m2.  Two counting variants:

  * repetition: no value occurs more than k times within one row;
  * colored: entries are (value, color) pairs with colors 1..k, no pair
    occurring twice within a row; rows are canonically ordered by value
    descending, then color descending.

`enumerate_arrays` is the ground truth (exhaustive search, small weights
only).  `bivar_coefficient_series` computes the same counts a second,
independent way: expand the two-variable product

    repetition:  prod_{lam>=0} (sum_{j=0..k} z^j q^(j(lam+1)))
                               (sum_{j=0..k} z^-j q^(j lam))
    colored:     prod_{lam>=0} (1 + z q^(lam+1))^k (1 + z^-1 q^lam)^k

and read off the coefficient of z^alpha.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import comb

from .exactring import ZZ
from .qseries import BivarSeries, TruncSeries

VARIANTS = ("repetition", "colored")

# Exhaustive enumeration is the oracle, not a production path; keep it honest.
MAX_ENUM_WEIGHT = 30


@dataclass(frozen=True)
class FrobeniusArray:
    """One two-row array; entries are ints (repetition) or (value, color) pairs."""

    top: tuple
    bottom: tuple

    @property
    def weight(self) -> int:
        return len(self.top) + sum(self._values(self.top)) + sum(self._values(self.bottom))

    @property
    def row_difference(self) -> int:
        return len(self.top) - len(self.bottom)

    @staticmethod
    def _values(row):
        return [e[0] if isinstance(e, tuple) else e for e in row]

    def to_json_dict(self) -> dict:
        def encode(row):
            return [list(e) if isinstance(e, tuple) else [e] for e in row]

        return {"top": encode(self.top), "bottom": encode(self.bottom)}


def _min_row_sum(length: int, k: int) -> int:
    # smallest entry sum a length-`length` row can have when each value
    # appears at most k times: k zeros, k ones, ...
    full, rem = divmod(length, k)
    return k * full * (full - 1) // 2 + rem * full


@functools.lru_cache(maxsize=None)
def _bounded_rows(total: int, length: int, max_part: int, k: int) -> tuple:
    """Nonincreasing rows: `length` values in 0..max_part summing to `total`,
    no value repeated more than k times."""
    if length == 0:
        return ((),) if total == 0 else ()
    if total == 0:
        return ((0,) * length,) if length <= k else ()
    rows = []
    for v in range(min(max_part, total), 0, -1):
        for j in range(1, min(k, length) + 1):
            rest = total - j * v
            if rest < 0:
                break
            for tail in _bounded_rows(rest, length - j, v - 1, k):
                rows.append((v,) * j + tail)
    return tuple(rows)


@functools.lru_cache(maxsize=None)
def _colored_rows(total: int, length: int, max_part: int, k: int) -> tuple:
    """Canonical colored rows: distinct (value, color) pairs, colors 1..k,
    sorted by value descending then color descending."""
    rows = []
    for base in _bounded_rows(total, length, max_part, k):
        groups = [(v, len(list(g))) for v, g in itertools.groupby(base)]
        choices = [
            [combo for combo in itertools.combinations(range(k, 0, -1), mult)]
            for _, mult in groups
        ]
        for pick in itertools.product(*choices):
            row = []
            for (v, _), colors in zip(groups, pick):
                row.extend((v, c) for c in colors)
            rows.append(tuple(row))
    return tuple(rows)


def enumerate_arrays(variant: str, k: int, alpha: int, n: int) -> list[FrobeniusArray]:
    """Every array of the given variant, weight n, row difference alpha.

    Exhaustive and deterministic (sorted canonical forms).  Guarded: refuses
    weights above MAX_ENUM_WEIGHT.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if n < 0:
        raise ValueError("weight must be >= 0")
    if n > MAX_ENUM_WEIGHT:
        raise ValueError(f"enumeration guard: weight {n} exceeds MAX_ENUM_WEIGHT={MAX_ENUM_WEIGHT}")
    rows_fn = _bounded_rows if variant == "repetition" else _colored_rows
    arrays = []
    for m1 in range(n + 1):
        m2 = m1 - alpha
        if m2 < 0:
            continue
        budget = n - m1  # entry sums of both rows together
        if _min_row_sum(m1, k) + _min_row_sum(m2, k) > budget:
            continue
        for n1 in range(budget + 1):
            n2 = budget - n1
            tops = rows_fn(n1, m1, n1, k)
            if not tops:
                continue
            for bottom in rows_fn(n2, m2, n2, k):
                for top in tops:
                    arrays.append(FrobeniusArray(top, bottom))
    arrays.sort(key=lambda a: (a.top, a.bottom))
    return arrays


def count_phi(k: int, alpha: int, n: int) -> int:
    """Number of weight-n, row-difference-alpha arrays, repetition variant."""
    return len(enumerate_arrays("repetition", k, alpha, n))


def count_cphi(k: int, alpha: int, n: int) -> int:
    """Number of weight-n, row-difference-alpha arrays, colored variant."""
    return len(enumerate_arrays("colored", k, alpha, n))


def bivar_coefficient_series(variant: str, k: int, alpha: int, order: int,
                             *, window_pad: int = 0) -> TruncSeries:
    """Coefficient of z^alpha in the variant's two-variable product, as a q-series.

    The z window is [alpha - k*order - k, alpha + k*order + k]: a z-raising
    term always costs at least q^1 and only the lam=0 bottom factor lowers z
    for free (at most k times), so any term outside the window can never flow
    back into z^alpha within q-degree `order`.  `window_pad` widens the window
    symmetrically; results must not depend on it.
    """
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if k < 1:
        raise ValueError("k must be >= 1")
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    if window_pad < 0:
        raise ValueError("window_pad must be >= 0")
    zmin = alpha - k * order - k - window_pad
    zmax = alpha + k * order + k + window_pad
    weight = (lambda j: 1) if variant == "repetition" else (lambda j: comb(k, j))
    acc = BivarSeries.one(ZZ, order, zmin, zmax)
    for lam in range(order + 1):
        top = [(j, j * (lam + 1), weight(j)) for j in range(k + 1) if j * (lam + 1) <= order]
        if len(top) > 1:
            acc = acc * BivarSeries.from_terms(ZZ, order, zmin, zmax, top)
        bottom = [(-j, j * lam, weight(j)) for j in range(k + 1) if j * lam <= order]
        if len(bottom) > 1:
            acc = acc * BivarSeries.from_terms(ZZ, order, zmin, zmax, bottom)
    return acc.z_slice(alpha)
