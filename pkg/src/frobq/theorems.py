"""Closed forms for the array counting functions, and their proof identities.

The two counting families have theta-quotient generating functions.  With
S = m_1 + ... + m_(k-1) ranging over integer lattice vectors and the
quadratic exponent

    Q(m) = sum C(m_i + 1, 2) + C(alpha - S + 1, 2)
         = [ sum m_i^2 + (S - alpha)^2 + alpha ] / 2,

the colored counts have generating function  (sum_m q^Q) / (q;q)^k  and the
repetition counts have the same shape with each lattice term weighted by
(-1)^alpha zeta^(m_1(1-k) + m_2(2-k) + ... + m_(k-1)(-1) + k*alpha) for zeta
a primitive (k+1)-th root of unity; all the root-of-unity contributions must
cancel, which `phi_theta_series` checks coefficient by coefficient.

Note the cross terms m_i*m_j land OUTSIDE the /2 when Q is expanded:
Q = sum m_i^2 + sum_{i<j} m_i m_j - alpha*S + (alpha^2 + alpha)/2.  The
binomial form above is the definition of record here; it is what the k=2
product formulas and the enumeration oracle pin down.

For k=2, alpha=-1 both families collapse to infinite products (phi2m1 and
cphi2m1 below), and the module also exposes the intermediate product
identities used on the way to the mod-5 divisibility pattern of their
5n+4 coefficients.
"""

from __future__ import annotations

import itertools
from math import isqrt

from .exactring import ZZ, CycRing, zeta_pow
from .qseries import (
    TruncSeries,
    euler_product,
    parse_product_spec,
    product_from_spec,
)


class NonIntegralCoefficientError(ArithmeticError):
    """A coefficient that must be a plain integer came out genuinely cyclotomic.

    This is the built-in detector for a wrong root-of-unity exponent: it
    signals that the closed form being evaluated is not the one the counts
    satisfy.
    """

    def __init__(self, index: int, value):
        super().__init__(f"coefficient of q^{index} is not a rational integer: {value!r}")
        self.index = index
        self.value = value


def _choose2(t: int) -> int:
    # C(t, 2) = t(t-1)/2 for ANY integer t, negatives included
    return t * (t - 1) // 2


def quad_exponent(k: int, alpha: int, m) -> int:
    """The lattice exponent Q(m_1..m_(k-1)) in its binomial form of record."""
    m = tuple(m)
    if len(m) != k - 1:
        raise ValueError(f"need exactly {k - 1} lattice coordinates, got {len(m)}")
    s = sum(m)
    return sum(_choose2(mi + 1) for mi in m) + _choose2(alpha - s + 1)


def quad_exponent_closed(k: int, alpha: int, m) -> int:
    """Equivalent closed form [sum m_i^2 + (S - alpha)^2 + alpha] / 2."""
    m = tuple(m)
    if len(m) != k - 1:
        raise ValueError(f"need exactly {k - 1} lattice coordinates, got {len(m)}")
    s = sum(m)
    return (sum(mi * mi for mi in m) + (s - alpha) ** 2 + alpha) // 2


def _lattice_points(k: int, alpha: int, order: int):
    # Complete: Q <= order forces sum m_i^2 + alpha <= 2*order, so every
    # coordinate satisfies m_i^2 <= 2*order + |alpha|.
    bound = isqrt(2 * order + abs(alpha))
    coords = range(-bound, bound + 1)
    for m in itertools.product(coords, repeat=k - 1):
        q = quad_exponent(k, alpha, m)
        if q <= order:
            yield m, q


def cphi_theta_series(k: int, alpha: int, order: int) -> TruncSeries:
    """Colored-count generating function: (sum over the lattice of q^Q) / (q;q)^k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    num = [0] * (order + 1)
    for _, q in _lattice_points(k, alpha, order):
        num[q] += 1
    numerator = TruncSeries(ZZ, num, order)
    return numerator * (euler_product(order) ** k).inverse()


def phi_theta_series(k: int, alpha: int, order: int, *,
                     zeta_exponent_shift: int = 0) -> TruncSeries:
    """Repetition-count generating function via the root-of-unity lattice sum.

    Accumulates exactly in Z[zeta_(k+1)] and converts at the end; any
    surviving non-rational coefficient raises NonIntegralCoefficientError.
    `zeta_exponent_shift` perturbs every root-of-unity exponent and exists so
    tests can prove the detector actually fires; leave it at 0.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    ring = CycRing(k + 1)
    sign = -1 if alpha % 2 else 1
    num = [ring.zero] * (order + 1)
    for m, q in _lattice_points(k, alpha, order):
        e = k * alpha + zeta_exponent_shift
        for i, mi in enumerate(m):
            e += (i + 1 - k) * mi
        num[q] = num[q] + zeta_pow(k + 1, e) * sign
    numerator = TruncSeries(ring, num, order)
    inv = (euler_product(order) ** k).inverse()
    lifted = TruncSeries.from_ints(ring, inv.coeffs, order)
    cyclotomic = numerator * lifted
    values = []
    for idx, c in enumerate(cyclotomic.coeffs):
        v = c.as_int()
        if v is None:
            raise NonIntegralCoefficientError(idx, c)
        values.append(v)
    return TruncSeries(ZZ, values, order)


# ---------------------------------------------------------------------------
# k=2, alpha=-1 product formulas
# ---------------------------------------------------------------------------

PHI2M1_SPEC_TEXT = "-,2,1,-2; -,12,8,-1; -,12,6,-1; -,12,4,-1; -,12,0,-1"
CPHI2M1_SPEC_TEXT = "-,2,0,1; +,2,0,1; +,2,2,1; -,1,0,-2"


def phi2m1_product(order: int) -> TruncSeries:
    """Repetition counts at k=2, alpha=-1 as the product
    1 / prod (1-q^(2n-1))^2 (1-q^(12n-8)) (1-q^(12n-6)) (1-q^(12n-4)) (1-q^(12n))."""
    return product_from_spec(parse_product_spec(PHI2M1_SPEC_TEXT), order)


def cphi2m1_product(order: int) -> TruncSeries:
    """Colored counts at k=2, alpha=-1 as the product
    prod (1-q^(2n)) (1+q^(2n)) (1+q^(2n-2)) / (1-q^n)^2."""
    return product_from_spec(parse_product_spec(CPHI2M1_SPEC_TEXT), order)


def psi2_product(order: int, *, mutated: bool = False) -> TruncSeries:
    """prod_{i>=1} (1 - q^(2i)) (1 - q^(2i) + q^(4i)) / (q;q)^2.

    With mutated=True the trinomial's q^(4i) term is flipped to -q^(4i),
    which breaks the identity with the phi2m1 product; tests use it to show
    the comparison has teeth.
    """
    quartic_sign = -1 if mutated else 1
    acc = TruncSeries.one(ZZ, order)
    for i in range(1, order // 2 + 1):
        trinomial = (TruncSeries.one(ZZ, order)
                     - TruncSeries.monomial(ZZ, order, 2 * i)
                     + TruncSeries.monomial(ZZ, order, 4 * i) * quartic_sign)
        binomial = TruncSeries.one(ZZ, order) - TruncSeries.monomial(ZZ, order, 2 * i)
        acc = acc * binomial * trinomial
    return acc * (euler_product(order) ** 2).inverse()


def psi2_identity_check(order: int, *, mutated: bool = False) -> bool:
    """Does the psi2 product expansion equal the phi2m1 product expansion?"""
    return psi2_product(order, mutated=mutated) == phi2m1_product(order)


# ---------------------------------------------------------------------------
# Mod-5 numerator identity: three routes to the same series
# ---------------------------------------------------------------------------

MOD5_NUMERATOR_SPEC_TEXT = "-,2,0,1; -,12,2,1; -,12,10,1"


def mod5_numerator_product(order: int) -> TruncSeries:
    """prod_{n>=1} (1 - q^(2n)) (1 - q^(12n-2)) (1 - q^(12n-10))."""
    return product_from_spec(parse_product_spec(MOD5_NUMERATOR_SPEC_TEXT), order)


def mod5_numerator_theta(order: int) -> TruncSeries:
    """sum_m q^(9m^2 - 3m) - q^(9m^2 + 9m + 2) over all integers m."""
    coeffs = [0] * (order + 1)
    bound = isqrt(order) + 2
    for m in range(-bound, bound + 1):
        e = 9 * m * m - 3 * m
        if 0 <= e <= order:
            coeffs[e] += 1
        e = 9 * m * m + 9 * m + 2
        if 0 <= e <= order:
            coeffs[e] -= 1
    return TruncSeries(ZZ, coeffs, order)


def mod5_numerator_signed(order: int) -> TruncSeries:
    """sum_{j>=0} a_j q^(j^2 + j) with a_j = 1 for j = 0,2 mod 3 and -2 for j = 1 mod 3."""
    coeffs = [0] * (order + 1)
    j = 0
    while j * j + j <= order:
        coeffs[j * j + j] += 1 if j % 3 in (0, 2) else -2
        j += 1
    return TruncSeries(ZZ, coeffs, order)


def mod5_numerator_identity(order: int) -> bool:
    """True iff all three numerator forms agree up to the truncation order."""
    product = mod5_numerator_product(order)
    return product == mod5_numerator_theta(order) and product == mod5_numerator_signed(order)
