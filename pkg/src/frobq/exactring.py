"""Exact coefficient arithmetic for the series engine.

Three rings cover everything downstream: plain arbitrary-precision integers
(Python ints are already exact), integers modulo m, and cyclotomic integers,
i.e. Z extended by a primitive n-th root of unity.  A cyclotomic integer is
stored in the power basis 1, z, ..., z^(d-1) of Z[x]/Phi_n(x), where Phi_n is
the n-th cyclotomic polynomial and d = phi(n) its degree; the representation
is unique, so "is this a plain integer" is a zero test on the non-constant
coordinates.

The ring descriptors at the bottom (ZZ, ModRing, CycRing) give the series
layer one uniform surface: zero, one, from_int, add, sub, neg, mul, invert.
"""

from __future__ import annotations

import functools
import operator


class NotUnitError(ValueError):
    """Inversion was requested for an element with no inverse in its ring."""


# ---------------------------------------------------------------------------
# Dense integer polynomials (constant term first), just enough for Phi_n.
# ---------------------------------------------------------------------------


def _poly_div_exact(num: tuple[int, ...], den: tuple[int, ...]) -> tuple[int, ...]:
    # Long division that must leave remainder zero (den divides num over Z).
    work = list(num)
    dlen = len(den)
    dlead = den[-1]
    quot = [0] * (len(num) - dlen + 1)
    for i in reversed(range(len(quot))):
        c = work[i + dlen - 1]
        if c % dlead:
            raise ArithmeticError("inexact polynomial division")
        c //= dlead
        quot[i] = c
        if c:
            for j, dj in enumerate(den):
                work[i + j] -= c * dj
    if any(work):
        raise ArithmeticError("inexact polynomial division")
    return tuple(quot)


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(order: int) -> tuple[int, ...]:
    """Dense coefficients, constant term first, of the cyclotomic polynomial.

    Computed by dividing x^order - 1 by the cyclotomic polynomials of all
    proper divisors; orders in use are tiny, so simplicity wins.

    >>> cyclotomic_poly(1), cyclotomic_poly(2)
    ((-1, 1), (1, 1))
    >>> cyclotomic_poly(3), cyclotomic_poly(4), cyclotomic_poly(6)
    ((1, 1, 1), (1, 0, 1), (1, -1, 1))
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    poly = (-1,) + (0,) * (order - 1) + (1,)
    for d in range(1, order):
        if order % d == 0:
            poly = _poly_div_exact(poly, cyclotomic_poly(d))
    return poly


@functools.lru_cache(maxsize=None)
def _power_basis_rows(order: int) -> tuple[tuple[int, ...], ...]:
    # rows[e] expresses x^e in the power basis mod Phi_order, for every e a
    # product reduction (degree <= 2d-2) or an exponent lookup (e < order)
    # can hit.
    phi = cyclotomic_poly(order)
    deg = len(phi) - 1
    rows = [tuple(1 if i == e else 0 for i in range(deg)) for e in range(deg)]
    top = max(2 * deg - 2, order - 1)
    red = tuple(-c for c in phi[:deg])  # x^deg in the basis (Phi is monic)
    for e in range(deg, top + 1):
        prev = rows[e - 1]
        carry = prev[deg - 1]
        rows.append(tuple((prev[i - 1] if i else 0) + carry * red[i] for i in range(deg)))
    return tuple(rows)


# ---------------------------------------------------------------------------
# Cyclotomic integers
# ---------------------------------------------------------------------------


class CycInt:
    """An element of Z[zeta] for zeta a primitive `order`-th root of unity.

    Immutable.  `coeffs` always has length exactly deg(Phi_order); inputs may
    be shorter and are zero-padded.  All arithmetic reduces modulo the
    cyclotomic polynomial, so e.g. in order 3 the square of the generator
    comes out as (-1, -1), i.e. -1 - zeta.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 1:
            raise ValueError("order must be >= 1")
        deg = len(cyclotomic_poly(order)) - 1
        coeffs = tuple(coeffs)
        if len(coeffs) > deg:
            raise ValueError(f"at most {deg} coordinates for order {order}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs + (0,) * (deg - len(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("CycInt is immutable")

    @classmethod
    def _from_poly(cls, order: int, poly) -> "CycInt":
        # poly: dense coefficient list of any degree the reduction rows cover
        rows = _power_basis_rows(order)
        deg = len(rows[0])
        out = [0] * deg
        for e, c in enumerate(poly):
            if not c:
                continue
            if e < deg:
                out[e] += c
            else:
                row = rows[e]
                for i in range(deg):
                    out[i] += c * row[i]
        return cls(order, out)

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.order != self.order:
                raise ValueError(f"mixed root orders {self.order} and {other.order}")
            return other
        if isinstance(other, int):
            return CycInt(self.order, (other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycInt(self.order, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycInt(self.order, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return CycInt(self.order, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.order, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        prod = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycInt._from_poly(self.order, prod)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers not supported; use ring.invert")
        result = CycInt(self.order, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except ValueError:
            return False
        if other is None:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"CycInt({self.order}, {list(self.coeffs)})"

    def as_int(self) -> int | None:
        """The plain-integer value, or None when a non-constant coordinate is set."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def galois_map(self, t: int) -> "CycInt":
        """Apply the automorphism zeta -> zeta^t (t coprime to the order)."""
        out = CycInt(self.order, ())
        for e, c in enumerate(self.coeffs):
            if c:
                out = out + zeta_pow(self.order, e * t) * c
        return out


def zeta_pow(order: int, e: int) -> CycInt:
    """zeta^e reduced into the power basis; e may be negative.

    >>> zeta_pow(3, -1)
    CycInt(3, [-1, -1])
    >>> zeta_pow(4, 2).as_int()
    -1
    """
    if order < 1:
        raise ValueError("order must be >= 1")
    return CycInt(order, _power_basis_rows(order)[e % order])


def zeta(order: int) -> CycInt:
    """The generator zeta itself."""
    return zeta_pow(order, 1)


# ---------------------------------------------------------------------------
# Ring descriptors
# ---------------------------------------------------------------------------


class IntegerRing:
    """Plain Python ints: exact, arbitrary precision, nothing to configure."""

    zero = 0
    one = 1
    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    neg = staticmethod(operator.neg)
    mul = staticmethod(operator.mul)
    from_int = staticmethod(int)

    def invert(self, a: int) -> int:
        if a == 1 or a == -1:
            return a
        raise NotUnitError(f"{a} is not a unit in ZZ")

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash(IntegerRing)

    def __repr__(self):
        return "ZZ"


ZZ = IntegerRing()


class ModRing:
    """Integers modulo m >= 2; residues are bare ints kept in [0, m)."""

    def __init__(self, modulus: int):
        if modulus < 2:
            raise ValueError("modulus must be >= 2")
        self.modulus = modulus
        self.zero = 0
        self.one = 1 % modulus

    def from_int(self, n: int) -> int:
        return n % self.modulus

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.modulus

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.modulus

    def neg(self, a: int) -> int:
        return -a % self.modulus

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.modulus

    def invert(self, a: int) -> int:
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            raise NotUnitError(f"{a} is not a unit mod {self.modulus}") from None

    def __eq__(self, other):
        return isinstance(other, ModRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash((ModRing, self.modulus))

    def __repr__(self):
        return f"ModRing({self.modulus})"


class CycRing:
    """Z[zeta] for a primitive `order`-th root of unity; elements are CycInt."""

    add = staticmethod(operator.add)
    sub = staticmethod(operator.sub)
    neg = staticmethod(operator.neg)
    mul = staticmethod(operator.mul)

    def __init__(self, order: int):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self.zero = CycInt(order, ())
        self.one = CycInt(order, (1,))

    def from_int(self, n: int) -> CycInt:
        return CycInt(self.order, (n,))

    def invert(self, a: CycInt) -> CycInt:
        # Units we ever need are the monomial ones: +/- zeta^e.
        v = a.as_int()
        if v == 1 or v == -1:
            return a
        for e in range(self.order):
            p = zeta_pow(self.order, e)
            if a == p:
                return zeta_pow(self.order, -e)
            if a == -p:
                return -zeta_pow(self.order, -e)
        raise NotUnitError(f"{a!r} is not an invertible monomial unit")

    def __eq__(self, other):
        return isinstance(other, CycRing) and other.order == self.order

    def __hash__(self):
        return hash((CycRing, self.order))

    def __repr__(self):
        return f"CycRing({self.order})"
