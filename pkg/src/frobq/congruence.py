"""Arithmetic-progression congruences on coefficient streams.

`verify_congruence` checks a single claim "coefficient(A*n + B) = 0 mod M"
against every index the truncation provides.  `scan_congruences` searches the
whole (A, B, M) box and reports every claim that survives with enough
witnesses, flagging claims that are implied by a coarser reported one.
`residue_argument_check` and `progression_exponent_check` mechanize the
finite residue computations that turn such observations into proofs for the
5n+4 pattern: a contribution to q^(5n+4) forces
(2j+1)^2 + 2(2k+1)^2 = 0 mod 5, whose only solution over Z/5 x Z/5 is (0, 0).
"""

from __future__ import annotations

from dataclasses import dataclass

from .qseries import TruncSeries


@dataclass
class CongruenceClaim:
    """One claim: coefficient(step*n + offset) = 0 (mod modulus) for all checked n."""

    step: int
    offset: int
    modulus: int
    verified_up_to: int
    status: str  # "verified" or "violated"
    first_violation: int | None = None
    witnesses: int = 0
    subsumed: bool = False

    def to_json_dict(self) -> dict:
        out = {
            "A": self.step,
            "B": self.offset,
            "M": self.modulus,
            "verified_up_to": self.verified_up_to,
            "status": self.status,
            "subsumed": self.subsumed,
        }
        if self.first_violation is not None:
            out["first_violation"] = self.first_violation
        return out


def verify_congruence(series: TruncSeries, step: int, offset: int, modulus: int) -> CongruenceClaim:
    """Check coefficient(step*n + offset) = 0 (mod modulus) on every available index."""
    if step < 1 or not 0 <= offset < step:
        raise ValueError("need step >= 1 and 0 <= offset < step")
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    indices = range(offset, series.order + 1, step)
    last = -1  # stays -1 when the truncation offers no indices at all
    count = 0
    for idx in indices:
        last = idx
        count += 1
        if series.coeffs[idx] % modulus != 0:
            return CongruenceClaim(step, offset, modulus, verified_up_to=last,
                                   status="violated", first_violation=idx, witnesses=count)
    return CongruenceClaim(step, offset, modulus, verified_up_to=last,
                           status="verified", witnesses=count)


def _primes_up_to(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = 0
    return out


def scan_congruences(series: TruncSeries, max_step: int, max_modulus: int,
                     min_witnesses: int = 20, primes_only: bool = True) -> list[CongruenceClaim]:
    """All (A, B, M) with A <= max_step, M <= max_modulus that hold on every index.

    Moduli are primes by default (composites are redundant for discovery);
    primes_only=False widens to every modulus >= 2.  Every scanned (A, B)
    cell must offer at least `min_witnesses` indices within the truncation,
    otherwise the scan refuses (short series breed vacuous claims).  A
    reported claim whose index set is contained in a coarser reported claim
    with the same modulus is flagged subsumed, never dropped.  Output is
    sorted by (M, A, B) and is deterministic.
    """
    if max_step < 1:
        raise ValueError("max_step must be >= 1")
    if max_modulus < 2:
        raise ValueError("max_modulus must be >= 2")
    if min_witnesses < 1:
        raise ValueError("min_witnesses must be >= 1")
    moduli = _primes_up_to(max_modulus) if primes_only else list(range(2, max_modulus + 1))
    for step in range(1, max_step + 1):
        for offset in range(step):
            available = len(range(offset, series.order + 1, step))
            if available < min_witnesses:
                raise ValueError(
                    f"insufficient witnesses: A={step}, B={offset} has {available} "
                    f"indices up to order {series.order}, need {min_witnesses}")
    claims = []
    for modulus in moduli:
        for step in range(1, max_step + 1):
            for offset in range(step):
                claim = verify_congruence(series, step, offset, modulus)
                if claim.status == "verified":
                    claims.append(claim)
    reported = {(c.modulus, c.step, c.offset) for c in claims}
    for c in claims:
        c.subsumed = any(
            (c.modulus, a, c.offset % a) in reported
            for a in range(1, c.step)
            if c.step % a == 0
        )
    claims.sort(key=lambda c: (c.modulus, c.step, c.offset))
    return claims


def residue_argument_check(a: int, b: int, modulus: int) -> list[tuple[int, int]]:
    """All (x, y) in [0, m)^2 with a*x^2 + b*y^2 = 0 (mod m), exhaustively.

    The key finite fact for the 5n+4 congruences is that (1, 2, 5) yields
    exactly [(0, 0)]: checked over all 25 pairs, nothing else works.
    """
    if modulus < 2:
        raise ValueError("modulus must be >= 2")
    return [
        (x, y)
        for x in range(modulus)
        for y in range(modulus)
        if (a * x * x + b * y * y) % modulus == 0
    ]


def progression_exponent_check(step: int = 5, offset: int = 4, modulus: int = 5) -> bool:
    """Exhaustively verify the exponent-to-residue equivalence behind the 5n+4 claims.

    Over all j, k in [0, 2*modulus): the exponent C(j+1,2) + k^2 + k lands on
    the progression (= offset mod step) exactly when
    (2j+1)^2 + 2(2k+1)^2 = 0 (mod modulus), and every such (j, k) has
    2j+1 = 2k+1 = 0 (mod modulus), killing the coefficient (2j+1) mod modulus.
    """
    if step < 1 or modulus < 2:
        raise ValueError("need step >= 1 and modulus >= 2")
    for j in range(2 * modulus):
        for k in range(2 * modulus):
            on_progression = (j * (j + 1) // 2 + k * k + k) % step == offset % step
            quadratic_zero = ((2 * j + 1) ** 2 + 2 * (2 * k + 1) ** 2) % modulus == 0
            if on_progression != quadratic_zero:
                return False
            if on_progression and not ((2 * j + 1) % modulus == 0 and (2 * k + 1) % modulus == 0):
                return False
    return True
