"""Symmetric-power structure maps sigma_t and their lambda-ring duals.

For an integer a, sigma_t(a) = (1-t)^(-a), whose n-th coefficient is the
binomial coefficient C(a+n-1, n).  For a polynomial f over the integers,
sigma_t sends f to f([z]) evaluated on the Teichmueller lift [z], i.e. a
signed product of factors (1 - z^i t)^(-c_i).  Both land in Witt rings, so
"sums of symmetric powers" literally are Witt sums here.

``sigma_witt`` extends the map to Witt vectors themselves: sigma_u(P) is
the element of W_M(W(A)) whose n-th outer ghost coordinate is the n-th
Frobenius F_n(P).  On Teichmueller lifts this reproduces the double lift
sigma_u([a]) = ([1] - [a]u)^(-1), and on sums of signed Teichmueller
elements it matches the expansion by multiplicativity of sigma; defining
it through outer ghost coordinates extends that rule to every Witt vector
with exact Newton inversion.  This ghost-based definition is the one
design liberty taken in this module, and the test suite pins it to the
Teichmueller expansion on all inputs where both make sense.
"""

from __future__ import annotations

from typing import Sequence

from .errors import PrecisionError
from .rings import IntPolynomial, Ring, TruncatedSeries, ZPOLY, ZZ
from .witt import (
    GhostVector,
    WittRing,
    WittVector,
    frobenius,
    ghost_inverse,
    map_coefficients,
    teichmuller,
    witt_add,
    witt_scale,
    witt_zero,
)


def sigma_int(a: int, prec: int) -> WittVector:
    """sigma_t(a) = (1-t)^(-a) as a Witt vector over the integers."""
    coeffs = []
    c = 1
    for n in range(1, prec + 1):
        # exact: c accumulates the binomial coefficient C(a+n-1, n)
        c = c * (a + n - 1) // n
        coeffs.append(c)
    return WittVector.from_coeffs(ZZ, coeffs)


def sigma_poly(f: IntPolynomial | int, prec: int) -> WittVector:
    """sigma_t(f) = f([z]) over ZZ[z]: the product of (1 - z^i t)^(-c_i).

    Teichmueller lifts are multiplicative, so evaluating f on [z] is the
    Witt sum over monomials of c_i copies of [z^i].
    """
    f = ZPOLY.check(f)
    acc = witt_zero(ZPOLY, prec)
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        lift = teichmuller(IntPolynomial.variable(i), prec, ZPOLY)
        acc = witt_add(acc, witt_scale(lift, c))
    return acc


def lambda_from_sigma(s: WittVector) -> TruncatedSeries:
    """Recover lambda_t(x) from sigma_t(x) via lambda_t = sigma_{-t}^(-1)."""
    return s.series.at_minus_t().inverse()


def sigma_witt(p: WittVector, outer_prec: int) -> WittVector:
    """sigma_u(P) in W_M(W_N'(A)), N' = floor(N/M), via outer ghosts.

    The n-th outer ghost coordinate is F_n(P); Frobenius divides precision
    by n, so the inner precision N' is what survives all of F_1..F_M.
    Requires N >= M so that N' >= 1.
    """
    if outer_prec < 1:
        raise ValueError("outer precision must be at least 1")
    if p.prec < outer_prec:
        raise PrecisionError(
            f"sigma_u to outer precision {outer_prec} needs input precision "
            f">= {outer_prec}, got {p.prec}",
            required=outer_prec,
        )
    inner_prec = p.prec // outer_prec
    inner_ring = WittRing(p.ring, inner_prec)
    coords = tuple(
        frobenius(p, n).truncate(inner_prec) for n in range(1, outer_prec + 1)
    )
    return ghost_inverse(GhostVector(inner_ring, coords))


def macdonald_poincare(betti: Sequence[int], prec: int) -> WittVector:
    """The Witt measure of a space with the given Betti numbers.

    Sends (b0, b1, ..., bd) to the alternating Witt sum of bi copies of
    [z^i] in W(ZZ[z]); its n-th ghost coordinate is the Poincare polynomial
    evaluated at z^n, and specializing z to 1 recovers sigma_t applied to
    the Euler characteristic.
    """
    f = IntPolynomial(tuple(-b if i & 1 else b for i, b in enumerate(betti)))
    return sigma_poly(f, prec)


def specialize_polynomial_coefficients(p: WittVector, value: int, ring: Ring = ZZ) -> WittVector:
    """Evaluate every polynomial coefficient at an integer point."""
    return map_coefficients(p, lambda c: c.evaluate(value), ring)
