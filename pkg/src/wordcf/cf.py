"""Continued fractions in K((1/T)): exact Euclidean expansion of rational
functions, certified expansion of truncated series, convergents, and the
irrationality-measure estimator.

Degrees, valuations and measure terms are exact integers/rationals; there is
no floating point and no real logarithm anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import check_same_field
from .poly import Polynomial, RationalFunction
from .series import LaurentSeries, PrecisionError, series_of_fraction


@dataclass(frozen=True)
class ContinuedFraction:
    """[a0; a1, a2, ...]: a0 unconstrained, all later quotients of degree >= 1."""

    quotients: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.quotients:
            raise ValueError("a continued fraction needs at least a0")
        for q in self.quotients[1:]:
            if q.degree < 1:
                raise ValueError("partial quotients beyond a0 must have degree >= 1")

    @property
    def field(self):
        return self.quotients[0].field

    @property
    def a0(self) -> Polynomial:
        return self.quotients[0]

    @property
    def partials(self) -> tuple[Polynomial, ...]:
        return self.quotients[1:]

    def degrees(self) -> list[int]:
        """Degrees d_1, d_2, ... of the partial quotients."""
        return [q.degree for q in self.quotients[1:]]

    def __len__(self):
        return len(self.quotients)


@dataclass(frozen=True)
class ConvergentTable:
    """Numerator/denominator pairs (x_n, y_n) of the truncated fractions."""

    rows: tuple[tuple[Polynomial, Polynomial], ...]

    def pair(self, n: int) -> tuple[Polynomial, Polynomial]:
        return self.rows[n]

    def determinant(self, n: int) -> Polynomial:
        """x_n y_{n-1} - x_{n-1} y_n; alternates between +1 and -1."""
        if n < 1:
            raise ValueError("determinant needs n >= 1")
        x_n, y_n = self.rows[n]
        x_p, y_p = self.rows[n - 1]
        return x_n * y_p - x_p * y_n

    def __len__(self):
        return len(self.rows)


def convergents(cf: ContinuedFraction) -> ConvergentTable:
    """Table from z_n = a_n z_{n-1} + z_{n-2} seeded with (a0, 1)."""
    field = cf.field
    one = Polynomial.one(field)
    zero = Polynomial.zero(field)
    rows = [(cf.a0, one)]
    x_prev, y_prev = one, zero
    for a in cf.quotients[1:]:
        x, y = rows[-1]
        rows.append((a * x + x_prev, a * y + y_prev))
        x_prev, y_prev = x, y
    return ConvergentTable(tuple(rows))


def cf_of_fraction(num: Polynomial, den: Polynomial) -> ContinuedFraction:
    """Finite continued fraction of num/den by iterated division."""
    check_same_field(num.field, den.field)
    if den.is_zero:
        raise ZeroDivisionError("zero divisor")
    a0, r = divmod(num, den)
    quotients = [a0]
    prev, cur = den, r
    while not cur.is_zero:
        q, r = divmod(prev, cur)
        quotients.append(q)
        prev, cur = cur, r
    return ContinuedFraction(tuple(quotients))


def cf_of_ratfunc(f: RationalFunction) -> ContinuedFraction:
    return cf_of_fraction(f.num, f.den)


def eval_cf(cf: ContinuedFraction) -> RationalFunction:
    """Collapse a finite continued fraction back to a reduced fraction."""
    x, y = convergents(cf).rows[-1]
    # gcd(x, y) = 1 by the determinant identity, so skip the gcd.
    return RationalFunction._from_coprime(x, y)


@dataclass(frozen=True)
class SeriesExpansion:
    """Certified prefix of the continued fraction of a truncated series.

    ``emitted`` counts the partial quotients after a0.  ``terminated`` is True
    when the truncation itself was reached exactly (a rational series).
    ``precision_consumed`` is 2*deg(y_emitted), the budget the certificate
    actually used.
    """

    cf: ContinuedFraction
    emitted: int
    precision_consumed: int
    terminated: bool


def cf_of_series(alpha: LaurentSeries) -> SeriesExpansion:
    """Expand a truncated series, emitting only partial quotients that are
    provably those of every series agreeing with alpha at the known exponents.

    The truncation beta (alpha's known digits, a rational function) is
    expanded by exact division; before each division step the upcoming
    quotient degree is already known from the remainder degrees, and the
    quotient a_{n+1} is emitted only when 2*deg(y_{n+1}) <= N where
    N = -known_down.  Any series within O(T^(known_down - 1)) of beta then
    shares the convergents x_0/y_0 ... x_{n+1}/y_{n+1}, consecutively, by the
    classical best-approximation criterion (|alpha - x/y| < |y|^-2 forces x/y
    to be a convergent), so the emitted prefix is exact.  The first rejected
    quotient is never computed.
    """
    field = alpha.field
    if alpha.known_down > 0:
        raise PrecisionError("precision exhausted")
    budget = -alpha.known_down
    if alpha.is_zero:
        # The truncation is the zero polynomial: a0 = 0 and the expansion of
        # the truncation stops there, like any other polynomial input.
        return SeriesExpansion(
            cf=ContinuedFraction((Polynomial.zero(field),)),
            emitted=0,
            precision_consumed=0,
            terminated=True,
        )
    # beta = num / T^(-known_down), num carrying alpha's known digits.
    num = Polynomial(field, list(reversed(alpha.coeffs)))
    den = Polynomial.monomial(field, field.one, -alpha.known_down)
    a0, r = divmod(num, den)
    quotients = [a0]
    prev, cur = den, r
    deg_y = 0
    terminated = False
    while True:
        if cur.is_zero:
            terminated = True
            break
        step = prev.degree - cur.degree
        if 2 * (deg_y + step) > budget:
            break
        q, r = divmod(prev, cur)
        quotients.append(q)
        deg_y += step
        prev, cur = cur, r
    if len(quotients) == 1 and not terminated:
        raise PrecisionError("precision exhausted")
    return SeriesExpansion(
        cf=ContinuedFraction(tuple(quotients)),
        emitted=len(quotients) - 1,
        precision_consumed=2 * deg_y,
        terminated=terminated,
    )


def approx_order(alpha: LaurentSeries, num: Polynomial, den: Polynomial) -> int:
    """The exponent t with |alpha - num/den| = |T|^(-t), found by exact
    series subtraction down to alpha's known precision."""
    check_same_field(alpha.field, num.field)
    if num.is_zero:
        if alpha.is_zero:
            raise PrecisionError("order exceeds precision")
        return -alpha.top
    top = num.degree - den.degree
    prec = top - alpha.known_down + 1
    if prec < 1:
        return -top
    diff = alpha - series_of_fraction(num, den, prec)
    if diff.is_zero:
        raise PrecisionError("order exceeds precision")
    return -diff.top


@dataclass(frozen=True)
class MeasureTerm:
    """One exact term of the irrationality-measure estimator."""

    n: int
    estimate: Fraction  # 2 + d_{n+1} / (d_1 + ... + d_n)
    running_max: Fraction


def measure_terms(degrees) -> list[MeasureTerm]:
    """Estimator terms 2 + d_{n+1}/sum(d_1..d_n) with their running maximum
    (the limsup proxy), all as exact rationals."""
    degrees = list(degrees)
    if len(degrees) < 2:
        raise ValueError("need at least two partial-quotient degrees")
    if any(d < 1 for d in degrees):
        raise ValueError("partial-quotient degrees must be >= 1")
    out: list[MeasureTerm] = []
    total = degrees[0]
    best = None
    for n in range(1, len(degrees)):
        term = 2 + Fraction(degrees[n], total)
        best = term if best is None else max(best, term)
        out.append(MeasureTerm(n=n, estimate=term, running_max=best))
        total += degrees[n]
    return out
