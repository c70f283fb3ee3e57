"""Continued fractions over F_q(T) and periodicity detection.

A quotient is only emitted once the precision of the running remainder
certifies it; when the precision runs out the expansion stops and says so
through ``ContinuedFraction.truncated``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import NotPeriodic, PrecisionTooLow, PrefixTooShort, WrongCharacteristic, WrongR
from .field import FieldCtx, FieldElement
from .laurent import LaurentSeries, Poly, RationalFunction, poly_part, series_from_rational, series_inv
from .recurrences import CFSequenceSpec, generate


@dataclass(frozen=True)
class ContinuedFraction:
    quotients: tuple[Poly, ...]
    exact: bool = False
    truncated: bool = False

    def __len__(self):
        return len(self.quotients)

    def __str__(self):
        return "[" + ", ".join(str(a) for a in self.quotients) + "]"

    def to_json(self) -> list:
        return [a.to_json() for a in self.quotients]

    @classmethod
    def from_json(cls, ctx: FieldCtx, data: Sequence) -> ContinuedFraction:
        return cls(tuple(Poly.from_json(ctx, a) for a in data))


def cf_of_rational(f: RationalFunction) -> ContinuedFraction:
    """Quotient sequence of the Euclidean algorithm on num/den."""
    num, den = f.num, f.den
    quotients = []
    while den:
        a, rem = divmod(num, den)
        quotients.append(a)
        num, den = den, rem
    return ContinuedFraction(tuple(quotients), exact=True)


def cf_expand(a: LaurentSeries, max_quotients: int) -> ContinuedFraction:
    """Partial quotients of ``a``: a_1 = poly_part(a), then recurse on the
    inverse of the fractional part.

    An exact (infinite-precision) input is a Laurent polynomial and goes
    through the Euclidean algorithm.  For truncated input each step spends
    twice the degree of the quotient in precision; ``truncated`` is set when
    the next quotient can no longer be certified, ``exact`` when the
    remainder vanishes to the available precision.
    """
    if a.is_exact():
        cf = cf_of_rational(_as_rational(a))
        return ContinuedFraction(cf.quotients[:max_quotients], exact=len(cf) <= max_quotients)
    x = a
    quotients: list[Poly] = []
    while len(quotients) < max_quotients:
        if x.prec < 1:
            return ContinuedFraction(tuple(quotients), truncated=True)
        q = poly_part(x)
        quotients.append(q)
        frac = x - LaurentSeries.from_poly(q)
        if frac.is_zero():
            # prec <= 1 leaves no certified negative exponent: nothing is known
            if x.prec <= 1:
                return ContinuedFraction(tuple(quotients), truncated=True)
            return ContinuedFraction(tuple(quotients), exact=True)
        if len(quotients) < max_quotients:
            x = series_inv(frac)
    return ContinuedFraction(tuple(quotients))


def _as_rational(a: LaurentSeries) -> RationalFunction:
    ctx = a.ctx
    if a.is_zero():
        return RationalFunction(Poly._raw(ctx, ()))
    low = a.low_exp
    shift = max(0, -low)
    codes = [a.coeff_code(e) for e in range(low, a.lead_exp + 1)]
    num = Poly._raw(ctx, codes).shift(max(0, low))
    return RationalFunction(num, Poly.monomial(ctx, shift))


def convergents(cf: ContinuedFraction):
    """Final convergent (p_N, q_N) via p_n = a_n p_{n-1} + p_{n-2}."""
    if not cf.quotients:
        raise ValueError("empty continued fraction")
    ctx = cf.quotients[0].ctx
    p_prev, p = Poly.const(ctx, 1), cf.quotients[0]
    q_prev, q = Poly._raw(ctx, ()), Poly.const(ctx, 1)
    for a in cf.quotients[1:]:
        p_prev, p = p, a * p + p_prev
        q_prev, q = q, a * q + q_prev
    return p, q


def cf_to_series(cf: ContinuedFraction, order: int) -> LaurentSeries:
    p, q = convergents(cf)
    # consecutive convergents are coprime; skip the gcd
    return series_from_rational(RationalFunction(p, q, reduce=False), order)


def leading_coeffs(cf: ContinuedFraction) -> list[FieldElement]:
    return [a.lead for a in cf.quotients]


def detect_ultimate_periodicity(v: Sequence, max_preperiod: int, max_period: int):
    """Smallest (preperiod, period), compared as a pair, such that
    v(n + period) = v(n) for every checkable n > preperiod; None if no pair
    within the bounds works on the prefix."""
    if len(v) < max_preperiod + 2 * max_period:
        raise PrefixTooShort(
            f"need {max_preperiod + 2 * max_period} terms, have {len(v)}"
        )
    arr = np.fromiter((x.code if isinstance(x, FieldElement) else x for x in v), dtype=np.int64)
    best = None
    for period in range(1, max_period + 1):
        bad = np.flatnonzero(arr[period:] != arr[:-period])
        pre = int(bad[-1]) + 1 if bad.size else 0
        if pre <= max_preperiod and (best is None or (pre, period) < best):
            best = (pre, period)
            if pre == 0:
                break
    return best


def omega_series(ctx: FieldCtx, order: int) -> LaurentSeries:
    """The root of X^2 - T X - 1 with leading term T, i.e. [T, T, T, ...].

    Newton iteration from X = T; each step squares the error, so
    ceil(log2(order)) + 2 steps are enough.
    """
    steps = max(order, 1).bit_length() + 2
    work = order + steps + 2
    T = LaurentSeries.monomial(ctx, 1)
    x = T.truncate(work)
    for _ in range(steps):
        f = x * x - T * x - 1
        df = x.scale(2) - T
        x = (x - f * series_inv(df)).truncate(work)
    if x.prec < order + 1:
        raise PrecisionTooLow(f"Newton iteration lost precision ({x.prec} <= {order})")
    return x.truncate(order)


def cf_alpha_series(lam: Sequence[FieldElement], order: int) -> LaurentSeries:
    """[lambda_1 T, lambda_2 T, ...] expanded through T^-order."""
    ctx = lam[0].ctx
    need = order // 2 + 3
    if len(lam) < need:
        raise PrecisionTooLow(f"need {need} partial quotients for order {order}")
    quotients = tuple(Poly._raw(ctx, (0, x.code)) for x in lam[:need])
    return cf_to_series(ContinuedFraction(quotients), order)


def is_purely_two_periodic(lam: Sequence[FieldElement]) -> bool:
    return all(lam[n] == lam[n - 2] for n in range(2, len(lam)))


def quadratic_form_check(spec: CFSequenceSpec, order: int, horizon: int | None = None) -> bool:
    """Compare [l1 T, l2 T, ...] with (l1/l2)^(q/2) omega((l1 l2)^(q/2) T)
    through T^-order (r = 2)."""
    ctx = spec.field
    if ctx.p != 2:
        raise WrongCharacteristic("the quadratic form needs characteristic 2")
    if spec.r != 2:
        raise WrongR(f"needs r = 2, got {spec.r}")
    n = max(horizon or 0, order + 8, 64)
    lam = generate(spec, n)
    if not is_purely_two_periodic(lam):
        raise NotPeriodic("lambda sequence is not purely 2-periodic")
    left = cf_alpha_series(lam, order)
    h = ctx.q // 2
    scale = (lam[0] / lam[1]) ** h
    arg = (lam[0] * lam[1]) ** h
    right = omega_series(ctx, order).substitute_scaled(arg).scale(scale)
    return left.agrees_with(right)
