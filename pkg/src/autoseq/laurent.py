"""Polynomials in F_q[T], rational functions in F_q(T), and truncated
Laurent series in 1/T.

A :class:`LaurentSeries` carries an explicit precision ``prec``: every
coefficient of an exponent ``e > -prec`` is known exactly, nothing below is.
Exact finite objects (polynomials, monomials) use ``prec = math.inf``.
Coefficients are kept as field-element codes internally; the public
accessors hand out :class:`~autoseq.field.FieldElement` values.
"""

from __future__ import annotations

import math
from typing import Iterable, Mapping, Sequence

from .errors import (
    FieldMismatch,
    NotCharPower,
    PrecisionTooLow,
    ZeroDenominator,
    ZeroSeries,
)
from .field import FieldCtx, FieldElement, is_power_of

INF = math.inf


def _check_same(a, b):
    if a.ctx is not b.ctx and a.ctx != b.ctx:
        raise FieldMismatch(f"{a.ctx!r} vs {b.ctx!r}")


def _code(ctx: FieldCtx, x) -> int:
    if isinstance(x, FieldElement):
        if x.ctx is not ctx and x.ctx != ctx:
            raise FieldMismatch(f"{x.ctx!r} vs {ctx!r}")
        return x.code
    return ctx(x).code


def _fmt_coeff(ctx: FieldCtx, code: int) -> str:
    if ctx.s == 1:
        return str(code)
    return "[" + ctx.format_code(code) + "]"


# ----------------------------------------------------------------- Poly


class Poly:
    """Polynomial over F_q with ascending coefficients; zero is ``()``.

    ``degree`` of the zero polynomial is -1.
    """

    __slots__ = ("ctx", "_c")

    def __init__(self, ctx: FieldCtx, coeffs: Iterable = ()):
        self.ctx = ctx
        c = [_code(ctx, x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, ctx: FieldCtx, codes) -> Poly:
        p = object.__new__(cls)
        p.ctx = ctx
        c = list(codes)
        while c and c[-1] == 0:
            c.pop()
        p._c = tuple(c)
        return p

    @classmethod
    def monomial(cls, ctx: FieldCtx, n: int, c=1) -> Poly:
        return cls._raw(ctx, [0] * n + [_code(ctx, c)])

    @classmethod
    def T(cls, ctx: FieldCtx) -> Poly:
        return cls._raw(ctx, [0, 1])

    @classmethod
    def const(cls, ctx: FieldCtx, c) -> Poly:
        return cls._raw(ctx, [_code(ctx, c)])

    @property
    def codes(self) -> tuple[int, ...]:
        return self._c

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.ctx, c) for c in self._c]

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    @property
    def lead(self) -> FieldElement:
        if not self._c:
            raise ValueError("zero polynomial has no leading coefficient")
        return FieldElement(self.ctx, self._c[-1])

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ctx == other.ctx and self._c == other._c

    def __hash__(self):
        return hash((self.ctx, self._c))

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            _check_same(self, other)
            return other
        return Poly.const(self.ctx, other)

    def __add__(self, other):
        o = self._coerce(other)
        add = self.ctx.add_t
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = add[out[i]][y]
        return Poly._raw(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg_t
        return Poly._raw(self.ctx, [neg[x] for x in self._c])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        o = self._coerce(other)
        a, b = self._c, o._c
        if not a or not b:
            return Poly._raw(self.ctx, ())
        add, mul = self.ctx.add_t, self.ctx.mul_t
        out = [0] * (len(a) + len(b) - 1)
        bnz = [(j, y) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if x:
                row = mul[x]
                for j, y in bnz:
                    k = i + j
                    out[k] = add[out[k]][row[y]]
        return Poly._raw(self.ctx, out)

    __rmul__ = __mul__

    def scale(self, c) -> Poly:
        row = self.ctx.mul_t[_code(self.ctx, c)]
        return Poly._raw(self.ctx, [row[x] for x in self._c])

    def shift(self, n: int) -> Poly:
        """Multiply by T^n (n >= 0)."""
        if not self._c:
            return self
        return Poly._raw(self.ctx, (0,) * n + self._c)

    def __divmod__(self, other):
        o = self._coerce(other)
        if not o._c:
            raise ZeroDenominator("polynomial division by zero")
        ctx = self.ctx
        sub, mul = ctx.sub_t, ctx.mul_t
        rem = list(self._c)
        db = len(o._c) - 1
        if len(rem) - 1 < db:
            return Poly._raw(ctx, ()), self
        inv_lead = ctx.inv_t[o._c[-1]]
        bnz = [(j, y) for j, y in enumerate(o._c[:-1]) if y]
        quot = [0] * (len(rem) - db)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c:
                qc = mul[c][inv_lead]
                off = i - db
                quot[off] = qc
                row = mul[qc]
                for j, y in bnz:
                    rem[off + j] = sub[rem[off + j]][row[y]]
                rem[i] = 0
        return Poly._raw(ctx, quot), Poly._raw(ctx, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        if not self._c:
            return self
        return self.scale(FieldElement(self.ctx, self.ctx.inv_t[self._c[-1]]))

    def frobenius(self, r: int) -> Poly:
        """self**r for r a power of the characteristic (coefficient-wise)."""
        if r != 1 and not is_power_of(r, self.ctx.p):
            raise NotCharPower(f"{r} is not a power of {self.ctx.p}")
        pw = self.ctx.pow_code
        out = [0] * (r * (len(self._c) - 1) + 1) if self._c else []
        for i, x in enumerate(self._c):
            if x:
                out[r * i] = pw(x, r)
        return Poly._raw(self.ctx, out)

    def __pow__(self, n: int) -> Poly:
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Poly.const(self.ctx, 1)
        base = self
        p = self.ctx.p
        # peel off characteristic-power factors through Frobenius
        t = 1
        while n and n % p == 0:
            n //= p
            t *= p
        if t > 1:
            base = base.frobenius(t)
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __call__(self, x):
        ctx = self.ctx
        xc = _code(ctx, x)
        add, mul = ctx.add_t, ctx.mul_t
        acc = 0
        for c in reversed(self._c):
            acc = add[mul[acc][xc]][c]
        return FieldElement(ctx, acc)

    def __str__(self):
        if not self._c:
            return "0"
        parts = []
        for i in range(len(self._c) - 1, -1, -1):
            c = self._c[i]
            if not c:
                continue
            mono = "" if i == 0 else ("T" if i == 1 else f"T^{i}")
            cs = _fmt_coeff(self.ctx, c)
            if mono and c == 1:
                parts.append(mono)
            elif mono:
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(cs)
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self})"

    def to_json(self) -> list[str]:
        return [self.ctx.format_code(c) for c in self._c]

    @classmethod
    def from_json(cls, ctx: FieldCtx, data: Sequence) -> Poly:
        return cls(ctx, [ctx(x) for x in data])


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm (gcd(0, 0) = 0)."""
    _check_same(a, b)
    while b:
        a, b = b, a % b
    return a.monic()


# ------------------------------------------------------ RationalFunction


class RationalFunction:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, *, reduce: bool = True):
        if den is None:
            den = Poly.const(num.ctx, 1)
        _check_same(num, den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if reduce:
            if num.is_zero():
                den = Poly.const(num.ctx, 1)
            else:
                g = poly_gcd(num, den)
                if g.degree > 0:
                    num, den = num // g, den // g
            lc = den.lead
            if lc != 1:
                s = lc.inv()
                num, den = num.scale(s), den.scale(s)
        self.num = num
        self.den = den

    @property
    def ctx(self) -> FieldCtx:
        return self.num.ctx

    @classmethod
    def monomial(cls, ctx: FieldCtx, e: int, c=1) -> RationalFunction:
        """c * T^e for any integer e."""
        if e >= 0:
            return cls(Poly.monomial(ctx, e, c), reduce=False)
        return cls(Poly.const(ctx, c), Poly.monomial(ctx, -e), reduce=False)

    @classmethod
    def laurent_poly(cls, ctx: FieldCtx, terms: Mapping[int, object]) -> RationalFunction:
        """Finite sum of c * T^e; negative exponents allowed."""
        items = [(e, _code(ctx, c)) for e, c in terms.items()]
        items = [(e, c) for e, c in items if c]
        if not items:
            return cls(Poly._raw(ctx, ()))
        low = min(0, min(e for e, _ in items))
        codes = [0] * (max(e for e, _ in items) - low + 1)
        for e, c in items:
            codes[e - low] = ctx.add_t[codes[e - low]][c]
        return cls(Poly._raw(ctx, codes), Poly.monomial(ctx, -low))

    def _coerce(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            _check_same(self.num, other.num)
            return other
        if isinstance(other, Poly):
            return RationalFunction(other, reduce=False)
        return RationalFunction(Poly.const(self.ctx, other), reduce=False)

    def __add__(self, other):
        o = self._coerce(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.num.is_zero():
            raise ZeroDenominator("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.num**n, self.den**n, reduce=False)

    def frobenius(self, r: int) -> RationalFunction:
        return RationalFunction(self.num.frobenius(r), self.den.frobenius(r), reduce=False)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __str__(self):
        if self.den.degree == 0:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RationalFunction({self})"

    def to_series(self, order: int) -> LaurentSeries:
        return series_from_rational(self, order)

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, ctx: FieldCtx, data: Mapping) -> RationalFunction:
        return cls(Poly.from_json(ctx, data["num"]), Poly.from_json(ctx, data["den"]))


# ----------------------------------------------------------- LaurentSeries


class LaurentSeries:
    """Truncated series sum c_e T^e over exponents e <= lead_exp.

    Coefficients are stored from the top exponent downward; exponents
    between the last stored coefficient and ``-prec`` are zero.
    """

    __slots__ = ("ctx", "_top", "_c", "prec")

    def __init__(self, ctx: FieldCtx, top: int, codes: Sequence[int], prec=INF):
        self.ctx = ctx
        self.prec = prec
        c = list(codes)
        if prec != INF:
            keep = top + prec  # positions with exponent > -prec
            if keep < len(c):
                c = c[: max(keep, 0)]
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        while c and c[-1] == 0:
            c.pop()
        if start >= len(c):
            self._c = ()
            self._top = None
        else:
            self._c = tuple(c[start:])
            self._top = top - start

    # constructors

    @classmethod
    def zero(cls, ctx: FieldCtx, prec=INF) -> LaurentSeries:
        return cls(ctx, 0, (), prec)

    @classmethod
    def one(cls, ctx: FieldCtx) -> LaurentSeries:
        return cls(ctx, 0, (1,))

    @classmethod
    def monomial(cls, ctx: FieldCtx, e: int, c=1) -> LaurentSeries:
        return cls(ctx, e, (_code(ctx, c),))

    @classmethod
    def from_terms(cls, ctx: FieldCtx, terms: Mapping[int, object], prec=INF) -> LaurentSeries:
        items = {e: _code(ctx, c) for e, c in terms.items()}
        items = {e: c for e, c in items.items() if c and e > -prec}
        if not items:
            return cls.zero(ctx, prec)
        top = max(items)
        low = min(items)
        codes = [0] * (top - low + 1)
        for e, c in items.items():
            codes[top - e] = c
        return cls(ctx, top, codes, prec)

    @classmethod
    def from_poly(cls, poly: Poly, prec=INF) -> LaurentSeries:
        return cls(poly.ctx, poly.degree, poly.codes[::-1], prec)

    @classmethod
    def from_sequence(cls, ctx: FieldCtx, values: Sequence, order: int | None = None) -> LaurentSeries:
        """sum_{n>=1} values[n-1] T^{-n}, exact through exponent -order."""
        if order is None:
            order = len(values)
        if order > len(values):
            raise PrecisionTooLow(f"need {order} terms, have {len(values)}")
        codes = [_code(ctx, v) for v in values[:order]]
        return cls(ctx, -1, codes, order + 1)

    @classmethod
    def from_code_sequence(cls, ctx: FieldCtx, codes: Sequence[int], order: int) -> LaurentSeries:
        """As :meth:`from_sequence` for raw element codes."""
        if order > len(codes):
            raise PrecisionTooLow(f"need {order} terms, have {len(codes)}")
        return cls(ctx, -1, codes[:order], order + 1)

    # accessors

    @property
    def lead_exp(self) -> int | None:
        return self._top

    @property
    def codes(self) -> tuple[int, ...]:
        return self._c

    def is_zero(self) -> bool:
        """Zero to the known precision."""
        return not self._c

    def is_exact(self) -> bool:
        return self.prec == INF

    @property
    def low_exp(self) -> int | None:
        """Lowest exponent with a stored (nonzero) coefficient."""
        if not self._c:
            return None
        return self._top - len(self._c) + 1

    def _eff_lead(self):
        """Leading exponent, or the precision bound for a zero series."""
        if self._c:
            return self._top
        return -self.prec

    def coeff_code(self, e: int) -> int:
        if e <= -self.prec:
            raise PrecisionTooLow(f"coefficient of T^{e} unknown (prec {self.prec})")
        if not self._c:
            return 0
        i = self._top - e
        if 0 <= i < len(self._c):
            return self._c[i]
        return 0

    def coeff(self, e: int) -> FieldElement:
        return FieldElement(self.ctx, self.coeff_code(e))

    def __getitem__(self, e: int) -> FieldElement:
        return self.coeff(e)

    @property
    def coeffs(self) -> list[FieldElement]:
        """Coefficients from ``lead_exp`` down to ``-prec + 1`` (or to the last
        nonzero coefficient for an exact series)."""
        if not self._c:
            return []
        n = len(self._c) if self.prec == INF else self._top + self.prec
        return [FieldElement(self.ctx, self._c[i] if i < len(self._c) else 0) for i in range(n)]

    def window(self, hi: int, lo: int) -> list[int]:
        """Codes of exponents hi, hi-1, ..., lo."""
        if lo <= -self.prec:
            raise PrecisionTooLow(f"exponent {lo} beyond precision {self.prec}")
        out = [0] * (hi - lo + 1)
        if self._c:
            for i, c in enumerate(self._c):
                e = self._top - i
                if lo <= e <= hi:
                    out[hi - e] = c
        return out

    def truncate(self, order: int) -> LaurentSeries:
        """Forget everything below exponent -order."""
        return LaurentSeries(self.ctx, self._top or 0, self._c, min(self.prec, order + 1))

    # arithmetic

    def _arg(self, other) -> LaurentSeries:
        if isinstance(other, LaurentSeries):
            _check_same(self, other)
            return other
        if isinstance(other, Poly):
            _check_same(self, other)
            return LaurentSeries.from_poly(other)
        if isinstance(other, RationalFunction):
            raise TypeError("expand the rational function with to_series(order) first")
        return LaurentSeries.monomial(self.ctx, 0, other)

    def __add__(self, other):
        return series_add(self, self._arg(other))

    __radd__ = __add__

    def __neg__(self):
        neg = self.ctx.neg_t
        return LaurentSeries(self.ctx, self._top or 0, [neg[c] for c in self._c], self.prec)

    def __sub__(self, other):
        return series_add(self, -self._arg(other))

    def __rsub__(self, other):
        return series_add(self._arg(other), -self)

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)) and not isinstance(other, bool):
            return self.scale(other)
        return series_mul(self, self._arg(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._arg(other)
        return series_mul(self, series_inv(o))

    def __pow__(self, n: int):
        if n < 0:
            return series_inv(self) ** (-n)
        result = LaurentSeries.one(self.ctx)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> LaurentSeries:
        row = self.ctx.mul_t[_code(self.ctx, c)]
        return LaurentSeries(self.ctx, self._top or 0, [row[x] for x in self._c], self.prec)

    def shift(self, k: int) -> LaurentSeries:
        """Multiply by T^k."""
        return LaurentSeries(self.ctx, (self._top or 0) + k, self._c, self.prec - k)

    def substitute_scaled(self, c) -> LaurentSeries:
        """f(T) -> f(c*T) for a nonzero constant c."""
        cc = _code(self.ctx, c)
        if cc == 0:
            raise ZeroSeries("substitution T -> 0*T")
        pw = self.ctx.pow_code
        out = [self.ctx.mul_t[x][pw(cc, self._top - i)] if x else 0 for i, x in enumerate(self._c)]
        return LaurentSeries(self.ctx, self._top or 0, out, self.prec)

    def first_difference(self, other: LaurentSeries) -> int | None:
        """Highest exponent where the two differ within shared precision."""
        d = self - other
        return d.lead_exp

    def agrees_with(self, other: LaurentSeries) -> bool:
        return (self - other).is_zero()

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.ctx == other.ctx
            and self.prec == other.prec
            and self._c == other._c
            and self._top == other._top
        )

    def __hash__(self):
        return hash((self.ctx, self._top, self._c, self.prec))

    def __repr__(self):
        shown = []
        for i, c in enumerate(self._c[:8]):
            if c:
                shown.append(f"{_fmt_coeff(self.ctx, c)}*T^{self._top - i}")
        body = " + ".join(shown) if shown else "0"
        if len(self._c) > 8:
            body += " + ..."
        tail = "" if self.prec == INF else f" + O(T^{-self.prec})"
        return f"LaurentSeries({body}{tail})"

    def to_json(self) -> dict:
        return {
            "lead_exp": self._top,
            "prec": None if self.prec == INF else self.prec,
            "coeffs": [str(x) for x in self.coeffs],
        }

    @classmethod
    def from_json(cls, ctx: FieldCtx, data: Mapping) -> LaurentSeries:
        prec = INF if data.get("prec") is None else int(data["prec"])
        if data.get("lead_exp") is None:
            return cls.zero(ctx, prec)
        return cls(ctx, int(data["lead_exp"]), [ctx(x).code for x in data["coeffs"]], prec)


def series_add(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    _check_same(a, b)
    prec = min(a.prec, b.prec)
    if not b._c:
        return LaurentSeries(a.ctx, a._top or 0, a._c, prec)
    if not a._c:
        return LaurentSeries(b.ctx, b._top or 0, b._c, prec)
    top = max(a._top, b._top)
    low = min(a._top - len(a._c), b._top - len(b._c)) + 1
    if prec != INF:
        low = max(low, -prec + 1)
    if low > top:
        return LaurentSeries.zero(a.ctx, prec)
    out = [0] * (top - low + 1)
    off = top - a._top
    n = min(len(a._c), len(out) - off)
    out[off : off + n] = a._c[:n]
    add = a.ctx.add_t
    off = top - b._top
    for i in range(min(len(b._c), len(out) - off)):
        k = off + i
        out[k] = add[out[k]][b._c[i]]
    return LaurentSeries(a.ctx, top, out, prec)


def series_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    """Cauchy product; exact for exponents above min(prec_a - lead_b, prec_b - lead_a)."""
    _check_same(a, b)
    prec = min(a.prec - b._eff_lead(), b.prec - a._eff_lead())
    if not a._c or not b._c:
        return LaurentSeries.zero(a.ctx, prec)
    top = a._top + b._top
    n_out = len(a._c) + len(b._c) - 1
    if prec != INF:
        n_out = min(n_out, top + prec)
    if n_out <= 0:
        return LaurentSeries.zero(a.ctx, prec)
    add, mul = a.ctx.add_t, a.ctx.mul_t
    out = [0] * n_out
    bnz = [(j, y) for j, y in enumerate(b._c) if y]
    for i, x in enumerate(a._c):
        if i >= n_out:
            break
        if x:
            row = mul[x]
            lim = n_out - i
            for j, y in bnz:
                if j >= lim:
                    break
                k = i + j
                out[k] = add[out[k]][row[y]]
    return LaurentSeries(a.ctx, top, out, prec)


def series_inv(a: LaurentSeries, order: int | None = None) -> LaurentSeries:
    """Multiplicative inverse, exact through exponent -order.

    The achievable precision keeps the number of known coefficients counted
    from the leading term; asking for more raises PrecisionTooLow.
    """
    if not a._c:
        raise ZeroSeries("inverse of a series that is zero to its precision")
    ctx = a.ctx
    d = a._top
    rel = d + a.prec  # known coefficients from the leading one down
    if order is None:
        if rel == INF:
            raise PrecisionTooLow("order is required to invert an exact series")
        n = rel
    else:
        n = order - (-d) + 1
        if n > rel:
            raise PrecisionTooLow(
                f"order {order} exceeds achievable precision {int(rel) - d - 1}"
            )
        if n <= 0:
            return LaurentSeries.zero(ctx, order + 1)
    n = int(n)
    add, mul, neg = ctx.add_t, ctx.mul_t, ctx.neg_t
    inv0 = ctx.inv_t[a._c[0]]
    m_inv0 = neg[inv0]
    bnz = [(i, y) for i, y in enumerate(a._c) if y and i > 0]
    out = [0] * n
    out[0] = inv0
    for k in range(1, n):
        acc = 0
        for i, y in bnz:
            if i > k:
                break
            c = out[k - i]
            if c:
                acc = add[acc][mul[y][c]]
        if acc:
            out[k] = mul[m_inv0][acc]
    return LaurentSeries(ctx, -d, out, d + n)


def series_from_rational(f: RationalFunction, order: int) -> LaurentSeries:
    """Expansion of num/den in 1/T, exact through exponent -order.

    Long division from the top; cost is linear in the number of output terms
    times the number of nonzero denominator coefficients.
    """
    ctx = f.ctx
    if f.den.is_zero():
        raise ZeroDenominator("zero denominator")
    prec = order + 1
    if f.num.is_zero():
        return LaurentSeries.zero(ctx, prec)
    nd = f.num.codes[::-1]
    dd = f.den.codes[::-1]
    lead = f.num.degree - f.den.degree
    n_out = lead + order + 1
    if n_out <= 0:
        return LaurentSeries.zero(ctx, prec)
    sub, mul = ctx.sub_t, ctx.mul_t
    rem = list(nd[:n_out]) + [0] * max(0, n_out - len(nd))
    inv_lead = ctx.inv_t[dd[0]]
    dnz = [(i, y) for i, y in enumerate(dd) if y and i > 0]
    out = [0] * n_out
    for k in range(n_out):
        c = rem[k]
        if c:
            qk = mul[c][inv_lead]
            out[k] = qk
            row = mul[qk]
            for i, y in dnz:
                j = k + i
                if j >= n_out:
                    break
                rem[j] = sub[rem[j]][row[y]]
    return LaurentSeries(ctx, lead, out, prec)


def frobenius_power(a: LaurentSeries, r: int) -> LaurentSeries:
    """a**r for r a power of the characteristic: c_e T^e -> c_e^r T^{re}."""
    p = a.ctx.p
    if r != 1 and not is_power_of(r, p):
        raise NotCharPower(f"{r} is not a power of the characteristic {p}")
    prec = a.prec * r
    if not a._c:
        return LaurentSeries.zero(a.ctx, prec)
    pw = a.ctx.pow_code
    out = [0] * (r * (len(a._c) - 1) + 1)
    for i, x in enumerate(a._c):
        if x:
            out[r * i] = pw(x, r)
    return LaurentSeries(a.ctx, a._top * r, out, prec)


def poly_part(a: LaurentSeries) -> Poly:
    """Terms with exponent >= 0."""
    if a.prec < 1:
        raise PrecisionTooLow("constant term of the series is not known")
    if not a._c or a._top < 0:
        return Poly._raw(a.ctx, ())
    codes = [a.coeff_code(e) for e in range(0, a._top + 1)]
    return Poly._raw(a.ctx, codes)


def frac_part(a: LaurentSeries) -> LaurentSeries:
    """Terms with exponent < 0."""
    return a - LaurentSeries.from_poly(poly_part(a))
