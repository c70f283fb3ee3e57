"""Finite fields F_{p^s} in the power basis of F_p[X]/(modulus).

An element is stored as a single integer code ``c0 + c1*p + ... + c_{s-1}*p^(s-1)``
where ``(c0, ..., c_{s-1})`` are its coordinates.  All arithmetic goes
through per-field lookup tables built once at construction, which keeps the
inner loops of the series code down to list indexing.  The fields in scope
are small (q in the low hundreds at most), so the q*q tables are cheap.
"""

from __future__ import annotations

import functools
from math import gcd
from typing import Iterator, Sequence

from .errors import CompositeP, DivisionByZero, FieldMismatch, ReducibleModulus

MAX_TABLE_Q = 1 << 12


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --- polynomials over F_p as ascending coefficient lists -----------------


def _fp_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    """Remainder of a modulo the monic polynomial m over F_p."""
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            off = i - dm
            for j in range(dm + 1):
                a[off + j] = (a[off + j] - c * m[j]) % p
    return _fp_trim(a[:dm])


def _monic_polys(p: int, d: int) -> Iterator[tuple[int, ...]]:
    """Monic degree-d polynomials over F_p in increasing integer-code order.

    The code of ``X^d + c_{d-1} X^{d-1} + ... + c0`` is ``sum c_i p^i``, so the
    enumeration compares the highest non-leading coefficient first.
    """
    for code in range(p**d):
        low = []
        for _ in range(d):
            code, c = divmod(code, p)
            low.append(c)
        yield tuple(low) + (1,)


def is_irreducible(m: Sequence[int], p: int) -> bool:
    """Exhaustive check: no monic factor of degree 1..deg(m)//2 divides m."""
    d = len(m) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    for fd in range(1, d // 2 + 1):
        for f in _monic_polys(p, fd):
            if not _fp_mod(m, f, p):
                return False
    return True


def smallest_irreducible(p: int, s: int) -> tuple[int, ...]:
    for m in _monic_polys(p, s):
        if is_irreducible(m, p):
            return m
    raise AssertionError("unreachable: irreducibles exist in every degree")


class FieldCtx:
    """The field F_q, q = p^s, with arithmetic tables keyed by element code."""

    __slots__ = (
        "p", "s", "q", "modulus", "add_t", "sub_t", "mul_t", "neg_t", "inv_t",
        "zero", "one", "_hash",
    )

    def __init__(self, p: int, s: int, modulus: Sequence[int]):
        self.p = p
        self.s = s
        self.q = p**s
        self.modulus = tuple(modulus)
        self._hash = hash((p, s, self.modulus))
        q = self.q
        if q > MAX_TABLE_Q:
            raise ValueError(f"field of size {q} exceeds table limit {MAX_TABLE_Q}")
        vecs = [self._unpack(c) for c in range(q)]
        self.add_t = [
            [self._pack([(x + y) % p for x, y in zip(vecs[a], vecs[b])]) for b in range(q)]
            for a in range(q)
        ]
        self.sub_t = [
            [self._pack([(x - y) % p for x, y in zip(vecs[a], vecs[b])]) for b in range(q)]
            for a in range(q)
        ]
        self.neg_t = [self.sub_t[0][a] for a in range(q)]
        self.mul_t = [[0] * q for _ in range(q)]
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * s - 1)
                for i, x in enumerate(vecs[a]):
                    if x:
                        for j, y in enumerate(vecs[b]):
                            prod[i + j] += x * y
                c = self._pack(_fp_mod(prod, self.modulus, p))
                self.mul_t[a][b] = self.mul_t[b][a] = c
        self.inv_t = [0] * q
        for a in range(1, q):
            row = self.mul_t[a]
            self.inv_t[a] = row.index(1)
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, 1)

    def _unpack(self, code: int) -> list[int]:
        out = []
        for _ in range(self.s):
            code, c = divmod(code, self.p)
            out.append(c)
        return out

    def _pack(self, coeffs: Sequence[int]) -> int:
        code = 0
        for c in reversed(list(coeffs)[: self.s]):
            code = code * self.p + c
        return code

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.s, self.modulus) == (other.p, other.s, other.modulus)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"FieldCtx(p={self.p}, s={self.s}, modulus={list(self.modulus)})"

    def __call__(self, value) -> FieldElement:
        """Coerce an int (prime-subfield residue), coordinate list, string
        ``"c0,c1,..."`` or element into this field."""
        if isinstance(value, FieldElement):
            if value.ctx != self:
                raise FieldMismatch(f"{value.ctx!r} is not {self!r}")
            return value
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, int):
            return FieldElement(self, value % self.p)
        if isinstance(value, str):
            parts = [t for t in value.replace(" ", "").split(",") if t != ""]
            return self.from_coeffs([int(t) for t in parts])
        if isinstance(value, (list, tuple)):
            return self.from_coeffs(value)
        raise TypeError(f"cannot convert {type(value).__name__} to a field element")

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.s:
            raise ValueError(f"expected at most {self.s} coordinates, got {len(coeffs)}")
        return FieldElement(self, self._pack([int(c) % self.p for c in coeffs]))

    def element(self, code: int) -> FieldElement:
        return FieldElement(self, code)

    def elements(self) -> Iterator[FieldElement]:
        for c in range(self.q):
            yield FieldElement(self, c)

    def nonzero(self) -> Iterator[FieldElement]:
        for c in range(1, self.q):
            yield FieldElement(self, c)

    @property
    def generator(self) -> FieldElement:
        """A generator of the multiplicative group (smallest code)."""
        return FieldElement(self, _primitive_code(self))

    def coeffs_of(self, code: int) -> tuple[int, ...]:
        return tuple(self._unpack(code))

    def format_code(self, code: int) -> str:
        return ",".join(str(c) for c in self._unpack(code))

    def pow_code(self, code: int, n: int) -> int:
        mul = self.mul_t
        if n < 0:
            if code == 0:
                raise DivisionByZero("0 has no inverse")
            code, n = self.inv_t[code], -n
        result = 1
        base = code
        while n:
            if n & 1:
                result = mul[result][base]
            base = mul[base][base]
            n >>= 1
        return result

    def to_json(self) -> dict:
        return {"p": self.p, "s": self.s, "modulus": list(self.modulus)}


@functools.lru_cache(maxsize=None)
def _primitive_code(ctx: FieldCtx) -> int:
    order = ctx.q - 1
    factors = [f for f in range(2, order + 1) if order % f == 0 and is_prime(f)]
    for c in range(1, ctx.q):
        if all(ctx.pow_code(c, order // f) != 1 for f in factors):
            return c
    raise AssertionError("multiplicative group of a finite field is cyclic")


@functools.lru_cache(maxsize=None)
def _make_field_cached(p: int, s: int, modulus: tuple[int, ...]) -> FieldCtx:
    return FieldCtx(p, s, modulus)


def make_field(p: int, s: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Construct F_{p^s}.

    ``modulus`` is a monic degree-s polynomial over F_p given by ascending
    coefficients.  Without one, the smallest monic irreducible is used, in the
    order of the integer code ``sum c_i p^i`` of its non-leading coefficients
    (so ``X`` for s = 1, ``X^2+X+1`` for F_4, ``X^2+1`` for F_9).
    """
    if not is_prime(p):
        raise CompositeP(f"p={p} is not prime")
    if s < 1:
        raise ValueError(f"s must be >= 1, got {s}")
    if modulus is None:
        mod = smallest_irreducible(p, s)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != s + 1 or mod[-1] != 1:
            raise ValueError(f"modulus {list(modulus)} is not monic of degree {s}")
        if not is_irreducible(mod, p):
            raise ReducibleModulus(f"modulus {list(modulus)} is reducible over F_{p}")
    return _make_field_cached(p, s, mod)


class FieldElement:
    """An element of a :class:`FieldCtx`; immutable and hashable."""

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.ctx.coeffs_of(self.code)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx != self.ctx:
                raise FieldMismatch(f"cannot combine {self.ctx!r} with {other.ctx!r}")
            return other.code
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.ctx.p
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other):
        return FieldElement(self.ctx, self.ctx.add_t[self.code][self._other(other)])

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub_t[self.code][self._other(other)])

    def __rsub__(self, other):
        return FieldElement(self.ctx, self.ctx.sub_t[self._other(other)][self.code])

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg_t[self.code])

    def __mul__(self, other):
        return FieldElement(self.ctx, self.ctx.mul_t[self.code][self._other(other)])

    __rmul__ = __mul__

    def inv(self) -> FieldElement:
        if self.code == 0:
            raise DivisionByZero("0 has no multiplicative inverse")
        return FieldElement(self.ctx, self.ctx.inv_t[self.code])

    def __truediv__(self, other):
        o = self._other(other)
        if o == 0:
            raise DivisionByZero("division by zero in finite field")
        return FieldElement(self.ctx, self.ctx.mul_t[self.code][self.ctx.inv_t[o]])

    def __rtruediv__(self, other):
        return FieldElement(self.ctx, self._other(other)) / self

    def __pow__(self, n: int):
        return FieldElement(self.ctx, self.ctx.pow_code(self.code, n))

    def frobenius(self, t: int = 1) -> FieldElement:
        return self ** (self.ctx.p**t)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.code == other.code and self.ctx == other.ctx
        if isinstance(other, int) and not isinstance(other, bool):
            return self.code == other % self.ctx.p
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.code))

    def __bool__(self):
        return self.code != 0

    def __str__(self):
        return self.ctx.format_code(self.code)

    def __repr__(self):
        return f"FieldElement({self})"


def inv(x: FieldElement) -> FieldElement:
    return x.inv()


def power(x: FieldElement, n: int) -> FieldElement:
    return x**n


def is_power_of(r: int, p: int) -> bool:
    """True when r = p^t with t >= 1."""
    if r < p:
        return False
    while r % p == 0:
        r //= p
    return r == 1


def power_is_bijective(ctx: FieldCtx, gamma: int) -> bool:
    return gcd(gamma, ctx.q - 1) == 1
