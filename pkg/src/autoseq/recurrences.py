"""The three recurrence families and their term generators.

Sequences are 1-indexed as in the mathematics: ``generate(spec, N)[n - 1]``
is the n-th term.  Every generator is a single forward pass because each
recursive term depends on a strictly earlier index.

``HyperquadraticSpec``
    lambda_{l+1+r*n} = alpha_{(n mod k)+1} * lambda_{n+1}^r,
    lambda_{l+1+r*n+j} = beta_j  (1 <= j < r),  r a power of p, k | r.
``CFSequenceSpec``
    the characteristic-2 family driven by (eps1, eps2); it is a special case
    of the previous one via :func:`spec_from_cf_params`.
``PowerRecurrenceSpec``
    same index scheme with an exponent gamma coprime to q-1 in place of r and
    a table beta_{i,j} that may depend on i = n mod k.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence, Union

import numpy as np

from .errors import (
    GammaNotCoprime,
    KNotDividingR,
    RNotCharPower,
    SpecError,
    WrongCharacteristic,
    ZeroAlpha,
)
from .field import FieldCtx, FieldElement, is_power_of


def _elems(ctx: FieldCtx, values, name: str) -> tuple[FieldElement, ...]:
    try:
        return tuple(ctx(v) for v in values)
    except (TypeError, ValueError) as exc:
        raise SpecError(f"{name}: {exc}", field=name) from exc


def _check_positive(value: int, name: str, minimum: int = 1):
    if not isinstance(value, int) or value < minimum:
        raise SpecError(f"{name} must be an integer >= {minimum}, got {value!r}", field=name)


def _check_len(values, n: int, name: str):
    if len(values) != n:
        raise SpecError(f"{name} needs {n} entries, got {len(values)}", field=name)


@dataclass(frozen=True)
class HyperquadraticSpec:
    field: FieldCtx
    ell: int
    r: int
    k: int
    lambda_init: tuple
    alpha: tuple
    beta: tuple

    family = "thm2"

    def __post_init__(self):
        ctx = self.field
        _check_positive(self.ell, "ell")
        _check_positive(self.k, "k")
        if not isinstance(self.r, int) or not is_power_of(self.r, ctx.p):
            raise RNotCharPower(f"r={self.r} is not a positive power of p={ctx.p}", field="r")
        if self.r % self.k:
            raise KNotDividingR(f"k={self.k} does not divide r={self.r}", field="k")
        object.__setattr__(self, "lambda_init", _elems(ctx, self.lambda_init, "lambda_init"))
        object.__setattr__(self, "alpha", _elems(ctx, self.alpha, "alpha"))
        object.__setattr__(self, "beta", _elems(ctx, self.beta, "beta"))
        _check_len(self.lambda_init, self.ell, "lambda_init")
        _check_len(self.alpha, self.k, "alpha")
        _check_len(self.beta, self.r - 1, "beta")
        for i, a in enumerate(self.alpha):
            if not a:
                raise ZeroAlpha(f"alpha_{i + 1} is zero", field="alpha")

    def alpha_at(self, n: int) -> FieldElement:
        """alpha_n of the k-periodic extension (n >= 0; alpha_0 = alpha_k)."""
        return self.alpha[(n - 1) % self.k]

    def beta_at(self, j: int) -> FieldElement:
        """beta_j for 1 <= j < r."""
        return self.beta[j - 1]


@dataclass(frozen=True)
class CFSequenceSpec:
    """Leading-coefficient sequences of the continued fractions
    [lambda_1 T, lambda_2 T, ...] in characteristic 2."""

    field: FieldCtx
    ell: int
    r: int
    lambda_init: tuple
    eps1: FieldElement
    eps2: FieldElement

    family = "prop1"

    def __post_init__(self):
        ctx = self.field
        if ctx.p != 2:
            raise WrongCharacteristic(f"needs characteristic 2, field has p={ctx.p}", field="p")
        _check_positive(self.ell, "ell")
        if not isinstance(self.r, int) or not is_power_of(self.r, 2):
            raise RNotCharPower(f"r={self.r} is not a positive power of 2", field="r")
        object.__setattr__(self, "lambda_init", _elems(ctx, self.lambda_init, "lambda_init"))
        object.__setattr__(self, "eps1", _elems(ctx, [self.eps1], "eps1")[0])
        object.__setattr__(self, "eps2", _elems(ctx, [self.eps2], "eps2")[0])
        _check_len(self.lambda_init, self.ell, "lambda_init")
        for i, x in enumerate(self.lambda_init):
            if not x:
                raise SpecError(f"lambda_{i + 1} must be nonzero", field="lambda_init")
        if not self.eps1:
            raise SpecError("eps1 must be nonzero", field="eps1")
        if not self.eps2:
            raise SpecError("eps2 must be nonzero", field="eps2")


@dataclass(frozen=True)
class PowerRecurrenceSpec:
    field: FieldCtx
    ell: int
    r: int
    k: int
    gamma: int
    u_init: tuple
    alpha: tuple
    beta: tuple  # k rows of r-1 entries: beta[i][j-1] = beta_{i,j}

    family = "thm4"

    def __post_init__(self):
        ctx = self.field
        _check_positive(self.ell, "ell")
        _check_positive(self.r, "r", 2)
        _check_positive(self.k, "k")
        _check_positive(self.gamma, "gamma")
        if self.r % self.k:
            raise KNotDividingR(f"k={self.k} does not divide r={self.r}", field="k")
        if gcd(self.gamma, ctx.q - 1) != 1:
            raise GammaNotCoprime(
                f"gamma={self.gamma} is not coprime with q-1={ctx.q - 1}", field="gamma"
            )
        object.__setattr__(self, "u_init", _elems(ctx, self.u_init, "u_init"))
        object.__setattr__(self, "alpha", _elems(ctx, self.alpha, "alpha"))
        _check_len(self.u_init, self.ell, "u_init")
        _check_len(self.alpha, self.k, "alpha")
        for i, a in enumerate(self.alpha):
            if not a:
                raise ZeroAlpha(f"alpha_{i + 1} is zero", field="alpha")
        rows = list(self.beta)
        _check_len(rows, self.k, "beta")
        rows = tuple(_elems(ctx, row, "beta") for row in rows)
        for row in rows:
            _check_len(row, self.r - 1, "beta")
        object.__setattr__(self, "beta", rows)

    def alpha_at(self, n: int) -> FieldElement:
        return self.alpha[(n - 1) % self.k]


AnySpec = Union[HyperquadraticSpec, CFSequenceSpec, PowerRecurrenceSpec]


def spec_from_cf_params(spec: CFSequenceSpec) -> HyperquadraticSpec:
    """Rewrite the (eps1, eps2) family as a k = 2 hyperquadratic spec."""
    e1, e2 = spec.eps1, spec.eps2
    ratio = e2 / e1
    beta = [ratio if j % 2 == 0 else ratio.inv() for j in range(1, spec.r)]
    return HyperquadraticSpec(
        field=spec.field,
        ell=spec.ell,
        r=spec.r,
        k=2,
        lambda_init=spec.lambda_init,
        alpha=(e1.inv(), e2 * e2 / e1),
        beta=tuple(beta),
    )


def power_spec_from_hyperquadratic(spec: HyperquadraticSpec) -> PowerRecurrenceSpec:
    """The same sequence seen as a gamma = r power recurrence (needs
    gcd(r, q-1) = 1, which always holds since r is a power of p)."""
    return PowerRecurrenceSpec(
        field=spec.field,
        ell=spec.ell,
        r=spec.r,
        k=spec.k,
        gamma=spec.r,
        u_init=spec.lambda_init,
        alpha=spec.alpha,
        beta=tuple(spec.beta for _ in range(spec.k)),
    )


def _run(ctx: FieldCtx, ell: int, r: int, k: int, init, alpha, power_table, beta_rows, n_terms):
    mul = ctx.mul_t
    out = [0] * n_terms
    for i in range(min(ell, n_terms)):
        out[i] = init[i]
    # out[idx - 1] holds term idx
    for idx in range(ell + 1, n_terms + 1):
        n, j = divmod(idx - ell - 1, r)
        if j == 0:
            out[idx - 1] = mul[alpha[n % k]][power_table[out[n]]]
        else:
            out[idx - 1] = beta_rows[n % k][j - 1]
    return out


def generate_codes(spec: AnySpec, n_terms: int) -> list[int]:
    """Terms 1..n_terms as field-element codes."""
    if n_terms < 1:
        raise SpecError(f"n_terms must be >= 1, got {n_terms}", field="terms")
    if isinstance(spec, CFSequenceSpec):
        spec = spec_from_cf_params(spec)
    ctx = spec.field
    init = [x.code for x in (spec.u_init if isinstance(spec, PowerRecurrenceSpec) else spec.lambda_init)]
    alpha = [a.code for a in spec.alpha]
    if isinstance(spec, PowerRecurrenceSpec):
        exponent = spec.gamma
        rows = [[b.code for b in row] for row in spec.beta]
    else:
        exponent = spec.r
        rows = [[b.code for b in spec.beta]] * spec.k
    table = [ctx.pow_code(c, exponent) for c in range(ctx.q)]
    return _run(ctx, spec.ell, spec.r, spec.k, init, alpha, table, rows, n_terms)


def generate(spec: AnySpec, n_terms: int) -> list[FieldElement]:
    ctx = spec.field
    return [FieldElement(ctx, c) for c in generate_codes(spec, n_terms)]


def generate_thm2(spec: HyperquadraticSpec, n_terms: int) -> list[FieldElement]:
    return generate(spec, n_terms)


def generate_thm4(spec: PowerRecurrenceSpec, n_terms: int) -> list[FieldElement]:
    return generate(spec, n_terms)


def index_class(ell: int, r: int, n: int) -> tuple[str, int, int]:
    """Which branch defines term n: ('init', n, 0), ('E', m, 0) for
    n = l+1+r*m, or ('F', m, j) for n = l+1+r*m+j with 1 <= j < r."""
    if n < 1:
        raise ValueError("indices start at 1")
    if n <= ell:
        return ("init", n, 0)
    m, j = divmod(n - ell - 1, r)
    return ("E", m, 0) if j == 0 else ("F", m, j)


def validate_spec(spec) -> AnySpec:
    """Return a normalized spec object; accepts spec objects or mappings in
    the spec-file format."""
    if isinstance(spec, (HyperquadraticSpec, CFSequenceSpec, PowerRecurrenceSpec)):
        # dataclasses validate on construction; rebuild to re-run the checks
        return type(spec)(**{f: getattr(spec, f) for f in spec.__dataclass_fields__})
    from .specfile import spec_from_dict

    return spec_from_dict(spec)


def field_of(spec: AnySpec) -> FieldCtx:
    return spec.field


def initial_terms(spec: AnySpec) -> Sequence[FieldElement]:
    return spec.u_init if isinstance(spec, PowerRecurrenceSpec) else spec.lambda_init


_INT64_SAFE = 1 << 62


class TermOracle:
    """Terms at arbitrary indices: a cached prefix, and beyond it the
    recursion followed down to the prefix (one step per base-r digit).

    ``oracle(n)`` is the n-th term as a FieldElement, ``oracle.code(n)`` its
    code.  Kernel exploration uses this to compare decimations on full
    windows no matter how deep they are.
    """

    def __init__(self, spec: AnySpec, cache: int = 1 << 16):
        if isinstance(spec, CFSequenceSpec):
            spec = spec_from_cf_params(spec)
        self.spec = spec
        self.field = spec.field
        self._prefix = generate_codes(spec, cache)
        ctx = spec.field
        if isinstance(spec, PowerRecurrenceSpec):
            exponent = spec.gamma
            self._rows = [[b.code for b in row] for row in spec.beta]
        else:
            exponent = spec.r
            self._rows = [[b.code for b in spec.beta]] * spec.k
        self._alpha = [a.code for a in spec.alpha]
        self._pow = [ctx.pow_code(c, exponent) for c in range(ctx.q)]
        self._tables = None

    def code(self, n: int) -> int:
        if n < 1:
            raise ValueError("indices start at 1")
        spec, prefix = self.spec, self._prefix
        ell, r, k = spec.ell, spec.r, spec.k
        chain = []
        while n > len(prefix):
            m, j = divmod(n - ell - 1, r)
            if j:
                value = self._rows[m % k][j - 1]
                break
            chain.append(self._alpha[m % k])
            n = m + 1
        else:
            value = prefix[n - 1]
        mul, pw = self.field.mul_t, self._pow
        for a in reversed(chain):
            value = mul[a][pw[value]]
        return value

    def codes(self, indices) -> np.ndarray:
        """Vectorised :meth:`code` over a sequence of indices.

        Indices past int64 are peeled as Python ints until they fit.
        """
        n = np.array(indices, dtype=object)
        if n.size and n.max() < _INT64_SAFE:
            n = n.astype(np.int64)
        if n.size and n.min() < 1:
            raise ValueError("indices start at 1")
        spec = self.spec
        ell, r, k = spec.ell, spec.r, spec.k
        if self._tables is None:
            self._tables = (
                np.asarray(self._prefix, dtype=np.int64),
                np.asarray(self._rows, dtype=np.int64).reshape(k, r - 1),
                np.asarray(self._alpha, dtype=np.int64),
                np.asarray(self.field.mul_t, dtype=np.int64),
                np.asarray(self._pow, dtype=np.int64),
            )
        prefix, rows, alpha, mul, pw = self._tables
        value = np.full(n.shape, -1, dtype=np.int64)
        steps = []  # per level: alpha code applied on the way back, or -1
        active = n > len(prefix)
        while active.any():
            if n.dtype == object and n.max() < _INT64_SAFE:
                n = n.astype(np.int64)
            shifted = n - (ell + 1)
            m, j = shifted // r, (shifted % r).astype(np.int64)
            m_mod = (m % k).astype(np.int64)
            hit = active & (j != 0)
            value[hit] = rows[m_mod[hit], j[hit] - 1]
            descend = active & (j == 0)
            step = np.full(n.shape, -1, dtype=np.int64)
            step[descend] = alpha[m_mod[descend]]
            steps.append(step)
            n[descend] = m[descend] + 1
            active = descend & (n > len(prefix))
        todo = value < 0
        value[todo] = prefix[n[todo].astype(np.int64) - 1]
        for step in reversed(steps):
            sel = step >= 0
            value[sel] = mul[step[sel], pw[value[sel]]]
        return value

    def __call__(self, n: int) -> FieldElement:
        return FieldElement(self.field, self.code(n))

