"""Seeded random specs for sweeps and tests."""

from __future__ import annotations

import random
from math import gcd

from .field import FieldCtx, make_field
from .recurrences import CFSequenceSpec, HyperquadraticSpec, PowerRecurrenceSpec

# (p, s) pairs covering q in {2, 4, 8, 3, 9, 5, 25}
SWEEP_FIELDS = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (5, 2)]


def _any(rng: random.Random, ctx: FieldCtx):
    return ctx.element(rng.randrange(ctx.q))


def _nonzero(rng: random.Random, ctx: FieldCtx):
    return ctx.element(rng.randrange(1, ctx.q))


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def random_hyperquadratic_spec(
    rng: random.Random, ctx: FieldCtx, ell: int | None = None, r: int | None = None, k: int | None = None
) -> HyperquadraticSpec:
    ell = ell if ell is not None else rng.randint(1, 4)
    r = r if r is not None else rng.choice([ctx.p, ctx.p**2])
    k = k if k is not None else rng.choice(_divisors(r))
    return HyperquadraticSpec(
        field=ctx,
        ell=ell,
        r=r,
        k=k,
        lambda_init=[_any(rng, ctx) for _ in range(ell)],
        alpha=[_nonzero(rng, ctx) for _ in range(k)],
        beta=[_any(rng, ctx) for _ in range(r - 1)],
    )


def hyperquadratic_sweep(seed: int, count: int) -> list[HyperquadraticSpec]:
    """``count`` specs cycling through the sweep fields."""
    rng = random.Random(seed)
    return [
        random_hyperquadratic_spec(rng, make_field(*SWEEP_FIELDS[i % len(SWEEP_FIELDS)]))
        for i in range(count)
    ]


def random_cf_spec(rng: random.Random, ctx: FieldCtx, ell: int | None = None, r: int | None = None) -> CFSequenceSpec:
    ell = ell if ell is not None else rng.randint(1, 4)
    r = r if r is not None else rng.choice([2, 4])
    return CFSequenceSpec(
        field=ctx,
        ell=ell,
        r=r,
        lambda_init=[_nonzero(rng, ctx) for _ in range(ell)],
        eps1=_nonzero(rng, ctx),
        eps2=_nonzero(rng, ctx),
    )


def rational_cf_spec(rng: random.Random, ctx: FieldCtx, ell: int | None = None) -> CFSequenceSpec:
    """An r = 2 spec with every u_m = 0, i.e. lambda_m^2 = eps1^2 / eps2^2
    for m odd and lambda_m^2 = eps1^2 for m even (alpha_{l+1} alpha_m lambda_m^2 = 1)."""
    ell = ell if ell is not None else rng.randint(1, 4)
    e1, e2 = _nonzero(rng, ctx), _nonzero(rng, ctx)
    alpha = (e1.inv(), e2 * e2 / e1)  # alpha_1, alpha_2 of the k = 2 rewrite
    a_next = alpha[ell % 2]  # alpha_{l+1}
    lam = []
    for m in range(1, ell + 1):
        target = (a_next * alpha[(m - 1) % 2]).inv()  # lambda_m^2
        lam.append(target ** (ctx.q // 2))  # the unique square root
    return CFSequenceSpec(field=ctx, ell=ell, r=2, lambda_init=lam, eps1=e1, eps2=e2)


def irrational_cf_spec(rng: random.Random, ctx: FieldCtx, ell: int | None = None) -> CFSequenceSpec:
    """An r = 2 spec with some u_m != 0 (needs q >= 4 so that a nonzero
    lambda_m can miss the square root)."""
    if ctx.q < 4:
        raise ValueError("needs q >= 4")
    base = rational_cf_spec(rng, ctx, ell)
    lam = list(base.lambda_init)
    m = rng.randrange(len(lam))
    lam[m] = rng.choice([x for x in ctx.nonzero() if x != lam[m]])
    return CFSequenceSpec(
        field=ctx, ell=base.ell, r=2, lambda_init=lam, eps1=base.eps1, eps2=base.eps2
    )


def random_power_spec(
    rng: random.Random, ctx: FieldCtx, gamma: int | None = None, ell: int | None = None, r: int | None = None
) -> PowerRecurrenceSpec:
    if gamma is None:
        gamma = rng.choice([g for g in range(2, 3 * ctx.q) if gcd(g, ctx.q - 1) == 1])
    ell = ell if ell is not None else rng.randint(1, 4)
    r = r if r is not None else rng.randint(2, 4)
    k = rng.choice(_divisors(r))
    return PowerRecurrenceSpec(
        field=ctx,
        ell=ell,
        r=r,
        k=k,
        gamma=gamma,
        u_init=[_any(rng, ctx) for _ in range(ell)],
        alpha=[_nonzero(rng, ctx) for _ in range(k)],
        beta=[[_any(rng, ctx) for _ in range(r - 1)] for _ in range(k)],
    )
