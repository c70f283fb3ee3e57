"""Independent reference implementations used to cross-check the package.

Nothing here goes through the package's lookup tables or its single-pass
generator: field products use sympy's GF(p)[X] routines, and the
recurrences are unrolled straight from their defining formulas.
"""

from __future__ import annotations

from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_mul, gf_rem


def gf_product_coeffs(ctx, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """(a * b) mod modulus in F_p[X]; ascending coordinate tuples of length s."""
    p = ctx.p
    hi = lambda c: [ZZ(x) for x in reversed(c)]
    prod = gf_rem(gf_mul(hi(a), hi(b), p, ZZ), hi(ctx.modulus), p, ZZ)
    out = [int(x) for x in reversed(prod)]
    return tuple(out + [0] * (ctx.s - len(out)))


def unroll_cf_family(ell, r, lam_init, e1, e2, n_terms):
    """lambda_{l+rm+1} = (e2/e1) e2^((-1)^(m+1)) lambda_{m+1}^r,
    lambda_{l+rm+i} = (e1/e2)^((-1)^i) for 2 <= i <= r."""
    lam = {m + 1: x for m, x in enumerate(lam_init)}
    m = 0
    while ell + r * m + 1 <= n_terms:
        sign = 1 if (m + 1) % 2 == 0 else -1
        lam[ell + r * m + 1] = (e2 / e1) * e2**sign * lam[m + 1] ** r
        for i in range(2, r + 1):
            lam[ell + r * m + i] = (e1 / e2) ** (1 if i % 2 == 0 else -1)
        m += 1
    return [lam[n] for n in range(1, n_terms + 1)]


def unroll_power_family(ell, r, k, gamma, u_init, alpha, beta_rows, n_terms):
    """u(l+1+r(km+i)) = alpha_{i+1} u(km+i+1)^gamma,
    u(l+1+r(km+i)+j) = beta_{i,j}; beta_rows[i][j-1] = beta_{i,j}."""
    u = {n + 1: x for n, x in enumerate(u_init)}
    m = 0
    while ell + 1 + r * k * m <= n_terms:
        for i in range(k):
            base = ell + 1 + r * (k * m + i)
            u[base] = alpha[i] * u[k * m + i + 1] ** gamma
            for j in range(1, r):
                u[base + j] = beta_rows[i][j - 1]
        m += 1
    return [u[n] for n in range(1, n_terms + 1)]


def unroll_hyperquadratic(spec, n_terms):
    return unroll_power_family(
        spec.ell, spec.r, spec.k, spec.r, spec.lambda_init, spec.alpha, [spec.beta] * spec.k, n_terms
    )


def naive_series_mul(a: dict, b: dict) -> dict:
    """Exponent -> FieldElement dicts, full product."""
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            out[e1 + e2] = out.get(e1 + e2, c1 * 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def omega_digits(order: int) -> dict:
    """Over F_2, X = T + sum c_n T^-n with X^2 + T X + 1 = 0, solved one
    coefficient at a time: c_n cancels the T^(1-n) coefficient of the
    residual of the partial sum."""
    coeffs = {1: 1}
    for n in range(1, order + 1):
        x = coeffs
        sq = {2 * e: 1 for e in x}  # char 2
        tx = {e + 1: 1 for e in x}
        resid = {}
        for part in (sq, tx, {0: 1}):
            for e, c in part.items():
                resid[e] = resid.get(e, 0) ^ c
        if resid.get(1 - n, 0):
            coeffs = dict(coeffs)
            coeffs[-n] = 1
    return coeffs


def brute_kernel(v, r, depth, window):
    """Distinct windows of n -> v(r^a n + b) for a <= depth."""
    seen = set()
    for a in range(depth + 1):
        for b in range(r**a):
            seen.add(tuple(v(r**a * n + b) for n in range(1, window + 1)))
    return seen


def cf_value(quotients):
    """a_1 + 1/(a_2 + 1/(... + 1/a_N)) by nested rational arithmetic."""
    from autoseq.laurent import RationalFunction

    value = RationalFunction(quotients[-1])
    for a in reversed(quotients[:-1]):
        value = RationalFunction(a) + value.inverse()
    return value
