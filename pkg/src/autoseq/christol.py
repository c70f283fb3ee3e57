"""Generating functions of the recurrence families and their algebraic
certificates.

For a :class:`HyperquadraticSpec` the generating function
``theta = sum_{n>=1} lambda_n T^-n`` splits as ``theta = A + rho`` with
``rho = B + C rho^r`` for explicit rational A, B, C.  :func:`verify_hyperquadratic`
checks both identities coefficient by coefficient to a requested order.

For the characteristic-2, r = 2 continued-fraction family,
:func:`rationality_report` rewrites ``rho`` through ``sigma = C(V + rho)`` so
that ``sigma = U + sigma^2`` with a Laurent polynomial U; theta is rational
exactly when U vanishes, and otherwise ``sigma = sum U^(2^m)`` has widening
blocks of zeros (:func:`rationality_gap_witness`).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NoNonzeroU, PrecisionTooLow, WrongR
from .field import FieldElement
from .laurent import (
    LaurentSeries,
    Poly,
    RationalFunction,
    frobenius_power,
)
from .recurrences import (
    CFSequenceSpec,
    HyperquadraticSpec,
    generate_codes,
    spec_from_cf_params,
)


def theta_series(spec, order: int) -> LaurentSeries:
    """sum_{n=1}^{order} lambda_n T^-n, exact through T^-order."""
    if order < 1:
        raise PrecisionTooLow(f"order must be >= 1, got {order}")
    ctx = spec.field
    return LaurentSeries.from_code_sequence(ctx, generate_codes(spec, order), order)


def rho_series(spec: HyperquadraticSpec, order: int) -> LaurentSeries:
    """sum of lambda_n T^-n over the recursive positions n = l+1+r*m only."""
    ctx = spec.field
    lam = generate_codes(spec, order)
    terms = {-n: ctx.element(lam[n - 1]) for n in range(spec.ell + 1, order + 1, spec.r)}
    return LaurentSeries.from_terms(ctx, terms, prec=order + 1)


def _one_minus_inv_T_power(ctx, n: int) -> RationalFunction:
    """(1 - 1/T)^-n = T^n / (T - 1)^n for n a power of p."""
    t_minus_1 = Poly(ctx, [-1, 1])
    return RationalFunction(Poly.monomial(ctx, n), t_minus_1.frobenius(n))


def compute_ABC(spec: HyperquadraticSpec):
    """The rational functions A, B, C with theta = A + rho, rho = B + C rho^r."""
    if isinstance(spec, CFSequenceSpec):
        spec = spec_from_cf_params(spec)
    ctx = spec.field
    ell, r = spec.ell, spec.r
    lam = spec.lambda_init

    head = RationalFunction.laurent_poly(ctx, {-m: lam[m - 1] for m in range(1, ell + 1)})
    const_part = RationalFunction.laurent_poly(
        ctx, {-ell - 1 - j: spec.beta_at(j) for j in range(1, r)}
    )
    A = head + _one_minus_inv_T_power(ctx, r) * const_part

    shift = RationalFunction.monomial(ctx, r - ell - 1)
    head_r = RationalFunction.laurent_poly(
        ctx, {-r * m: spec.alpha_at(m) * lam[m - 1] ** r for m in range(1, ell + 1)}
    )
    tail_r = RationalFunction.laurent_poly(
        ctx,
        {-r * (ell + 1 + j): spec.alpha_at(ell + 1 + j) * spec.beta_at(j) ** r for j in range(1, r)},
    )
    B = shift * (head_r + _one_minus_inv_T_power(ctx, r * r) * tail_r)
    C = RationalFunction.monomial(ctx, r - ell - 1, spec.alpha_at(ell + 1))
    return A, B, C


def _monomial(f: RationalFunction):
    """(c, e) when f = c T^e, else None."""
    num, den = f.num, f.den
    if sum(1 for c in num.codes if c) != 1 or sum(1 for c in den.codes if c) != 1:
        return None
    return num.lead, num.degree - den.degree


def _times_rational(f: RationalFunction, s: LaurentSeries, order: int) -> LaurentSeries:
    mono = _monomial(f)
    if mono is not None:
        c, e = mono
        return s.shift(e).scale(c)
    margin = max(0, f.num.degree - f.den.degree)
    return f.to_series(order + margin) * s


@dataclass
class HyperquadraticCertificate:
    A: RationalFunction
    B: RationalFunction
    C: RationalFunction
    order_checked: int
    residual_theta: bool
    residual_rho: bool
    first_bad_exponent: int | None = None

    @property
    def ok(self) -> bool:
        return self.residual_theta and self.residual_rho

    def to_json(self) -> dict:
        return {
            "A": self.A.to_json(),
            "B": self.B.to_json(),
            "C": self.C.to_json(),
            "order_checked": self.order_checked,
            "residual_theta": self.residual_theta,
            "residual_rho": self.residual_rho,
        }


def verify_hyperquadratic(spec, order: int, abc=None) -> HyperquadraticCertificate:
    """Check theta = A + rho and rho = B + C rho^r through T^-order.

    ``rho`` is taken as theta - A; the first flag compares it with the sum of
    theta's terms over the recursive positions.  ``abc`` overrides the
    computed (A, B, C), e.g. to confirm that a perturbed triple fails.
    """
    if isinstance(spec, CFSequenceSpec):
        spec = spec_from_cf_params(spec)
    if order < spec.r * spec.ell:
        raise PrecisionTooLow(f"order {order} < r*ell = {spec.r * spec.ell}")
    A, B, C = abc if abc is not None else compute_ABC(spec)
    theta = theta_series(spec, order)
    rho = theta - A.to_series(order)
    residual_theta = (rho - rho_series(spec, order)).is_zero()

    rhs = B.to_series(order) + _times_rational(C, frobenius_power(rho, spec.r), order)
    diff = (rho - rhs).truncate(order)
    checked = int(min(order, diff.prec - 1))
    return HyperquadraticCertificate(
        A=A,
        B=B,
        C=C,
        order_checked=checked,
        residual_theta=residual_theta,
        residual_rho=diff.is_zero(),
        first_bad_exponent=diff.lead_exp,
    )


# ------------------------------------------------------- r = 2 dichotomy


@dataclass
class RationalityReport:
    spec: CFSequenceSpec
    u_coeffs: tuple[FieldElement, ...]
    rational: bool
    V: RationalFunction
    U: LaurentSeries
    sigma_partial_depth: int
    sigma: LaurentSeries
    u_formula_agrees: bool
    alpha_beta_identity: bool
    fixed_point_order: int
    sigma_fixed_point: bool
    provable_order: int
    theta_identity: bool
    matched_order: int
    extras: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "quadratic" if self.rational else "cubic"

    @property
    def ok(self) -> bool:
        return (
            self.u_formula_agrees
            and self.alpha_beta_identity
            and self.sigma_fixed_point
            and self.theta_identity
        )

    def to_json(self) -> dict:
        return {
            "u_coeffs": [str(u) for u in self.u_coeffs],
            "rational": self.rational,
            "verdict": self.verdict,
            "V": self.V.to_json(),
            "U": self.U.to_json(),
            "sigma_partial_depth": self.sigma_partial_depth,
            "u_formula_agrees": self.u_formula_agrees,
            "alpha_beta_identity": self.alpha_beta_identity,
            "sigma_fixed_point": self.sigma_fixed_point,
            "fixed_point_order": self.fixed_point_order,
            "theta_identity": self.theta_identity,
            "provable_order": self.provable_order,
            "matched_order": self.matched_order,
        }


def sigma_partial(U: LaurentSeries, depth: int) -> LaurentSeries:
    """sum_{m=0}^{depth} U^(2^m)."""
    total = LaurentSeries.zero(U.ctx)
    for m in range(depth + 1):
        total = total + frobenius_power(U, 2**m)
    return total


def rationality_report(spec: CFSequenceSpec, sigma_depth: int = 6, order: int = 1024) -> RationalityReport:
    if spec.r != 2:
        raise WrongR(f"the rationality criterion needs r = 2, got r = {spec.r}", field="r")
    ctx = spec.field
    ell = spec.ell
    h = spec_from_cf_params(spec)
    A, B, C = compute_ABC(h)
    a_next = h.alpha_at(ell + 1)
    lam = spec.lambda_init

    u = tuple(a_next * h.alpha_at(m) * lam[m - 1] ** 2 + 1 for m in range(1, ell + 1))
    rational = all(not x for x in u)
    U_rf = RationalFunction.laurent_poly(ctx, {2 - 2 * ell - 2 * m: u[m - 1] for m in range(1, ell + 1)})

    tp1 = Poly(ctx, [1, 1])
    V = RationalFunction.monomial(ctx, 1 - ell, a_next.inv()) / RationalFunction(tp1 * tp1)
    CV = C * V
    u_formula_agrees = (CV + C * B + CV * CV) == U_rf
    alpha_beta_identity = a_next * h.alpha_at(ell + 2) * h.beta_at(1) ** 2 == ctx.one

    U = LaurentSeries.from_terms(ctx, {2 - 2 * ell - 2 * m: u[m - 1] for m in range(1, ell + 1)})
    sigma = sigma_partial(U, sigma_depth)
    if U.is_zero():
        fixed_order = provable = order
    else:
        block = 2 ** (sigma_depth + 1) * (-U.lead_exp)
        fixed_order = min(order, block - 1)
        provable = min(order, block - ell)

    resid = sigma - U - frobenius_power(sigma, 2)
    sigma_ok = resid.truncate(fixed_order).is_zero()

    theta = theta_series(spec, order)
    inv_c_sigma = sigma.shift(ell - 1).scale(a_next.inv())
    d = theta - A.to_series(order) - V.to_series(order) - inv_c_sigma
    theta_ok = d.truncate(provable).is_zero()
    matched = order if d.is_zero() else -d.lead_exp - 1

    return RationalityReport(
        spec=spec,
        u_coeffs=u,
        rational=rational,
        V=V,
        U=U,
        sigma_partial_depth=sigma_depth,
        sigma=sigma,
        u_formula_agrees=u_formula_agrees,
        alpha_beta_identity=alpha_beta_identity,
        fixed_point_order=fixed_order,
        sigma_fixed_point=sigma_ok,
        provable_order=provable,
        theta_identity=theta_ok,
        matched_order=matched,
    )


prop3_report = rationality_report


@dataclass
class GapWitness:
    ok: bool
    gaps_checked: int
    gap_lengths: list[int]

    @property
    def vacuous(self) -> bool:
        return self.gaps_checked == 0

    def __bool__(self):
        return self.ok


def rationality_gap_witness(report: RationalityReport, order: int) -> GapWitness:
    """Check the zero blocks of sigma = sum U^(2^m) through T^-order.

    Block m (the support of U^(2^m)) spans [2^m lo, 2^m hi]; between block m
    and block m+1 every coefficient must vanish, the blocks' extreme
    coefficients must not, and the gap lengths must grow.  Only gaps whose
    following block lies inside the order are examined.
    """
    if report.rational:
        raise NoNonzeroU("all u_m vanish; sigma is zero and has no gaps")
    U = report.U
    hi, lo = U.lead_exp, U.low_exp
    ell = report.spec.ell
    n_blocks = 0
    while 2**n_blocks * hi >= -order:
        n_blocks += 1
    sigma = sigma_partial(U, max(n_blocks - 1, 0)).truncate(order)

    lengths = []
    ok = True
    m = 0
    while 2 ** (m + 1) * (4 * ell - 2) <= order:
        upper = 2**m * lo  # lowest exponent of block m
        lower = 2 ** (m + 1) * hi  # highest exponent of block m+1
        if not (sigma.coeff_code(upper) and sigma.coeff_code(lower)):
            ok = False
        if upper - 1 >= lower + 1 and any(sigma.window(upper - 1, lower + 1)):
            ok = False
        length = upper - lower
        if lengths and length <= lengths[-1]:
            ok = False
        lengths.append(length)
        m += 1
    return GapWitness(ok=ok, gaps_checked=len(lengths), gap_lengths=lengths)
