"""End-to-end acceptance checks.  Each test prints one PASS/FAIL line."""

import random
import time

import pytest

from autoseq.automata import (
    decimation,
    detect_shift_relation,
    kernel_explore,
    periodic_within,
    run_dfao,
    synthesize_dfao,
)
from autoseq.christol import rationality_gap_witness, rationality_report, verify_hyperquadratic
from autoseq.contfrac import (
    ContinuedFraction,
    cf_expand,
    cf_to_series,
    detect_ultimate_periodicity,
    omega_series,
    quadratic_form_check,
)
from autoseq.field import make_field
from autoseq.laurent import LaurentSeries, Poly
from autoseq.recurrences import TermOracle, generate, generate_codes, spec_from_cf_params
from autoseq.sampling import (
    hyperquadratic_sweep,
    irrational_cf_spec,
    random_cf_spec,
    random_power_spec,
    rational_cf_spec,
)

from conftest import DEFAULT_SEED
from oracles import unroll_cf_family

PINNED_SEED = DEFAULT_SEED
# p-kernel class counts of hyperquadratic_sweep(2024, 100) at horizon 4096
PINNED_CLASS_COUNTS = [
    7, 14, 20, 11, 20, 9, 27, 3, 11, 19, 3, 6, 5, 103, 2, 13, 8, 9, 43, 23,
    170, 1, 14, 18, 11, 29, 9, 17, 5, 15, 16, 9, 43, 10, 11, 3, 12, 8, 10, 13,
    35, 15, 4, 19, 9, 4, 43, 5, 25, 3, 8, 15, 2, 13, 7, 16, 5, 15, 15, 4,
    6, 7, 33, 7, 8, 17, 9, 11, 35, 25, 2, 6, 19, 3, 9, 35, 25, 6, 8, 19,
    11, 45, 6, 170, 1, 15, 10, 4, 13, 5, 32, 4, 4, 19, 6, 6, 9, 99, 1, 11,
]


@pytest.fixture
def verdict(capsys):
    def report(number: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\ncriterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail

    return report


@pytest.fixture(scope="module")
def sweep(seed):
    return seed, hyperquadratic_sweep(seed, 100)


def char2_specs(seed):
    rng = random.Random(seed)
    fields = [make_field(2, 2), make_field(2, 3)]
    rational = [rational_cf_spec(rng, fields[i % 2]) for i in range(20)]
    irrational = [irrational_cf_spec(rng, fields[i % 2]) for i in range(20)]
    return rational, irrational


def test_criterion_1_hyperquadratic_certificate(verdict, sweep):
    _, specs = sweep
    qs = {s.field.q for s in specs}
    start = time.perf_counter()
    bad = [i for i, s in enumerate(specs) if not verify_hyperquadratic(s, 1000).ok]
    elapsed = time.perf_counter() - start
    ok = not bad and qs == {2, 4, 8, 3, 9, 5, 25} and elapsed < 60
    verdict(1, ok, f"{len(specs)} specs, q in {sorted(qs)}, failures {bad}, {elapsed:.1f} s")


def test_criterion_2_cf_family_equivalence(verdict, seed):
    rng = random.Random(seed)
    fields = [make_field(2, s) for s in (1, 2, 3)]
    bad = []
    for i in range(50):
        spec = random_cf_spec(rng, fields[i % 3])
        mapped = generate(spec_from_cf_params(spec), 1000)
        want = unroll_cf_family(spec.ell, spec.r, spec.lambda_init, spec.eps1, spec.eps2, 1000)
        if mapped != want:
            bad.append(i)
    verdict(2, not bad, f"50 specs over F_2, F_4, F_8, mismatches {bad}")


def test_criterion_3_kernel_and_dfao(verdict, sweep):
    seed, specs = sweep
    H = 4096
    counts, problems = [], []
    for i, spec in enumerate(specs):
        oracle = TermOracle(spec)
        k = kernel_explore(oracle, spec.field.p, H)
        counts.append(k.class_count)
        if not k.closed:
            problems.append(f"{i}: not closed")
            continue
        d = synthesize_dfao(k)
        want = generate_codes(spec, H)
        if any(run_dfao(d, n).code != want[n - 1] for n in range(1, H + 1)):
            problems.append(f"{i}: DFAO mismatch")
    if seed == PINNED_SEED and counts != PINNED_CLASS_COUNTS:
        problems.append("class counts differ from the pinned values")
    pinned = "pinned" if seed == PINNED_SEED else "not pinned for this seed"
    verdict(3, not problems, f"{len(specs)} kernels at horizon {H}, counts {pinned}, problems {problems}")


def test_criterion_4_rationality_dichotomy(verdict, seed):
    rational, irrational = char2_specs(seed)
    problems = []
    for i, spec in enumerate(rational):
        lam = generate(spec, 4096)
        found = detect_ultimate_periodicity(lam, 1024, 1024)
        rep = rationality_report(spec, order=2048)
        if found is None or found[0] != 0 or found[1] > 2 or not rep.rational:
            problems.append(f"rational {i}: period {found}, u {rep.u_coeffs}")
    for i, spec in enumerate(irrational):
        lam = generate(spec, 4096)
        found = detect_ultimate_periodicity(lam, 1024, 1024)
        rep = rationality_report(spec, order=2048)
        gaps = rationality_gap_witness(rep, 2048)
        if found is not None or rep.rational or not gaps.ok or gaps.vacuous:
            problems.append(f"irrational {i}: period {found}, gaps {gaps.gap_lengths}")
    verdict(4, not problems, f"20 + 20 specs over F_4, F_8, problems {problems}")


def test_criterion_5_sigma_fixed_point(verdict, seed):
    rational, irrational = char2_specs(seed)
    bad = []
    for i, spec in enumerate(rational + irrational):
        rep = rationality_report(spec, sigma_depth=6, order=2048)
        if not (rep.sigma_fixed_point and rep.theta_identity):
            bad.append(i)
    verdict(5, not bad, f"40 specs, M = 6, failures {bad}")


def test_criterion_6_cf_round_trip(verdict, seed):
    rng = random.Random(seed)
    fields = [make_field(2), make_field(2, 2), make_field(5)]
    bad = []
    for t in range(50):
        ctx = fields[t % 3]
        quotients = []
        for i in range(50):
            deg = rng.randint(0 if i == 0 else 1, 2)
            codes = [rng.randrange(ctx.q) for _ in range(deg)] + [rng.randrange(1, ctx.q)]
            quotients.append(Poly(ctx, [ctx.element(c) for c in codes]))
        order = 2 * sum(a.degree for a in quotients) + 8
        back = cf_expand(cf_to_series(ContinuedFraction(tuple(quotients)), order), 50)
        if back.quotients != tuple(quotients):
            bad.append(t)
    verdict(6, not bad, f"50 continued fractions of 50 quotients, failures {bad}")


def test_criterion_7_golden_analogue(verdict, seed):
    F2 = make_field(2)
    x = omega_series(F2, 512)
    T = LaurentSeries.monomial(F2, 1)
    equation = (x * x + T * x + 1).truncate(511).is_zero()
    quotients = cf_expand(x, 40).quotients
    all_T = len(quotients) == 40 and all(a == Poly.T(F2) for a in quotients)
    rng = random.Random(seed)
    fields = [make_field(2), make_field(2, 2), make_field(2, 3)]
    checks = [quadratic_form_check(rational_cf_spec(rng, fields[i % 3]), 128) for i in range(10)]
    ok = equation and all_T and all(checks)
    verdict(7, ok, f"equation {equation}, 40 quotients T {all_T}, quadratic form {sum(checks)}/10")


# (q as (p, s), gamma); the first two cases are required
POWER_CASES = [((5, 1), 3), ((7, 1), 5), ((5, 1), 7), ((7, 1), 11), ((3, 1), 5),
               ((11, 1), 3), ((13, 1), 5), ((2, 2), 5), ((2, 3), 3), ((3, 2), 5)]


def test_criterion_8_shift_relation(verdict, seed):
    rng = random.Random(seed)
    H = 4096
    problems = []
    for idx, (ps, gamma) in enumerate(POWER_CASES):
        spec = random_power_spec(rng, make_field(*ps), gamma=gamma)
        r = spec.r
        a, b = divmod(spec.ell + 1, r)
        c, d = divmod(a + b - 1, r)
        alpha_b = spec.alpha_at(b)
        u = generate(spec, r * r * H * 2)
        ub = decimation(u, r, b)
        rels = [t for t in detect_shift_relation(ub, r, max(c, 2) + 2) if t.i == d and t.m == c]
        if not rels or any(y != alpha_b * x**gamma for x, y in rels[0].sigma.items()):
            problems.append(f"{idx}: relation (i={d}, m={c}) not found on u_{b}")
        others = [j for j in range(r) if j != b and periodic_within(decimation(u, r, j)) is None]
        if others:
            problems.append(f"{idx}: u_j not periodic for j in {others}")
        if not kernel_explore(TermOracle(spec), r, H).closed:
            problems.append(f"{idx}: kernel not closed")
    verdict(8, not problems, f"{len(POWER_CASES)} power recurrences, problems {problems}")
