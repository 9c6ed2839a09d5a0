"""Acceptance criteria for the toolkit, runnable from pytest or the CLI
``selftest`` subcommand.  Each criterion function returns a
CriterionResult; ``run`` executes a selection and prints one line per
criterion.

Oracle values used here were computed independently (high-precision
Hurwitz-zeta evaluations for the sum-of-two-squares identity; smoothed
ideal-count Dirichlet sums for the period identity) and are documented
next to their use.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from importlib import resources

import numpy as np

from . import bounds, epstein, lattice, periods, sampling, scan
from .epstein import EvalConfig
from .number_field import (NumberFieldData, kronecker_symbol, load_field,
                           quadratic_field)

# E(Z^2, s) = 2 zeta(s/2) beta(s/2); values from 25-digit Hurwitz-zeta
# evaluations of both Dirichlet series
TWO_SQUARES_ORACLE = {
    3.0: 4.5168108415504751529,
    4.0: 3.0134060198459700618,
    5.0: 2.5451291168327414728,
}

PROPOSITION_DISCS = (-4, -7, -23, -163, 5, 13, 29)

CUBIC_FIXTURE_RESOURCE = "data/cubic_disc_m23.json"


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float


def cubic_fixture_text() -> str:
    return (resources.files("toralzeta") / CUBIC_FIXTURE_RESOURCE).read_text()


def _cubic_field() -> NumberFieldData:
    import json
    return load_field(json.loads(cubic_fixture_text()))


def proposition_fields():
    fields = [(str(D), quadratic_field(D)) for D in PROPOSITION_DISCS]
    fields.append(("cubic-23", _cubic_field()))
    return fields


# --------------------------------------------------------------------------

def criterion_1_functional_equation() -> CriterionResult:
    """Max |E*(g, n-s) - E*(t(g)^-1, s)| over 50 covolume-1 bases per
    n in {2,3}, s in {0.3n, 0.5n, 0.7n}; must be <= 1e-8 within 60 s."""
    t0 = time.time()
    rng = sampling.rng_from_seed(101)
    config = EvalConfig(tolerance=1e-10)
    worst = 0.0
    for n in (2, 3):
        for _ in range(50):
            g = sampling.random_unimodular_basis(n, rng)
            for frac in (0.3, 0.5, 0.7):
                res = epstein.functional_equation_residual(g, frac * n, config)
                worst = max(worst, res)
    elapsed = time.time() - t0
    passed = worst <= 1e-8 and elapsed <= 60.0
    return CriterionResult(1, "functional-equation", passed,
                           f"max residual {worst:.3e} (tol 1e-8), {elapsed:.1f}s (cap 60s)",
                           elapsed)


def criterion_2_overlap() -> CriterionResult:
    """Completed vs direct evaluator agreement: relative difference
    <= 1e-9 at s in {n+0.5, n+1} on 20 random bases per n in {2,3}."""
    t0 = time.time()
    rng = sampling.rng_from_seed(202)
    config = EvalConfig(tolerance=1e-10)
    worst = 0.0
    for n in (2, 3):
        for _ in range(20):
            g = sampling.random_basis(n, rng)
            for s in (n + 0.5, n + 1.0):
                a = epstein.epstein_completed(g, s, config).value
                b = epstein.completed_from_direct(g, s, config).value
                worst = max(worst, abs(a - b) / abs(b))
    elapsed = time.time() - t0
    passed = worst <= 1e-9
    return CriterionResult(2, "overlap-consistency", passed,
                           f"max relative {worst:.3e} (tol 1e-9), {elapsed:.1f}s",
                           elapsed)


def criterion_3_residue() -> CriterionResult:
    """Richardson-extrapolated (s-n) E(g,s) within 1e-4 of
    pi^(n/2)/Gamma(n/2) across 5 bases per n in {2,3}."""
    t0 = time.time()
    rng = sampling.rng_from_seed(303)
    worst = 0.0
    for n in (2, 3):
        for _ in range(5):
            g = sampling.random_basis(n, rng)
            worst = max(worst, epstein.residue_check(g))
    elapsed = time.time() - t0
    passed = worst <= 1e-4
    return CriterionResult(3, "residue", passed,
                           f"max deviation {worst:.3e} (tol 1e-4), {elapsed:.1f}s",
                           elapsed)


def criterion_4_two_squares_oracle() -> CriterionResult:
    """E(Z^2, s) matches 2 zeta(s/2) beta(s/2) to 1e-9 relative."""
    t0 = time.time()
    config = EvalConfig(tolerance=5e-9)
    worst = 0.0
    for s, ref in TWO_SQUARES_ORACLE.items():
        got = epstein.epstein_direct(np.eye(2), s, config).value
        worst = max(worst, abs(got - ref) / ref)
    elapsed = time.time() - t0
    passed = worst <= 1e-9
    return CriterionResult(4, "two-squares-oracle", passed,
                           f"max relative {worst:.3e} (tol 1e-9), {elapsed:.1f}s",
                           elapsed)


def ideal_count_sieve(D: int, N: int) -> np.ndarray:
    """a_k = #ideals of norm k for the quadratic field of discriminant D,
    via the divisor sum of the quadratic character (sieve to norm N)."""
    a = np.zeros(N + 1, dtype=np.int64)
    for d in range(1, N + 1):
        c = kronecker_symbol(D, d)
        if c:
            a[d::d] += c
    return a


def smoothed_ideal_zeta(field: NumberFieldData, s: float, N: int = 10**6) -> float:
    """Partial-zeta value at s in (1/2, 1) from ideal counts up to norm N.

    Gaussian-smoothed Dirichlet sum sum a_k k^-s exp(-(k/X)^2) minus the
    pole contribution (kappa/2) Gamma((1-s)/2) X^(1-s), X = N/7, where
    kappa = 2^r1 (2 pi)^r2 R / (w sqrt|D|) is the per-class ideal density.
    Remaining error is ~ |zeta_class(s-2)| / X^2, far below 1e-8 here.
    """
    kappa = (2.0 ** field.r1 * (2 * math.pi) ** field.r2 * field.R
             / (field.w * math.sqrt(abs(field.D))))
    a = ideal_count_sieve(field.D, N)
    X = N / 7.0
    k = np.arange(1, N + 1, dtype=float)
    smoothed = float(np.sum(a[1:] * k ** (-s) * np.exp(-((k / X) ** 2))))
    return smoothed - 0.5 * kappa * math.gamma((1.0 - s) / 2.0) * X ** (1.0 - s)


def criterion_5_period_identity() -> CriterionResult:
    """Quadrature period vs (w / 2^r1 n R) * completed ideal-sum partial
    zeta at s = 0.7 for Q(i) and Q(sqrt 5), 1e-6 relative, within 120 s."""
    t0 = time.time()
    s = 0.7
    worst = 0.0
    for D in (-4, 5):
        field = quadratic_field(D)
        z = periods.hecke_period(field, 0, s).value
        zeta_val = smoothed_ideal_zeta(field, s, N=10**6)
        zeta_star = periods.gamma_completion_factor(field, s) * zeta_val
        predicted = field.w / (2.0 ** field.r1 * field.n * field.R) * zeta_star
        worst = max(worst, abs(z - predicted) / abs(predicted))
    elapsed = time.time() - t0
    passed = worst <= 1e-6 and elapsed <= 120.0
    return CriterionResult(5, "hecke-period-identity", passed,
                           f"max relative {worst:.3e} (tol 1e-6), {elapsed:.1f}s (cap 120s)",
                           elapsed)


def criterion_6_hecke_trick() -> CriterionResult:
    """Closed-form toral integral: <= 1e-6 for signature (2,0) at
    v = (1,1), (1, sqrt2), s in {0.5, 0.7}; <= 1e-10 for (0,1)."""
    t0 = time.time()
    worst_real = 0.0
    for v in ([1.0, 1.0], [1.0, math.sqrt(2.0)]):
        for s in (0.5, 0.7):
            worst_real = max(worst_real, periods.hecke_trick_check((2, 0), v, s))
    worst_cplx = 0.0
    for s in (0.5, 0.7):
        worst_cplx = max(worst_cplx, periods.hecke_trick_check((0, 1), [1.0, 1.0], s))
    elapsed = time.time() - t0
    passed = worst_real <= 1e-6 and worst_cplx <= 1e-10
    return CriterionResult(6, "hecke-trick", passed,
                           f"(2,0) {worst_real:.3e} (tol 1e-6), (0,1) {worst_cplx:.3e} (tol 1e-10)",
                           elapsed)


def criterion_7_uniform_cusp_bound() -> CriterionResult:
    """E*(g, ns) >= A0 lambda1^(-ns) - B0 on 100 random bases per
    (n, s) in {2,3} x {1/n, 0.6, 0.75, 0.9}; zero violations."""
    t0 = time.time()
    rng = sampling.rng_from_seed(707)
    config = EvalConfig(tolerance=1e-9)
    violations = 0
    worst_margin = math.inf
    for n in (2, 3):
        for s in (1.0 / n, 0.6, 0.75, 0.9):
            a0, b0 = bounds.constants_A0_B0(n, s)
            for _ in range(100):
                g = sampling.random_basis(n, rng)
                lam = lattice.lambda1(g)
                val = epstein.epstein_completed(g, n * s, config).value
                margin = val - (a0 * lam ** (-n * s) - b0)
                worst_margin = min(worst_margin, margin)
                if margin < -1e-9:
                    violations += 1
    elapsed = time.time() - t0
    passed = violations == 0
    return CriterionResult(7, "uniform-cusp-bound", passed,
                           f"{violations} violations, smallest margin {worst_margin:.3e}, {elapsed:.1f}s",
                           elapsed)


def criterion_8_proposition() -> CriterionResult:
    """Z(O_E) >= (A1 |D|^(s/2) - B0 R)/R at s in {1/2, 0.7} on the
    quadratic test fields and the cubic fixture; zero violations."""
    t0 = time.time()
    violations = []
    worst_margin = math.inf
    for name, field in proposition_fields():
        for s in (0.5, 0.7):
            z = periods.hecke_period(field, 0, s).value
            lo = bounds.trivial_class_lower_bound(field, s)
            margin = z - lo
            worst_margin = min(worst_margin, margin)
            if margin < -1e-9:
                violations.append((name, s))
    elapsed = time.time() - t0
    passed = not violations
    return CriterionResult(8, "trivial-class-proposition", passed,
                           f"violations {violations}, smallest margin {worst_margin:.3e}, {elapsed:.1f}s",
                           elapsed)


def criterion_9_minkowski_height_gap() -> CriterionResult:
    """Minkowski's second theorem and the height gap on every test
    field's unit-log lattice; zero violations."""
    t0 = time.time()
    failures = []
    for name, field in proposition_fields():
        if field.r1 + field.r2 < 2:
            continue
        mk, lhs, rhs_euc, _ = bounds.minkowski_unit_lattice_check(field)
        hg, min_norm, gap = bounds.height_gap_check(field)
        if not mk:
            failures.append((name, "minkowski", lhs, rhs_euc))
        if not hg:
            failures.append((name, "height-gap", min_norm, gap))
    elapsed = time.time() - t0
    passed = not failures
    return CriterionResult(9, "minkowski-and-height-gap", passed,
                           f"failures {failures}", elapsed)


def criterion_10_nonvanishing_pipeline() -> CriterionResult:
    """D = -23 at s = 1/2: observed count >= counting bound, DFT
    inversion residual <= 1e-9, character orthogonality <= 1e-12."""
    t0 = time.time()
    field = quadratic_field(-23)
    pr = periods.class_group_dft(field, 0.5)
    table = periods.CharacterTable(field.cyclic_orders)
    nv = periods.nonvanishing_count_bound(
        pr.class_values.astype(complex), table)
    inv_res = periods.dft_inversion_residual(field, pr)
    orth = periods.character_orthogonality_residual(table)
    ok = (nv.count + 1e-9 >= nv.bound) and inv_res <= 1e-9 and orth <= 1e-12
    elapsed = time.time() - t0
    return CriterionResult(10, "nonvanishing-pipeline", ok,
                           f"count {nv.count} >= bound {nv.bound:.4f}; inversion {inv_res:.2e} "
                           f"(tol 1e-9); orthogonality {orth:.2e} (tol 1e-12)",
                           elapsed)


def criterion_11_scan_determinism() -> CriterionResult:
    """scan -3..-200 twice produces byte-identical CSV within 10 min."""
    t0 = time.time()
    first = scan.scan_csv(-3, -200, 0.5)
    second = scan.scan_csv(-3, -200, 0.5)
    elapsed = time.time() - t0
    rows = first.count("\n") - 1
    passed = (first == second) and elapsed <= 600.0
    return CriterionResult(11, "scan-determinism", passed,
                           f"byte-identical: {first == second}, {rows} rows, {elapsed:.1f}s (cap 600s)",
                           elapsed)


ALL_CRITERIA = (
    criterion_1_functional_equation,
    criterion_2_overlap,
    criterion_3_residue,
    criterion_4_two_squares_oracle,
    criterion_5_period_identity,
    criterion_6_hecke_trick,
    criterion_7_uniform_cusp_bound,
    criterion_8_proposition,
    criterion_9_minkowski_height_gap,
    criterion_10_nonvanishing_pipeline,
    criterion_11_scan_determinism,
)


def run(only=None, stream=None) -> int:
    """Run the acceptance criteria, print one pass/fail line each, and
    return 0 iff everything passed."""
    import sys
    out = stream or sys.stdout
    failures = 0
    for number, func in enumerate(ALL_CRITERIA, start=1):
        if only and number not in only:
            continue
        result = func()
        status = "PASS" if result.passed else "FAIL"
        print(f"[{status}] criterion {number} ({result.name}): {result.detail}",
              file=out)
        if not result.passed:
            failures += 1
    return 1 if failures else 0
