"""Acceptance gate: every shipped claim, at its stated tolerance.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line
per criterion.  Expected values tagged as derived were computed with the
naive oracles in ``oracles.py`` (enumeration + matrix_power), never with
the package's own evaluation path.
"""

import time

import numpy as np

from isosym.classify import defect_family_rank, minimal_orders
from isosym.construct import (JordanAugmentSpec, ScaledTupleSpec,
                              identity_tuple, jordan_augment,
                              nilpotent_tuple, reference_pair, scaled_tuple,
                              tensor_sum)
from isosym.defect import (MultiOperator, isometry_defect_matrix,
                           isosymmetry_defect, isosymmetry_defect_matrix,
                           symmetry_defect_matrix)
from isosym.harness import SuiteConfig, run_suite
from isosym.linalg import fro_norm
from isosym.multiindex import verify_multinomial_recurrence
from isosym.spectra import (check_orthogonality, classify_spectrum,
                            joint_point_spectrum)

from oracles import naive_lambda


def _report(num, detail):
    print(f"[criterion {num:02d}] PASS - {detail}")


def test_criterion_01_reference_pair_values():
    r = reference_pair()
    lam = fro_norm(isosymmetry_defect_matrix(r, 1, 1))
    m1 = fro_norm(isometry_defect_matrix(r, 1))
    s1 = fro_norm(symmetry_defect_matrix(r, 1))
    assert lam <= 1e-10
    assert m1 >= 0.9
    assert s1 >= 1.0
    # steady-state runtime of the three defect evaluations
    best = float("inf")
    for _ in range(20):
        t0 = time.perf_counter()
        isosymmetry_defect_matrix(r, 1, 1)
        isometry_defect_matrix(r, 1)
        symmetry_defect_matrix(r, 1)
        best = min(best, time.perf_counter() - t0)
    assert best < 1e-3
    _report(1, f"L11={lam:.1e} M1={m1:.3f} S1={s1:.6f} "
               f"runtime={best * 1e6:.0f}us")


def test_criterion_02_forms_equivalence():
    report = run_suite(SuiteConfig(suite="forms", trials=200, seed=2026))
    assert report.trials_passed == 200
    _report(2, f"200/200 random tuples, worst residual "
               f"{report.worst_residual:.2e}")


def test_criterion_03_recurrence_suite():
    t0 = time.perf_counter()
    report = run_suite(SuiteConfig(suite="recurrence", trials=200, seed=2026))
    elapsed = time.perf_counter() - t0
    assert report.trials_passed == 200
    assert elapsed < 30.0
    _report(3, f"200/200 trials in {elapsed:.2f}s, worst residual "
               f"{report.worst_residual:.2e}")


def test_criterion_04_expansion_suite():
    report = run_suite(SuiteConfig(suite="expansion", trials=100, seed=2026))
    assert report.trials_passed == 100
    _report(4, f"100/100 tensor-built cross-commuting instances, worst "
               f"residual {report.worst_residual:.2e}")


def test_criterion_05_nilpotent_perturbation():
    report = run_suite(SuiteConfig(suite="perturbation", trials=200, seed=2026))
    assert report.trials_passed == 200
    # the smallest block augmentation, brute-forced with the naive oracle
    one = MultiOperator([np.eye(1, dtype=complex)])
    built = jordan_augment(JordanAugmentSpec(base_tuple=one, mu=(1.0,), q=2))
    expect = np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex)
    assert np.array_equal(built.matrices[0], expect)
    brute = naive_lambda([expect], 3, 4)
    assert fro_norm(brute) <= 1e-12
    _report(5, "200/200 constructed instances; block-augmented identity "
               "confirmed (3,4)-isosymmetric by enumeration oracle")


def test_criterion_06_ascent_windows():
    report = run_suite(SuiteConfig(suite="ascent", trials=200, seed=2026))
    assert report.trials_passed == 200
    fixtures = [reference_pair(), identity_tuple(1, 3),
                MultiOperator([np.zeros((2, 2))] * 2)]
    checked = 0
    for r in fixtures:
        for m0, n0 in minimal_orders(r, 4, 4).staircase:
            for i in range(3):
                for j in range(3):
                    assert isosymmetry_defect(r, m0 + i, n0 + j).is_zero
                    checked += 1
    _report(6, f"200/200 scanned instances; {checked} dominated-window "
               "cells all vanish on the named fixtures")


def test_criterion_07_multinomial_pascal_identity():
    t0 = time.perf_counter()
    cases = 0
    for n in range(0, 7):
        for d in range(1, 4):
            assert verify_multinomial_recurrence(n, d)
            cases += 1
    elapsed = time.perf_counter() - t0
    assert elapsed < 1.0
    _report(7, f"exhaustive over {cases} (n,d) grids in {elapsed * 1e3:.0f}ms, "
               "exact integer arithmetic")


def _spectral_fixtures():
    fixtures = [(reference_pair(), 1, 1)]
    for seed in (1, 2, 3):
        rng = np.random.default_rng(seed)
        theta = rng.uniform(0.3, 2.8)
        base = np.array([[np.exp(1j * theta), 1.0],
                         [0.0, np.exp(1j * theta)]])
        beta = np.abs(rng.standard_normal(2)) + 0.1
        beta = tuple(beta / np.linalg.norm(beta))
        fixtures.append((scaled_tuple(ScaledTupleSpec(base=base, beta=beta)),
                         3, 1))
    fixtures.append((tensor_sum(reference_pair(),
                                nilpotent_tuple(2, 2, 2, seed=4)), 3, 4))
    fixtures.append((jordan_augment(JordanAugmentSpec(
        base_tuple=reference_pair(), mu=(1.0, 1.0), q=2)), 3, 4))
    return fixtures


def test_criterion_08_spectral_inclusion():
    points = 0
    for r, m, n in _spectral_fixtures():
        for c in classify_spectrum(r, m, n, tol=1e-7):
            norm = np.sqrt(sum(abs(z) ** 2 for z in c.mu))
            assert abs(norm - 1.0) <= 1e-7 or abs(sum(c.mu).imag) <= 1e-7
            points += 1
    pairs = joint_point_spectrum(reference_pair())
    assert len(pairs) == 1
    mu = pairs[0].mu
    assert abs(mu[0]) <= 1e-10 and abs(mu[1] - 1.0) <= 1e-10
    assert abs(np.sqrt(sum(abs(z) ** 2 for z in mu)) - 1.0) <= 1e-10
    _report(8, f"{points} joint eigenvalues across fixtures, all on the "
               "sphere or with real coordinate sum; reference point is (0,1)")


def test_criterion_09_orthogonality_on_normal_fixtures():
    tol = 1e-8
    checked = 0
    for seed in range(6):
        rng = np.random.default_rng(seed)
        d, dim = 2, 5
        if seed % 2 == 0:
            z = np.exp(2j * np.pi * rng.uniform(size=(d, dim)))
            z = z / np.linalg.norm(z, axis=0, keepdims=True)
            mats = [np.diag(z[j]) for j in range(d)]
        else:
            vals = rng.uniform(-2.0, 2.0, size=(d, dim))
            mats = [np.diag(vals[j].astype(complex)) for j in range(d)]
        g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
        u, _ = np.linalg.qr(g)
        r = MultiOperator([u @ m @ u.conj().T for m in mats])
        for entry in check_orthogonality(r, 1, 1, tol):
            if entry.gate_product > 10 * tol and entry.gate_sum > 10 * tol:
                assert entry.gram_norm <= 1e-8
                checked += 1
    assert checked > 0
    _report(9, f"{checked} gate-clearing eigenpair pairs, all mutually "
               "orthogonal within 1e-8")


def test_criterion_10_linear_independence_rank():
    jordan = MultiOperator([np.array([[1.0, 1.0], [0.0, 1.0]], dtype=complex)])
    result = defect_family_rank(jordan, 3, 1, "vary_m")
    assert result.rank == 3
    assert result.independent
    _report(10, "strict 3-isometry family {L_(k,0)}: numerical rank 3")
