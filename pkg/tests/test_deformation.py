"""Deformation construction and degeneration-certificate verification."""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

import filicert as fc
from filicert import (DeformationSpec, InvalidSpec, NegativeExponent,
                      NotInvariant, SubspaceSpec, block_spectrum_check,
                      counterexample_spec, deform, entries_equal, go_cocycle,
                      limit_check, reciprocal_certificate, verify_degeneration)
from filicert.deformation import STAGES, run_certificate_checks, solve_certificate_cell
from filicert.lie import basis_column, column_is_zero
from filicert.linalg import ScalarMatrix
from filicert.scalar import ONE, T, ZERO, Scalar


def column(dim, **components):
    out = [ZERO] * dim
    for key, value in components.items():
        out[int(key[1:]) - 1] = fc.as_scalar(value)
    return tuple(out)


# -- cocycle construction ------------------------------------------------------

def test_cocycle_from_diagonal_weights(tables):
    data = tables["mu17"]
    phi = go_cocycle(DeformationSpec(data.mu, data.ideal, 1, data.derivation))
    for k in range(2, 9):
        expected = column(8, **{f"Y{k}": k - 1})
        assert phi.bracket(1, k) == expected
    for i in range(2, 9):
        for j in range(i + 1, 9):
            assert column_is_zero(phi.bracket(i, j))


def test_zero_derivation_gives_zero_cochain(tables):
    data = tables["mu17"]
    phi = go_cocycle(DeformationSpec(data.mu, data.ideal, 1,
                                     ScalarMatrix.diagonal([0] * 7)))
    assert not phi.entries


def test_counterexample_cochain_is_valid(tables):
    data = tables["mu17"]
    spec = counterexample_spec(data.mu)
    phi = go_cocycle(spec)
    assert fc.cocycle_check(data.mu, phi)
    assert fc.lie_bracket_check(phi)
    assert column_is_zero(phi.bracket_eval(basis_column(8, 1), basis_column(8, 2)))


def test_invalid_spec_outside_inside_ideal(tables):
    data = tables["mu17"]
    spec = DeformationSpec(data.mu, SubspaceSpec(tuple(range(1, 8))), 1,
                           data.derivation)
    with pytest.raises(InvalidSpec):
        go_cocycle(spec)


def test_invalid_spec_not_a_derivation(tables):
    data = tables["mu17"]
    spec = DeformationSpec(data.mu, data.ideal, 1, ScalarMatrix.identity(7))
    with pytest.raises(InvalidSpec):
        go_cocycle(spec)


def test_invalid_spec_non_diagonal_derivation(tables):
    data = tables["mu17"]
    rows = [list(row) for row in data.derivation.rows]
    rows[0][1] = ONE
    bad = ScalarMatrix(tuple(tuple(r) for r in rows))
    with pytest.raises(InvalidSpec):
        go_cocycle(DeformationSpec(data.mu, data.ideal, 1, bad))


# -- the linear deformation -----------------------------------------------------

def test_deform_with_zero_cochain_is_identity(tables):
    data = tables["mu15"]
    zero = fc.Cochain2(8, {}, frozenset(), "zero")
    assert entries_equal(deform(data.mu, zero), data.mu)


def test_deform_recovers_base_at_zero(tables):
    for data in tables.values():
        assert entries_equal(data.mu_t.eval_t(0), data.mu)


def test_deformed_entry_mixes_bracket_and_weight(tables):
    data = tables["mu11"]
    value = data.mu_t.bracket(1, 5)
    assert value == column(8, Y5=T * 4, Y7=-1)


# -- the degeneration identity ----------------------------------------------------

def test_certificate_verifies_on_all_pairs(tables):
    data = tables["mu17"]
    report = verify_degeneration(data.mu1, data.mu_t, data.g)
    assert report.stages["eq1"].ok
    assert report.stages["unit-det"].ok


def test_identity_certificate_for_constant_family(tables):
    mu1 = tables["mu17"].mu1
    report = verify_degeneration(mu1, mu1, ScalarMatrix.identity(8))
    assert report.stages["eq1"].ok


def test_corrupted_certificate_fails_localized(tables):
    data = tables["mu17"]
    rows = [list(r) for r in data.g.rows]
    rows[6][2] = ZERO  # erase the (7, 3) entry
    bad = ScalarMatrix(tuple(tuple(r) for r in rows))
    report = verify_degeneration(data.mu1, data.mu_t, bad)
    assert not report.stages["eq1"].ok
    pairs = sorted(f.indices for f in report.stages["eq1"].failures)
    assert pairs == [(1, 2), (1, 3), (2, 3)]
    for failure in report.stages["eq1"].failures:
        components = [k + 1 for k, s in enumerate(failure.residual) if not s.is_zero()]
        touched = set(failure.indices) | set(components)
        assert touched & {3, 7}


def test_precondition_rejects_wrong_base(tables):
    data = tables["mu17"]
    with pytest.raises(InvalidSpec):
        verify_degeneration(data.mu, data.mu_t, data.g)  # mu != mu_t at t=1


def test_full_pipeline_stage_order(tables):
    data = tables["mu15"]
    report = run_certificate_checks("mu15", data.mu, data.ideal, 1,
                                    data.derivation, data.g)
    assert tuple(report.stages) == STAGES
    assert report.passed


def test_reciprocal_certificate_satisfies_literal_identity(tables):
    data = tables["mu08"]
    assert data.reciprocal
    literal = reciprocal_certificate(data.g)
    report = verify_degeneration(data.mu1, data.mu_t, literal)
    assert report.stages["eq1"].ok
    assert report.stages["unit-det"].ok


def test_equivalence_of_certificate_and_base_change(tables):
    for name, data in tables.items():
        transported = fc.base_change(data.mu1, data.g)
        target = data.mu_t.invert_t() if data.reciprocal else data.mu_t
        assert entries_equal(transported, target), name


def test_certificate_residuals_vanish_at_rational_samples(tables):
    """Numeric regression guard: specialize the identity instead of trusting
    the symbolic zero."""
    rng = random.Random(37)
    for name, data in tables.items():
        family = data.mu_t.invert_t() if data.reciprocal else data.mu_t
        for _ in range(5):
            t0 = Fraction(rng.randint(1, 9), rng.randint(1, 5))
            a0 = Fraction(rng.randint(-4, 4), rng.randint(1, 4))
            for i, j in data.mu_t.pairs():
                lhs = data.mu1.bracket_eval(data.g.column(i - 1), data.g.column(j - 1))
                rhs = data.g.apply(family.bracket(i, j))
                for a, b in zip(lhs, rhs):
                    assert a.specialize(t0, a0) == b.specialize(t0, a0), (name, i, j)


# -- the t -> 0 limit ---------------------------------------------------------------

def test_limit_of_every_catalog_family(tables):
    for data in tables.values():
        assert limit_check(data.mu_t, data.mu)


def test_limit_of_constant_family(tables):
    mu = tables["mu15"].mu
    assert limit_check(mu, mu)


def test_limit_rejects_poles(tables):
    data = tables["mu15"]
    entries = dict(data.mu_t.entries)
    entries[(1, 2)] = column(8, Y3=Scalar.t_power(-1))
    with_pole = fc.StructureConstants(8, entries, data.mu_t.params, "pole")
    with pytest.raises(NegativeExponent):
        limit_check(with_pole, data.mu)


# -- the spectrum of the ideal block -------------------------------------------------

def test_spectrum_of_triangular_certificate(tables):
    data = tables["mu15"]
    assert block_spectrum_check(data.g, data.ideal, data.derivation)


def test_spectrum_of_dense_certificate(tables):
    data = tables["mu08"]
    assert block_spectrum_check(data.g, data.ideal, data.derivation)


def test_spectrum_mismatch_detected():
    g = ScalarMatrix.diagonal([T, T ** 3])
    ideal = SubspaceSpec((2,))
    derivation = ScalarMatrix.diagonal([2])
    assert block_spectrum_check(g, ideal, derivation) is False
    assert block_spectrum_check(g, ideal, ScalarMatrix.diagonal([3])) is True


def test_spectrum_requires_invariant_ideal():
    g = ScalarMatrix.from_rows([[T, ONE], [ZERO, T ** 2]])
    with pytest.raises(NotInvariant):
        block_spectrum_check(g, SubspaceSpec((2,)), ScalarMatrix.diagonal([2]))


# -- deriving a corrected cell ---------------------------------------------------------

def test_solver_reproduces_known_good_cell(tables):
    data = tables["mu17"]
    derived = solve_certificate_cell(data.mu, data.ideal, 1, data.derivation,
                                     data.g, (7, 3))
    assert derived == data.g.rows[6][2]


def test_solver_derives_the_bundled_correction(corpus, tables):
    alg = corpus["mu08"]
    data = tables["mu08"]
    verbatim_g = fc.certificate_matrix(alg, corrected=False)
    derived = solve_certificate_cell(data.mu, data.ideal, 1, data.derivation,
                                     verbatim_g, (2, 4), reciprocal=True)
    assert derived == data.g.rows[1][3]
    assert derived == -verbatim_g.rows[1][3]  # a pure coefficient-level sign fix


def test_solver_rejects_unfixable_cell(tables):
    data = tables["mu17"]
    rows = [list(r) for r in data.g.rows]
    rows[6][2] = ZERO
    rows[7][2] = ZERO  # two corrupted cells cannot be explained by one unknown
    bad = ScalarMatrix(tuple(tuple(r) for r in rows))
    with pytest.raises(InvalidSpec):
        solve_certificate_cell(data.mu, data.ideal, 1, data.derivation, bad, (7, 3))
