import math

import numpy as np
import pytest

from specto.bounds import (
    BoundMethod,
    ClearingFactor,
    best_cleared_bound,
    cleared_constant_term,
    cleared_jensen_bound,
    cleared_polynomial,
    detect_geometric_runs,
    gram_constant_term,
    gram_polynomial,
    jensen_bound,
    mahler_midpoint,
    merge_clearings,
    quadrature_bound,
    quadrature_log_norm,
    symbol_for_power,
)
from specto.cocycle import build_symbol, essential_symbol
from specto.errors import ClearingError, InputError
from specto.substitution import FamilyParams, FamilyTag, make_family
from specto.verdict import essential_subspace

ZETA_CLEARINGS = [ClearingFactor((1, 0, 0), 1), ClearingFactor((0, 1, 0), 1)]


def _essential(zeta):
    V, _ = essential_subspace(zeta)
    return essential_symbol(build_symbol(zeta), V), V


def test_gram_polynomial_matches_frobenius_norm(zeta_3):
    sym, _ = _essential(zeta_3)
    gram = gram_polynomial(sym)
    assert gram.is_conjugate_symmetric()
    assert gram.constant_term == gram_constant_term(sym) == 17
    points = np.random.default_rng(3).random((64, 3))
    np.testing.assert_allclose(gram.evaluate(points).real, sym.frobenius_squared(points), rtol=1e-10)


def test_gram_constant_term_is_mean_of_frobenius_norm(zeta_3):
    sym, _ = _essential(zeta_3)
    values = sym.frobenius_squared(np.random.default_rng(11).random((20000, 3)))
    mean, se = values.mean(), values.std(ddof=1) / math.sqrt(len(values))
    assert abs(mean - gram_constant_term(sym)) <= 5 * se


def test_jensen_bound_examples(constant_gram, fibonacci):
    V, _ = essential_subspace(constant_gram)
    cert = jensen_bound(constant_gram, V)
    assert cert.constant_term == 4
    assert cert.bound == pytest.approx(math.log(2))
    assert cert.method == BoundMethod.JENSEN
    assert cert.rigorous

    V, _ = essential_subspace(fibonacci)
    assert jensen_bound(fibonacci, V).constant_term == 3
    with pytest.raises(InputError):
        jensen_bound(fibonacci, V, k=0)


def test_jensen_bound_for_power(fibonacci):
    V, _ = essential_subspace(fibonacci)
    cert = jensen_bound(fibonacci, V, k=2)
    assert cert.k == 2
    assert cert.constant_term == gram_constant_term(symbol_for_power(fibonacci, V, 2))
    assert cert.bound == pytest.approx(math.log(cert.constant_term) / 4)


def test_detect_geometric_runs(zeta_20):
    sym, _ = _essential(zeta_20)
    proposals = detect_geometric_runs(sym)
    assert ClearingFactor((1, 0, 0), 1) in proposals
    assert ClearingFactor((0, 1, 0), 1) in proposals
    assert ClearingFactor((0, 0, 1), 1) in proposals


def test_merge_clearings_uses_lcm():
    merged = merge_clearings([ClearingFactor((1, 0), 2), ClearingFactor((1, 0), 3), ClearingFactor((0, 1), 1)])
    assert merged == [ClearingFactor((1, 0), 6), ClearingFactor((0, 1), 1)]


@pytest.mark.parametrize("m", [3, 5, 20])
def test_zeta_family_cleared_constant_is_forty(m):
    sym, _ = _essential(make_family(FamilyParams(FamilyTag.ZETA_M, m)))
    assert gram_constant_term(sym) == 3 * m + 8
    cert = cleared_jensen_bound(sym, ZETA_CLEARINGS)
    assert cert.constant_term == 40
    assert cert.method == BoundMethod.CLEARED
    assert cert.bound == pytest.approx(math.log(40) / 2)


def test_cleared_polynomial_identity(zeta_3):
    sym, _ = _essential(zeta_3)
    cleared = cleared_polynomial(sym, ZETA_CLEARINGS)
    assert cleared.constant_term == cleared_constant_term(sym, ZETA_CLEARINGS) == 40
    assert cleared.is_conjugate_symmetric()


def test_best_cleared_bound(zeta_20, zeta_3):
    sym, _ = _essential(zeta_20)
    best = best_cleared_bound(sym, detect_geometric_runs(sym))
    assert best.constant_term == 40
    assert best.method == BoundMethod.CLEARED

    sym, _ = _essential(zeta_3)
    best = best_cleared_bound(sym, detect_geometric_runs(sym))
    assert best.constant_term == 17
    assert best.method == BoundMethod.JENSEN


@pytest.mark.parametrize("m", [1, 2, 8])
def test_sigma_family_cleared_constant_is_sixteen(m):
    sym, V = _essential(make_family(FamilyParams(FamilyTag.SIGMA_M, m)))
    assert V.lattice_basis == ((1, 1, 0), (0, 0, 1))
    assert gram_constant_term(sym) == 6 * m + 4
    assert cleared_jensen_bound(sym, [ClearingFactor((1, 0), 2)]).constant_term == 16


def test_sigma_family_best_bound(sigma_8):
    sym, _ = _essential(sigma_8)
    assert best_cleared_bound(sym, detect_geometric_runs(sym)).constant_term == 16
    sym, _ = _essential(make_family(FamilyParams(FamilyTag.SIGMA_M, 1)))
    assert best_cleared_bound(sym, detect_geometric_runs(sym)).constant_term == 10


def test_invalid_clearing_reports_index(zeta_3):
    sym, _ = _essential(zeta_3)
    with pytest.raises(ClearingError) as excinfo:
        cleared_constant_term(sym, [ClearingFactor((1, 0, 0), 1), ClearingFactor((0, 0, 0), 1)])
    assert excinfo.value.index == 1
    with pytest.raises(ClearingError) as excinfo:
        cleared_constant_term(sym, [ClearingFactor((1, 0), 1)])
    assert excinfo.value.index == 0


def test_mahler_midpoint_is_close_to_zero():
    # 중점들은 z^n = −1 의 근이므로 합은 정확히 2·log 2 입니다.
    assert mahler_midpoint(4096) == pytest.approx(2 * math.log(2) / 4096, rel=1e-6)
    assert abs(mahler_midpoint()) <= 1e-3


def test_quadrature_bound_constant_gram(constant_gram):
    sym, V = _essential(constant_gram)
    cert = quadrature_bound(sym, V.restriction, k=1, samples=256, seed=5)
    assert cert.bound == pytest.approx(math.log(2), abs=1e-12)
    assert cert.std_error < 1e-12
    assert cert.method == BoundMethod.MONTE_CARLO
    assert not cert.rigorous


def test_quadrature_bound_is_below_jensen(zeta_20):
    sym, V = _essential(zeta_20)
    cert = quadrature_bound(sym, V.restriction, k=1, samples=2000, seed=1)
    assert cert.bound <= 0.5 * math.log(40) + 3 * cert.std_error


def test_quadrature_is_independent_of_threads(zeta_3):
    sym, V = _essential(zeta_3)
    one = quadrature_bound(sym, V.restriction, k=2, samples=400, seed=9, threads=1)
    four = quadrature_bound(sym, V.restriction, k=2, samples=400, seed=9, threads=4)
    assert one.bound == four.bound
    assert one.std_error == four.std_error


def test_quadrature_rejects_small_sample(zeta_3):
    sym, V = _essential(zeta_3)
    with pytest.raises(InputError):
        quadrature_bound(sym, V.restriction, k=1, samples=99, seed=0)


def test_quadrature_log_norm_matches_certificate(zeta_3):
    sym, V = _essential(zeta_3)
    estimate, std_error = quadrature_log_norm(sym, V.restriction, k=1, samples=300, seed=4)
    cert = quadrature_bound(sym, V.restriction, k=1, samples=300, seed=4)
    assert (estimate, std_error) == (cert.bound, cert.std_error)
