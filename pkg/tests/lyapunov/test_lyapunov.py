import itertools
import math
from fractions import Fraction

import numpy as np
import pytest

from specto.bounds import BoundCertificate, BoundMethod, jensen_bound
from specto.cocycle import TorusPoint, build_symbol, cocycle_product
from specto.errors import InputError, PrecisionError
from specto.lyapunov import (
    FixedPointTorusPoint,
    LyapunovEstimate,
    attach_bounds,
    mc_exponent,
    pointwise_upper_exponent,
    renormalized_product,
)
from specto.parallel import random_bits, sample_stream
from specto.substitution import substitution_matrix
from specto.verdict import essential_subspace

LOG_GOLDEN = math.log((1 + 5**0.5) / 2)


@pytest.mark.parametrize("n", [1, 5, 20])
def test_renormalized_product_matches_direct_product(zeta_3, n):
    sym = build_symbol(zeta_3)
    E = substitution_matrix(zeta_3).transpose()
    s = TorusPoint.of([0.123, 0.456, 0.789])
    normalized, scales = renormalized_product(sym, E, s, n)
    assert len(scales) == n
    assert np.linalg.norm(normalized) == pytest.approx(1.0)
    np.testing.assert_allclose(normalized * math.exp(math.fsum(scales)), cocycle_product(sym, E, s, n), rtol=1e-6)


def test_mc_exponent_constant_gram(constant_gram):
    # M̃(s) = (1,1)ᵗ(1, e(s)) 이므로 곱의 노름은 Π|1 + e(s_j)| 로 자라고 평균 로그 증가율은 0 입니다.
    V, _ = essential_subspace(constant_gram)
    estimate = mc_exponent(constant_gram, V, n_steps=200, n_samples=64, seed=3)
    assert estimate.value == pytest.approx(0.0, abs=4 * estimate.std_error + 0.02)
    assert estimate.std_error >= 0
    assert estimate.precision_bits >= 4096


def test_mc_exponent_is_independent_of_threads(fibonacci):
    V, _ = essential_subspace(fibonacci)
    one = mc_exponent(fibonacci, V, n_steps=30, n_samples=40, seed=17, threads=1)
    four = mc_exponent(fibonacci, V, n_steps=30, n_samples=40, seed=17, threads=4)
    assert one.value == four.value
    assert one.std_error == four.std_error


def test_mc_exponent_is_below_jensen_bound(zeta_20):
    V, _ = essential_subspace(zeta_20)
    estimate = mc_exponent(zeta_20, V, n_steps=20, n_samples=32, seed=1)
    assert estimate.value <= 0.5 * math.log(40) + 3 * estimate.std_error


def test_mc_exponent_rejects_short_runs(fibonacci):
    V, _ = essential_subspace(fibonacci)
    with pytest.raises(InputError):
        mc_exponent(fibonacci, V, n_steps=9, n_samples=10)
    with pytest.raises(InputError):
        mc_exponent(fibonacci, V, n_steps=10, n_samples=1)


def test_attach_bounds_flags_excess():
    bound = BoundCertificate(bound=0.5, constant_term=3, method=BoundMethod.JENSEN, rigorous=True)
    base = dict(value=0.4, std_error=0.01, n_steps=10, n_samples=2, seed=0, precision_bits=4096)
    below = attach_bounds(LyapunovEstimate(**base), [bound])
    assert not below.exceeds_bound
    assert below.certified_upper_bounds == [bound]
    above = attach_bounds(LyapunovEstimate(**(base | {"value": 0.6})), [bound])
    assert above.exceeds_bound
    assert not attach_bounds(LyapunovEstimate(**base), []).exceeds_bound


def test_pointwise_exponent_at_fixed_point_is_log_theta(fibonacci):
    value = pointwise_upper_exponent(fibonacci, FixedPointTorusPoint.zero(2, 4096), 400)
    assert value == pytest.approx(LOG_GOLDEN, abs=1e-3)


def test_pointwise_exponent_checks_precision(fibonacci):
    with pytest.raises(PrecisionError) as excinfo:
        pointwise_upper_exponent(fibonacci, FixedPointTorusPoint.zero(2, 64), 400)
    assert excinfo.value.required_bits == 464
    with pytest.raises(InputError):
        pointwise_upper_exponent(fibonacci, FixedPointTorusPoint.zero(3, 4096), 100)
    with pytest.raises(InputError):
        pointwise_upper_exponent(fibonacci, FixedPointTorusPoint.zero(2, 4096), 100, window=0.0)


@pytest.mark.slow
def test_pointwise_exponent_along_diagonal_orbits(fibonacci):
    V, _ = essential_subspace(fibonacci)
    chi = mc_exponent(fibonacci, V, n_steps=200, n_samples=128, seed=2024)
    rng = sample_stream(2024, 99)
    hits = 0
    for _ in range(10):
        omega = random_bits(rng, 4096)
        w = FixedPointTorusPoint.from_fractions([Fraction(omega, 2**4096)] * 2, 4096)
        if pointwise_upper_exponent(fibonacci, w, 2000) <= chi.value + 0.05:
            hits += 1
    assert hits >= 8


def test_pointwise_exponent_matches_exact_partial_sums(fibonacci):
    rng = sample_stream(8, 0)
    w = FixedPointTorusPoint(4096, tuple(random_bits(rng, 4096) for _ in range(2)))
    N = 3000
    _, scales = renormalized_product(build_symbol(fibonacci), substitution_matrix(fibonacci).transpose(), w, N)
    tail_start = N - math.ceil(0.25 * N) + 1
    expected = max(math.fsum(scales[:n]) / n for n in range(tail_start, N + 1))
    assert pointwise_upper_exponent(fibonacci, w, N) == pytest.approx(expected, rel=1e-12, abs=1e-15)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["fibonacci", "zeta_20"])
def test_mc_exponent_agrees_across_seeds(name, request):
    zeta = request.getfixturevalue(name)
    V, _ = essential_subspace(zeta)
    bound = jensen_bound(zeta, V, k=1).bound
    estimates = [mc_exponent(zeta, V, n_steps=100, n_samples=200, seed=seed) for seed in (1, 2, 3)]
    for estimate in estimates:
        assert estimate.value <= bound + 3 * estimate.std_error
    for a, b in itertools.combinations(estimates, 2):
        assert abs(a.value - b.value) <= 3 * math.hypot(a.std_error, b.std_error)
