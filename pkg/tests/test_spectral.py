import math
import random
from fractions import Fraction as F

import pytest

from asyncdds.evolution import solution_operator
from asyncdds.simulate import simulate
from asyncdds.spectral import (
    MARGINAL,
    STABLE,
    UNSTABLE,
    classify_stability,
    eigen_2x2,
    geometric_decay_bound,
    spectral_norm_2x2,
    spectral_radius,
    sync_eigen_shift_check,
    verdict_for,
)
from asyncdds.stepmat import SystemSpec
from asyncdds.timescale import lcm_periods

from conftest import P_ROT, P_THIRD, PSI_23
from oracles import quadratic_roots, random_P


def test_eigen_12_operator():
    eig = eigen_2x2(((9, 4), (-2, 3)))
    assert (eig.lambda1, eig.lambda2) == (7, 5)
    assert (eig.trace, eig.det, eig.discriminant) == (12, 35, 4)


def test_eigen_rotation():
    eig = eigen_2x2(((F(9, 16), F(7, 8)), (F(-7, 8), F(9, 16))))
    assert eig.lambda1 == pytest.approx(complex(9 / 16, 7 / 8))
    assert eig.lambda2 == pytest.approx(complex(9 / 16, -7 / 8))
    assert eig.det == F(277, 256)
    assert abs(eig.lambda1) == pytest.approx(math.sqrt(277) / 16)


def test_eigen_23_operator():
    eig = eigen_2x2(PSI_23)
    root = math.sqrt(5785)
    assert eig.lambda1 == pytest.approx((-27 - root) / 160, abs=1e-14)
    assert eig.lambda2 == pytest.approx((-27 + root) / 160, abs=1e-14)
    assert eig.lambda1.real == pytest.approx(-0.644, abs=1e-3)
    assert eig.lambda2.real == pytest.approx(0.306, abs=1e-3)


def test_eigen_against_oracle_and_residual():
    rng = random.Random(51)
    for _ in range(1000):
        m = random_P(rng, lo=-50, hi=50, max_den=40)
        eig = eigen_2x2(m)
        tr, det = eig.trace, eig.det
        assert abs(eig.lambda1) >= abs(eig.lambda2)
        scale = max(1, abs(tr), abs(det))
        for lam in (eig.lambda1, eig.lambda2):
            assert abs(lam * lam - float(tr) * lam + float(det)) <= 1e-10 * scale
        expected = sorted(quadratic_roots(tr, det), key=lambda z: (abs(z), z.real, z.imag))
        got = sorted((eig.lambda1, eig.lambda2), key=lambda z: (abs(z), z.real, z.imag))
        for g, e in zip(got, expected):
            assert abs(g - e) <= 1e-7 * max(1, abs(e))
        assert spectral_radius(m) == pytest.approx(abs(eig.lambda1), rel=1e-12, abs=1e-12)


def test_small_root_without_cancellation():
    # lambda2 = 1e-12 would be lost by the textbook formula
    eig = eigen_2x2(((F(10**6), 0), (0, F(1, 10**12))))
    assert eig.lambda2 == pytest.approx(1e-12, rel=1e-12)


def test_spectral_norm():
    assert spectral_norm_2x2(((3, 0), (0, -4))) == pytest.approx(4)
    assert spectral_norm_2x2(((1, 1), (0, 1))) == pytest.approx((1 + math.sqrt(5)) / 2)
    rng = random.Random(5)
    for _ in range(200):
        m = random_P(rng)
        assert spectral_norm_2x2(m) >= spectral_radius(m) - 1e-12


def test_verdict_bands():
    assert verdict_for(0.5, 1e-9) == STABLE
    assert verdict_for(1.0, 1e-9) == MARGINAL
    assert verdict_for(1 + 5e-10, 1e-9) == MARGINAL
    assert verdict_for(1.01, 1e-9) == UNSTABLE
    assert verdict_for(0.995, 0.01) == MARGINAL


@pytest.mark.parametrize(
    "mu, nu, P, verdict, route, radius",
    [
        (7, 7, P_ROT, UNSTABLE, "sync", math.sqrt(277) / 16),
        (7, 1, P_ROT, STABLE, "mu1", 0.997073),
        (2, 1, P_THIRD, STABLE, "mu1", 0.5),
        (2, 3, ((-1, F(1, 5)), (F(1, 4), F(-1, 4))), STABLE, "general", (27 + math.sqrt(5785)) / 160),
    ],
)
def test_classify_examples(mu, nu, P, verdict, route, radius):
    report = classify_stability(SystemSpec(mu, nu, P))
    assert report.verdict == verdict
    assert report.theorem == route
    assert report.spectral_radius == pytest.approx(radius, abs=1e-6)
    assert report.period_T == lcm_periods(mu, nu)[0]


def test_zero_dynamics_marginal():
    assert classify_stability(SystemSpec(3, 2, ((0, 0), (0, 0)))).verdict == MARGINAL


def test_negative_margin_rejected():
    with pytest.raises(ValueError):
        classify_stability(SystemSpec(1, 1, P_ROT), margin=-1)


def test_shift_check_examples():
    assert sync_eigen_shift_check(((-1, 0), (0, -1)), 1) is True
    assert sync_eigen_shift_check(P_ROT, 7) is False


def test_shift_check_randomized():
    rng = random.Random(61)
    for _ in range(1000):
        P = random_P(rng)
        mu = F(rng.randint(1, 12), rng.randint(1, 4))
        sync_eigen_shift_check(P, mu)


def test_sync_verdict_matches_shift_criterion():
    rng = random.Random(67)
    for _ in range(1000):
        P = random_P(rng, lo=-1, hi=1)
        mu = rng.randint(1, 6)
        report = classify_stability(SystemSpec(mu, mu, P))
        if report.verdict == MARGINAL:
            continue
        assert (report.verdict == STABLE) == sync_eigen_shift_check(P, mu)


def test_verdict_invariant_under_equivalence():
    # (2,3) and the back-solved (6,1) system share Psi(6,0) up to rounding
    from asyncdds.equivalence import backsolve_mu1

    a = classify_stability(SystemSpec(2, 3, ((-1, F(1, 5)), (F(1, 4), F(-1, 4)))))
    b = classify_stability(backsolve_mu1(PSI_23, 6))
    assert a.verdict == b.verdict
    assert a.spectral_radius == pytest.approx(b.spectral_radius, abs=1e-9)


def test_decay_bound_examples():
    diag = geometric_decay_bound(SystemSpec(1, 1, ((F(-1, 2), 0), (0, F(-1, 2)))), 0.6, 30)
    assert diag.verified and diag.K <= 1
    rot = geometric_decay_bound(SystemSpec(7, 1, P_ROT), 0.999, 700)
    assert rot.verified
    sys23 = geometric_decay_bound(SystemSpec(2, 3, ((-1, F(1, 5)), (F(1, 4), F(-1, 4)))), 0.7, 60)
    assert sys23.verified


def test_decay_bound_kappa_range():
    with pytest.raises(ValueError):
        geometric_decay_bound(SystemSpec(7, 1, P_ROT), 0.99, 70)
    with pytest.raises(ValueError):
        geometric_decay_bound(SystemSpec(7, 1, P_ROT), 1.0, 70)


def stable_specs(rng, count, rho_max):
    found = []
    while len(found) < count:
        spec = SystemSpec(rng.randint(1, 3), rng.randint(1, 3), random_P(rng, lo=-1, hi=1, max_den=8))
        if classify_stability(spec).spectral_radius <= rho_max:
            found.append(spec)
    return found


def test_decay_bound_randomized():
    rng = random.Random(71)
    for spec in stable_specs(rng, 100, 0.9):
        rho = classify_stability(spec).spectral_radius
        kappa = (rho + 1) / 2
        big_t = lcm_periods(spec.mu, spec.nu)[0]
        assert geometric_decay_bound(spec, kappa, 10 * big_t).verified


def test_decay_after_twenty_periods():
    rng = random.Random(73)
    for spec in stable_specs(rng, 100, 0.5):
        big_t = lcm_periods(spec.mu, spec.nu)[0]
        traj = simulate(spec, 1, 1, 20 * big_t)
        x, y = traj.held(20 * big_t)
        assert math.hypot(float(x), float(y)) <= 1e-3 * math.hypot(1, 1)


def test_twenty_periods_not_enough_at_rho_08():
    # 0.8**20 is about 0.0115, so a 1e-3 decay after 20T cannot hold at this radius
    spec = SystemSpec(1, 1, ((F(-1, 5), 0), (0, F(-1, 5))))
    assert classify_stability(spec).spectral_radius == pytest.approx(0.8)
    x, y = simulate(spec, 1, 1, 20).held(20)
    assert math.hypot(float(x), float(y)) > 1e-3 * math.hypot(1, 1)


def test_period_operator_matches_general_product():
    rng = random.Random(79)
    for _ in range(100):
        mu, nu = rng.randint(1, 6), rng.choice([1, rng.randint(1, 6)])
        spec = SystemSpec(mu, nu, random_P(rng))
        big_t = lcm_periods(mu, nu)[0]
        assert classify_stability(spec).operator == solution_operator(spec, 0, big_t).psi
