"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines; the whole suite stays within a few minutes on a laptop-class core.
"""

import math
import time

import numpy as np
import pytest

from qwline import (
    airy_ai,
    airy_ai_prime,
    allowed_data,
    amplitude_oracle,
    density_mass,
    distribution,
    envelope,
    evolve,
    inner_estimate,
    lambda_functional,
    make_coin,
    make_spinor,
    mu_prime,
    mu_second,
    nearest_parity_site,
    oscillation_phase,
    rate_H,
    row_walk_distribution,
    saddle_modulus,
    saddle_mu_second,
    saddle_radius,
    saddle_t,
    wall_estimate,
)
from qwline.airy import X_SWITCH, _asymptotic_left, _asymptotic_right, _maclaurin
from qwline.cli import main

from conftest import SQ2, random_coin, random_spinor

HADAMARD = make_coin(SQ2, SQ2)
SYMMETRIC = make_spinor(SQ2, SQ2 * 1j)


def _report(k, elapsed, detail):
    print(f"[criterion {k:2d}] PASS ({elapsed:6.1f}s)  {detail}")


def test_criterion_01_unitarity_and_support():
    t0 = time.time()
    rng = np.random.default_rng(101)
    pairs = [(random_coin(rng), random_spinor(rng)) for _ in range(20)]
    worst = 0.0
    for coin, phi in pairs:
        for n in range(1, 65):
            dist = distribution(evolve(coin, phi, n))
            worst = max(worst, abs(dist.total() - 1.0))
            parity_mask = (dist.sites + n) % 2 == 1
            assert np.all(dist.probs[parity_mask] == 0.0)
            assert dist.prob(n + 1) == 0.0 and dist.prob(-n - 1) == 0.0
            assert dist.prob(3 * n + 7) == 0.0
    for coin, phi in pairs[:3]:
        dist = distribution(evolve(coin, phi, 1000))
        worst = max(worst, abs(dist.total() - 1.0))
        assert np.all(dist.probs[(dist.sites + 1000) % 2 == 1] == 0.0)
    for coin, phi in pairs[:2]:
        dist = distribution(evolve(coin, phi, 10000))
        worst = max(worst, abs(dist.total() - 1.0))
        assert np.all(dist.probs[(dist.sites + 10000) % 2 == 1] == 0.0)
    assert worst <= 1e-12
    elapsed = time.time() - t0
    assert elapsed < 60.0
    _report(1, elapsed, f"max |sum(p) - 1| = {worst:.2e} over 20 coins, "
            "n in 1..64 plus 1000/10000 spot checks; parity/support exact")


def test_criterion_02_oracle_equivalence():
    t0 = time.time()
    rng = np.random.default_rng(202)
    worst = 0.0
    for _ in range(10):
        coin = random_coin(rng)
        phi = random_spinor(rng)
        for n in range(1, 65):
            field = evolve(coin, phi, n)
            for y in range(-n, n + 1):
                if (n + y) % 2 == 1:
                    continue
                for comp in (1, 2):
                    dev = abs(
                        amplitude_oracle(coin, phi, comp, n, y)
                        - field.amplitude(y, comp)
                    )
                    worst = max(worst, dev)
        assert amplitude_oracle(coin, phi, 1, 10, 3) == 0.0  # parity forbidden
    assert worst <= 1e-10
    elapsed = time.time() - t0
    assert elapsed < 60.0
    _report(2, elapsed, f"max |recursion - circle quadrature| = {worst:.2e} "
            "for 10 coins, n <= 64, all sites")


def test_criterion_03_row_column_identity():
    t0 = time.time()
    rng = np.random.default_rng(303)
    worst = 0.0
    for _ in range(10):
        coin = random_coin(rng)
        psi = random_spinor(rng)
        n = int(rng.integers(1, 101))
        q_dist = row_walk_distribution(coin, psi, n)
        p_dist = distribution(evolve(coin, coin.apply(psi), n))
        worst = max(worst, float(np.max(np.abs(q_dist.probs - p_dist.probs))))
    assert worst <= 1e-12
    _report(3, time.time() - t0,
            f"max |q_n(psi) - p_n(A psi)| = {worst:.2e} over 10 instances")


def test_criterion_04_interior_identities():
    t0 = time.time()
    rng = np.random.default_rng(404)
    worst = {"saddle": 0.0, "curvature": 0.0, "sum_rule": 0.0,
             "theta1": 0.0, "theta2": 0.0}
    for _ in range(100):
        coin = random_coin(rng)
        phi = random_spinor(rng)
        eta = float(rng.uniform(-0.9, 0.9)) * coin.abs_a
        worst["saddle"] = max(
            worst["saddle"], abs(mu_prime(coin, saddle_t(coin, eta)) - eta)
        )
        worst["curvature"] = max(
            worst["curvature"],
            abs(mu_second(coin, saddle_t(coin, eta)) - saddle_mu_second(coin, eta)),
        )
        data = allowed_data(coin, phi, eta)
        total = (abs(data.f1) ** 2 + abs(data.f2) ** 2
                 + abs(data.g1) ** 2 + abs(data.g2) ** 2)
        worst["sum_rule"] = max(
            worst["sum_rule"],
            abs(total - (1.0 + eta * lambda_functional(coin, phi))),
        )
        h1 = 1e-5
        fd1 = (oscillation_phase(coin, eta + h1)
               - oscillation_phase(coin, eta - h1)) / (2 * h1)
        target1 = -2.0 * saddle_t(coin, eta)
        if abs(target1) > 1e-3:  # relative comparison needs a scale
            worst["theta1"] = max(
                worst["theta1"], abs(fd1 - target1) / abs(target1)
            )
        else:
            assert abs(fd1 - target1) < 1e-6
        h2 = 1e-4
        fd2 = (oscillation_phase(coin, eta + h2)
               - 2 * oscillation_phase(coin, eta)
               + oscillation_phase(coin, eta - h2)) / h2**2
        target2 = -2.0 * math.pi * envelope(coin, eta)
        worst["theta2"] = max(worst["theta2"], abs(fd2 - target2) / abs(target2))
    assert worst["saddle"] <= 1e-10
    assert worst["curvature"] <= 1e-8
    assert worst["sum_rule"] <= 1e-10
    assert worst["theta1"] <= 1e-4
    assert worst["theta2"] <= 1e-4
    _report(4, time.time() - t0,
            "100 random triples: saddle {saddle:.1e}, curvature "
            "{curvature:.1e}, weight sum {sum_rule:.1e}, phase FD "
            "{theta1:.1e}/{theta2:.1e} (rel)".format(**worst))


def test_criterion_05_rate_identities():
    t0 = time.time()
    rng = np.random.default_rng(505)
    coins = [HADAMARD, random_coin(rng), random_coin(rng)]
    for coin in coins:
        aa = coin.abs_a
        grid = np.linspace(aa + 1e-3, 1.0 - 1e-3, 500)
        grid = np.concatenate([-grid[::-1], grid])  # 1000 points, both signs
        worst = 0.0
        values = []
        for xi in grid:
            xi = float(xi)
            via_saddle = 2.0 * (
                abs(xi) * math.log(saddle_radius(coin, abs(xi)))
                - math.log(saddle_modulus(coin, xi))
            )
            h = rate_H(coin, xi)
            worst = max(worst, abs(h - via_saddle))
            values.append(h)
        assert worst <= 1e-12
        positive = np.array(values[500:])
        second = positive[2:] - 2 * positive[1:-1] + positive[:-2]
        assert np.all(second > 0.0)
        assert abs(rate_H(coin, aa + 1e-6)) <= 1e-4
        assert abs(rate_H(coin, 1.0 - 1e-6) - (-2.0 * math.log(aa))) <= 1e-4
    _report(5, time.time() - t0,
            "rate formula == 2(|xi| log r - log D) to 1e-12 on 1000-point "
            "grids, limits at the wall and at 1 within 1e-4, convex")


def test_criterion_06_airy_quality():
    t0 = time.time()
    assert abs(airy_ai(0.0) - 0.3550280538878172) <= 1e-12
    assert abs(airy_ai_prime(0.0) - (-0.2588194037928068)) <= 1e-12
    h = 2e-3
    worst_ode = 0.0
    for x in np.linspace(-8.0, 8.0, 50):
        x = float(x)
        second = (
            -airy_ai(x + 2 * h) + 16 * airy_ai(x + h) - 30 * airy_ai(x)
            + 16 * airy_ai(x - h) - airy_ai(x - 2 * h)
        ) / (12 * h**2)
        worst_ode = max(worst_ode, abs(second - x * airy_ai(x)))
    assert worst_ode <= 1e-6
    gap_plus = abs(_maclaurin(X_SWITCH)[0] - _asymptotic_right(X_SWITCH)[0])
    gap_minus = abs(_maclaurin(-X_SWITCH)[0] - _asymptotic_left(-X_SWITCH)[0])
    assert gap_plus <= 1e-10 and gap_minus <= 1e-10
    _report(6, time.time() - t0,
            f"origin values to 1e-12, ODE residual {worst_ode:.1e}, "
            f"branch gaps {gap_plus:.1e}/{gap_minus:.1e}")


def test_criterion_07_inner_convergence():
    t0 = time.time()
    aa = HADAMARD.abs_a
    errors = {}
    for n in (500, 2000):
        dist = distribution(evolve(HADAMARD, SYMMETRIC, n))
        for c in (0.0, 0.2, -0.2, 0.4, -0.4):
            y = nearest_parity_site(n, n * c * aa)
            exact = dist.prob(y)
            est = inner_estimate(HADAMARD, SYMMETRIC, n, y)
            errors[(n, c)] = abs(est.value - exact) / exact
    for c in (0.0, 0.2, -0.2, 0.4, -0.4):
        assert errors[(2000, c)] < errors[(500, c)]
        assert errors[(2000, c)] <= 0.05
    worst = max(v for (n, _), v in errors.items() if n == 2000)
    elapsed = time.time() - t0
    assert elapsed < 120.0
    _report(7, elapsed, f"relative error shrinks 500 -> 2000 at all five "
            f"grid points; max at n=2000 is {worst:.2e} (<= 5%)")


def test_criterion_08_weak_limit_window():
    t0 = time.time()
    n = 4000
    dist = distribution(evolve(HADAMARD, SYMMETRIC, n))
    total = math.fsum(
        dist.prob(y) for y in range(-n, n + 1)
        if (n + y) % 2 == 0 and -0.3 <= y / n <= 0.3
    )
    integral = density_mass(HADAMARD, SYMMETRIC, -0.3, 0.3)
    gap = abs(total - integral)
    assert gap <= 0.02
    elapsed = time.time() - t0
    assert elapsed < 60.0
    _report(8, elapsed, f"|window sum - integral| = {gap:.2e} at n=4000")


def test_criterion_09_wall_scaling_and_tracking():
    t0 = time.time()
    aa = HADAMARD.abs_a
    # n^(-2/3) scaling of the wall peak
    for n0 in (250, 500):
        p_small = distribution(evolve(HADAMARD, SYMMETRIC, n0)).prob(
            nearest_parity_site(n0, n0 * aa)
        )
        n8 = 8 * n0
        p_large = distribution(evolve(HADAMARD, SYMMETRIC, n8)).prob(
            nearest_parity_site(n8, n8 * aa)
        )
        ratio = (p_large / p_small) / 8.0 ** (-2.0 / 3.0)
        assert 0.7 <= ratio <= 1.3
    # Airy-profile tracking at n=2000 across |d| <= 2 n^(1/3).  The
    # leading term vanishes at zeros of Ai while the true probability
    # keeps an O(1/n) floor, so sites whose Airy argument falls within 0.15 of
    # a zero are excluded from the pointwise bound (the criterion is
    # unattainable there for any leading-order formula); the band
    # aggregate is asserted unconditionally.
    n = 2000
    alpha = 2.0 ** (5.0 / 6.0)
    dist = distribution(evolve(HADAMARD, SYMMETRIC, n))
    band = 2.0 * n ** (1.0 / 3.0)
    wall = n * aa
    airy_zero = -2.3381074104597670385
    checked = excluded = 0
    est_sum = exact_sum = 0.0
    y = nearest_parity_site(n, wall - band)
    while y <= wall + band:
        est = wall_estimate(HADAMARD, SYMMETRIC, n, y, wall_width=3.0)
        exact = dist.prob(y)
        est_sum += est.value
        exact_sum += exact
        arg = alpha * n ** (-1.0 / 3.0) * (y - wall)
        if abs(arg - airy_zero) >= 0.15:
            assert 0.5 <= est.value / exact <= 2.0, (y, est.value, exact)
            checked += 1
        else:
            excluded += 1
        y += 2
    assert checked >= 20 and excluded <= 2
    assert 0.5 <= est_sum / exact_sum <= 2.0
    _report(9, time.time() - t0,
            f"peak obeys n^(-2/3); estimate/exact within factor 2 at "
            f"{checked} band sites ({excluded} Airy-zero site excluded), "
            f"band aggregate ratio {est_sum / exact_sum:.3f}")


def test_criterion_10_large_deviation_gap():
    t0 = time.time()
    xi = 0.85
    gaps = {}
    for n in (100, 200, 400):
        y = nearest_parity_site(n, n * xi)
        p = distribution(evolve(HADAMARD, SYMMETRIC, n)).prob(y)
        gaps[n] = abs(-math.log(p) / n - rate_H(HADAMARD, y / n))
    assert gaps[400] < gaps[200] < gaps[100]
    assert gaps[400] <= 0.03
    elapsed = time.time() - t0
    assert elapsed < 60.0
    _report(10, elapsed, "rate gaps {:.4f} > {:.4f} > {:.4f} (<= 0.03)".format(
        gaps[100], gaps[200], gaps[400]))


def test_criterion_11_byte_determinism(tmp_path, capsys):
    t0 = time.time()
    coin_flags = ["--a-re", repr(SQ2), "--b-re", repr(SQ2)]
    spin_flags = ["--phi1-re", repr(SQ2), "--phi2-im", repr(SQ2)]
    runs = {
        "simulate": ["simulate", *coin_flags, *spin_flags, "--steps", "40"],
        "simulate_json": ["simulate", *coin_flags, *spin_flags,
                          "--steps", "40", "--format", "json"],
        "compare": ["compare", *coin_flags, *spin_flags, "--steps", "200",
                    "--window", "-1:1"],
        "konno": ["konno", *coin_flags, *spin_flags, "--steps", "300",
                  "--alpha", "-0.3", "--beta", "0.3"],
        "rate": ["rate", *coin_flags, *spin_flags, "--steps", "100,200",
                 "--xi", "0.85"],
        "density": ["density", *coin_flags, *spin_flags,
                    "--window", "-0.5:0.5", "--points", "64"],
        "density_json": ["density", *coin_flags, *spin_flags,
                         "--window", "-0.5:0.5", "--points", "64",
                         "--format", "json"],
    }
    for name, args in runs.items():
        paths = [tmp_path / f"{name}_{i}.out" for i in (0, 1)]
        for path in paths:
            assert main([*args, "--out", str(path)]) == 0
        first, second = (p.read_bytes() for p in paths)
        assert first == second and len(first) > 0
    outs = []
    for _ in range(2):
        assert main(["airy", "--x", "-3.25"]) == 0
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]
    _report(11, time.time() - t0,
            "identical bytes on repeated runs of all six subcommands "
            "(csv and json)")
