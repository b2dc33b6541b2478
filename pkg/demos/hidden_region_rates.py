#!/usr/bin/env python3
"""Exponential decay outside the cone and the rate function.

Outside |y| = n|a| the walk's probabilities die off like
exp(-n H(y/n)).  This script extracts -log(p_n)/n from exact runs,
watches it converge onto the closed-form rate H, and shows the
oscillatory interior estimate for contrast.
"""

import math

from qwline import (
    distribution,
    estimate,
    evolve,
    hidden_data,
    make_coin,
    make_spinor,
    nearest_parity_site,
    rate_H,
)

SQ2 = 1.0 / math.sqrt(2.0)


def main():
    coin = make_coin(SQ2, SQ2)
    phi = make_spinor(SQ2, SQ2 * 1j)

    xi = 0.85
    print(f"Hadamard walk at normalized position xi = {xi} (hidden region)")
    print(f"closed-form rate H({xi}) = {rate_H(coin, xi):.6f}")
    print(f"amplitude weight G({xi}) = {hidden_data(coin, phi, xi).G:.6f}\n")

    print(f"{'n':>6} {'y':>6} {'p_n(y)':>12} {'-log p / n':>12} {'H(y/n)':>10} {'gap':>10}")
    for n in (100, 200, 400, 800):
        y = nearest_parity_site(n, n * xi)
        p = distribution(evolve(coin, phi, n)).prob(y)
        emp = -math.log(p) / n
        lim = rate_H(coin, y / n)
        print(f"{n:6d} {y:6d} {p:12.3e} {emp:12.6f} {lim:10.6f} "
              f"{abs(emp - lim):10.2e}")

    print("\nOne dispatcher covers all three regimes (n = 1000):")
    n = 1000
    dist = distribution(evolve(coin, phi, n))
    print(f"{'y':>6} {'regime':>12} {'estimate':>12} {'exact':>12}")
    for y in (0, 300, nearest_parity_site(n, n * coin.abs_a), 800, 900):
        est = estimate(coin, phi, n, y)
        print(f"{y:6d} {est.region.kind.value:>12} {est.value:12.4e} "
              f"{dist.prob(y):12.4e}")


if __name__ == "__main__":
    main()
