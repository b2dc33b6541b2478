#!/usr/bin/env python3
"""Ballistic spreading of a coined walk and its limit density.

Runs the symmetric Hadamard walk, prints how the probability mass
organizes itself inside the cone |y| < n/sqrt(2), and checks window sums
against the closed-form limit density.
"""

import math

from qwline import (
    density_mass,
    density_rho,
    distribution,
    evolve,
    make_coin,
    make_spinor,
)

SQ2 = 1.0 / math.sqrt(2.0)


def main():
    coin = make_coin(SQ2, SQ2)
    phi = make_spinor(SQ2, SQ2 * 1j)  # symmetric start: zero skew

    print("Hadamard walk, symmetric initial spin")
    print("=" * 60)

    n = 600
    dist = distribution(evolve(coin, phi, n))
    print(f"\nAfter n = {n} steps: total mass = {dist.total():.15f}")
    print(f"probability at the origin  : {dist.prob(0):.6e}")
    print(f"  limit density / n there  : {density_rho(coin, phi, 0.0) * 2 / n:.6e}")
    peak = max(dist.sites, key=lambda y: dist.prob(int(y)))
    print(f"most likely site           : y = {int(peak)} "
          f"(y/n = {int(peak) / n:+.3f}, wall at {coin.abs_a:+.3f})")

    print("\nWindow sums vs. integrated limit density:")
    print(f"{'window':>16} {'sum of p_n':>12} {'integral':>12} {'gap':>10}")
    for lo, hi in [(-0.2, 0.2), (-0.5, 0.5), (0.1, 0.6), (-0.7, 0.7)]:
        total = math.fsum(
            dist.prob(y) for y in range(-n, n + 1)
            if (n + y) % 2 == 0 and lo <= y / n <= hi
        )
        integral = density_mass(coin, phi, lo, hi)
        print(f"  [{lo:+.2f},{hi:+.2f}] {total:12.6f} {integral:12.6f} "
              f"{abs(total - integral):10.2e}")

    print("\nThe gaps shrink like 1/n: same windows at n = 2400:")
    n = 2400
    dist = distribution(evolve(coin, phi, n))
    for lo, hi in [(-0.2, 0.2), (0.1, 0.6)]:
        total = math.fsum(
            dist.prob(y) for y in range(-n, n + 1)
            if (n + y) % 2 == 0 and lo <= y / n <= hi
        )
        integral = density_mass(coin, phi, lo, hi)
        print(f"  [{lo:+.2f},{hi:+.2f}] gap = {abs(total - integral):10.2e}")


if __name__ == "__main__":
    main()
