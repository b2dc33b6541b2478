#!/usr/bin/env python3
"""The Airy profile at the edge of the ballistic cone.

At sites a distance O(n^(1/3)) from y = n|a| the exact probabilities
follow 2 alpha^2 n^(-2/3) Ai(alpha n^(-1/3) d)^2; this script prints the
two profiles side by side and verifies the n^(-2/3) peak scaling.
"""

import math

from qwline import (
    distribution,
    evolve,
    make_coin,
    make_spinor,
    nearest_parity_site,
    wall_estimate,
)

SQ2 = 1.0 / math.sqrt(2.0)


def main():
    coin = make_coin(SQ2, SQ2)
    phi = make_spinor(SQ2, SQ2 * 1j)
    n = 2000
    dist = distribution(evolve(coin, phi, n))
    wall = n * coin.abs_a

    print(f"Right wall of the Hadamard walk at n = {n} (wall at y = {wall:.1f})")
    print(f"{'y':>6} {'d = y - n|a|':>13} {'exact':>12} {'Airy formula':>13} {'ratio':>8}")
    y = nearest_parity_site(n, wall - 22)
    while y <= wall + 22:
        est = wall_estimate(coin, phi, n, y)
        exact = dist.prob(y)
        ratio = est.value / exact if exact > 0 else float("inf")
        print(f"{y:6d} {y - wall:13.2f} {exact:12.4e} {est.value:13.4e} {ratio:8.3f}")
        y += 2

    print("\nPeak height scaling: p_n(wall site) * n^(2/3) should level off")
    print(f"{'n':>6} {'p_n(peak)':>12} {'p * n^(2/3)':>12}")
    for m in (250, 500, 1000, 2000, 4000):
        d = distribution(evolve(coin, phi, m))
        p = d.prob(nearest_parity_site(m, m * coin.abs_a))
        print(f"{m:6d} {p:12.4e} {p * m ** (2.0 / 3.0):12.5f}")


if __name__ == "__main__":
    main()
