#!/usr/bin/env python3
"""Run the estimate probes across the exponent plane and print a summary.

For a grid of (s, l) pairs: region membership, the necessity exponents of
the family pairs, and the worst bilinear ratio on a small seeded corpus.
"""

import argparse
import warnings

import numpy as np

import qzlab as qz


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--draws", type=int, default=50)
    ap.add_argument("--b", type=float, default=0.5)
    ap.add_argument("--rho", type=float, default=0.5)
    args = ap.parse_args()
    warnings.simplefilter("ignore")

    params = qz.PropagatorParams(1.0, 1.0, 1.0)
    n_list = [8, 16, 32, 64, 128]
    print(f"{'(s,l)':>12} {'local':>6} {'global':>7} " + " ".join(f"p{i}" for i in range(1, 9)))
    for s, l in [(0.0, 0.0), (0.0, -1.0), (1.0, 0.5), (2.0, 1.0), (0.0, -1.5), (3.0, 0.0)]:
        in_l, in_g = qz.region_membership(s, l)
        exps = []
        for pair in range(1, 9):
            pt = qz.ExponentPoint(s, l, args.b, args.rho)
            rep = qz.necessity_scan(pair, pt, args.rho, params, n_list)
            exps.append(f"{rep.fitted_exponent:+.2f}")
        print(f"({s:4g},{l:4g}) {str(in_l):>6} {str(in_g):>7} " + " ".join(exps))

    rng = np.random.default_rng(args.seed)
    grid = qz.TorusGrid(32)
    taus = np.linspace(-48.0, 48.0, 129)
    point = qz.ExponentPoint(0.0, 0.0, 0.49, args.rho)
    worst_s = worst_w = 0.0
    for i in range(args.draws):
        u, n = qz.draw_corpus_pair(rng, grid, taus, params, adversarial=(i % 10 == 9))
        worst_s = max(worst_s, qz.bilinear_ratio_schrodinger(u, n, point, params).ratio)
        worst_w = max(worst_w, qz.bilinear_ratio_wave(u, n, point, params).ratio)
    print(f"worst bilinear ratios over {args.draws} draws: "
          f"schrodinger {worst_s:.4f}, wave {worst_w:.4f}")


if __name__ == "__main__":
    main()
