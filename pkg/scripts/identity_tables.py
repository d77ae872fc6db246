#!/usr/bin/env python3
"""Convergence tables for the five identities at their reference arguments."""

import argparse
import sys

from solitonlab.identities import REGISTRY, convergence_order, ram_arctan_sum

CASES = [
    ("ram_cos_product", (0.3 + 0j, 0.2 + 0j)),
    ("ram_arctan_sum", (1.0, 0.7)),
    ("scherk_identity", (2 + 0j,)),
    ("helicoid2_identity", (1 + 1j,)),
    ("lorentz_helicoid_identity", (1 + 1j,)),
]


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--K", default="100,1000,10000")
    args = ap.parse_args()
    K_list = [int(k) for k in args.K.split(",")]

    for name, ident_args in CASES:
        print(f"\n== {name}  args={ident_args}")
        print(f"{'K':>8s} {'partial':>24s} {'abs_err':>12s} {'order':>7s}")
        for r in convergence_order(REGISTRY[name], ident_args, K_list):
            p = r.partial
            ps = f"{p.real:.10f}" if abs(p.imag) < 1e-12 else f"{p:.8f}"
            print(f"{r.K:8d} {ps:>24s} {r.abs_err:12.3e} {r.est_order:7.3f}")

    print("\n== ram_arctan_sum with closed-form tail correction")
    for K in K_list:
        raw = ram_arctan_sum(1.0, 0.7, K)
        cor = ram_arctan_sum(1.0, 0.7, K, tail_correction=True)
        print(f"K={K:7d}  raw={raw.abs_err:.3e}  corrected={cor.abs_err:.3e}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
