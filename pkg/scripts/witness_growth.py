#!/usr/bin/env python3
"""Certificate sizes of the BS(1,2) witness family next to the norms |f^n|.

The family t^n a t^-n a^(-2^n) has membership certificates of size exactly
2^n - 1; the same doubling shows up as the coefficient norms of (1 + t)^n.
Usage: python3 scripts/witness_growth.py [n_max]
"""

import sys

sys.path.insert(0, "src")

from metabelian.elements import Ambient, parse_element
from metabelian.presets import PresetSpec, build, norm_growth, witness_family
from metabelian.wordproblem import area_certificate


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 10

    p = build(PresetSpec("bs", n=2))
    family = witness_family(PresetSpec("bs", n=2))
    print("n,word_length,cert_size,witnessed_cost")
    for n in range(1, n_max + 1):
        w = family(n)[0]
        cert = area_certificate(w, p)
        print(f"{n},{w.length},{cert.membership.size},{cert.witnessed_cost}")

    ring = Ambient(("t",), (0,), 1, None, laurent=True)
    norms, alpha = norm_growth(parse_element("1 + t", ring), n_max)
    print("\nn,norm_of_(1+t)^n")
    for i, v in enumerate(norms, start=1):
        print(f"{i},{v}")
    print(f"fitted growth base: {alpha:.3f}")


if __name__ == "__main__":
    main()
