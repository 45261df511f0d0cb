#!/usr/bin/env python3
"""Reproduce the polynomial-vs-exponential certificate growth at desk scale.

Runs the growth profile for the free-abelian, BS(1,2) and W_F presets and
prints the fitted power-law exponent / log-linear slope of the certificate
size columns.  Usage: python3 scripts/profile_dichotomy.py [n_max]
"""

import sys

sys.path.insert(0, "src")

from metabelian.presets import PresetSpec, build, witness_family
from metabelian.wordproblem import dehn_profile, fit_exp, fit_power


def show(title, rows):
    print(f"\n== {title}")
    print("n,max_witnessed,max_cert_size,bound")
    for row in rows:
        print(",".join(str(x) for x in row))


def main():
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 8

    free_abelian = build(PresetSpec("free_abelian"))
    rows = dehn_profile(free_abelian, n_max, samples=10, seed=0,
                        witnesses=witness_family(PresetSpec("free_abelian")))
    show("free abelian Z^2", rows)
    ns, sizes = [r[0] for r in rows], [r[2] for r in rows]
    print(f"power-law exponent of cert sizes: {fit_power(ns, sizes):.2f}"
          " (polynomial regime)")

    for name, spec in (("BS(1,2)", PresetSpec("bs", n=2)),
                       ("W_F (f = 1 + t)", PresetSpec("wf", r=1, k=1))):
        p = build(spec)
        rows = dehn_profile(p, n_max, samples=3, seed=0,
                            witnesses=witness_family(spec))
        show(name, rows)
        ns, sizes = [r[0] for r in rows], [r[2] for r in rows]
        print(f"log-linear slope of cert sizes: {fit_exp(ns, sizes):.2f}"
              " (exponential regime)")


if __name__ == "__main__":
    main()
