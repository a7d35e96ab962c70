# -*- coding: utf-8 -*-
"""
Computation, verification and scanning of Wolstenholme-type congruences
for sums of reciprocal powers of Gaussian integers.

Packages:
    - tools: Utility tools and exact arithmetic in Z[i], Q(i) and Z[i]/b^M.
    - congruences: Congruence sums, tuple expansions and polynomial analogues.
    - cli: Command-line orchestration, parallel scans and report rendering.

"""
