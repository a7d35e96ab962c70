# -*- coding: utf-8 -*-
"""
This package contains the mathematical content of the program: reciprocal
power sums of Gaussian integers and their classical analogues, the symbolic
expansion of the conjugate 8-tuples and the polynomial analogues.

Modules:
    - sums: Module contains the congruence sums, their classification and the classical checks.
    - sympoly: Module contains sparse polynomials in m, n, p and the tuple expansions.
    - gpoly: Module contains g_p(x), Gaussian binomial coefficients and their congruences.

"""


from gaussharmonic.congruences.sums import *
from gaussharmonic.congruences.sympoly import *
from gaussharmonic.congruences.gpoly import *
