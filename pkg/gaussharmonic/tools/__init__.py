# -*- coding: utf-8 -*-
"""
This package provides utility tools for the main functionality of the program
and the exact arithmetic every computation is built on.

Modules:
    - tools: Module provides configuration access, validated fields and error classes.
    - gint: Module contains Gaussian integers, Gaussian rationals and valuations.
    - modring: Module contains the arithmetic of the finite ring Z[i]/b^M.

"""


from gaussharmonic.tools.tools import *
from gaussharmonic.tools.gint import *
from gaussharmonic.tools.modring import *
