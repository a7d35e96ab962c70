# -*- coding: utf-8 -*-
"""
This package contains the command-line surface of the program.

Modules:
    - reports: Module renders command results as table, CSV or JSON text.
    - scanner: Module drives the bulk scans with a worker pool and a resumable checkpoint.
    - commands: Module contains the argparse parser and the command handlers.

"""


from gaussharmonic.cli.reports import *
from gaussharmonic.cli.scanner import *
from gaussharmonic.cli.commands import *
