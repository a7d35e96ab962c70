# -*- coding: utf-8 -*-
"""
The module running the program.

"""


import sys

from gaussharmonic.cli.commands import main as run_command


def main():
    """
    The function runs the command given on the command line and exits with its code.

    """
    sys.exit(run_command(sys.argv[1:]))


if __name__ == '__main__':
    main()
