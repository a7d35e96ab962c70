# -*- coding: utf-8 -*-
"""
Module contains program configuration settings.

"""


from pathlib import Path


####################
# Program settings #
####################
#       Paths      #
####################
ROOT_DIR = Path(__file__).resolve().parent
CONFIG_DIR = ROOT_DIR / 'config.py'

#######################
# Arithmetic settings #
#######################
PRIME_PRECISION = 8
COMPOSITE_PRECISION = 4

##################
# Limit settings #
##################
ORACLE_LIMIT = 50
TUPLE_K_LIMIT = 12
GPOLY_P_LIMIT = 100
COMPOSITE_K_MAX = 8

#####################
# Scanning settings #
#####################
SCAN_K_MAX = 12
CHECKPOINT_SCHEMA_VERSION = 1

####################
# Logging settings #
####################
LOGGING_FORMAT = '%(asctime)s [%(levelname)s]: %(message)s'
LOGGING_LEVEL = 'WARNING'
