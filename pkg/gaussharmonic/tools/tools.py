# -*- coding: utf-8 -*-
"""
This module provides utility tools for the main functionality of the program:
configuration access, value conversion, validated dataclass fields and the
error classes raised by the arithmetic and congruence modules.

Functions:
    - config_manager: A function that manages configuration parameters.
    - configure_logging: Configures the root logger of the program.

Classes:
    - Validator: The descriptor for validating integer dataclass fields.
    - TypesManager: The class-wrapper for the conversion of the value to the needed type.

Errors:
    - CongruenceError: The base class for all domain errors of the program.
    - GaussianZeroDivisionError: Division by the zero Gaussian integer.
    - InvalidBaseError, NotInvertibleError, OracleLimitExceededError, LimitExceededError,
      EmptyPolynomialError, NotPIntegralError, BadResidueClassError, MalformedSpecError,
      CheckpointError: Domain errors of the separate operations.

Decorators:
    - logging_error: Decorator for logging domain errors and converting them to exit codes.

"""


import ast
import logging
import os
import re
import sys
import typing as ty
from functools import wraps

from gaussharmonic.config import CONFIG_DIR


__all__ = (
    'Validator', 'TypesManager', 'config_manager', 'configure_logging', 'logging_error',
    'CongruenceError', 'GaussianZeroDivisionError', 'InvalidBaseError', 'NotInvertibleError',
    'OracleLimitExceededError', 'LimitExceededError', 'EmptyPolynomialError', 'NotPIntegralError',
    'BadResidueClassError', 'MalformedSpecError', 'CheckpointError',
)


logger = logging.getLogger(__name__)


ENV_PREFIX = 'GW_'


##########
# Errors #
##########

class CongruenceError(ValueError):
    """
    The base class for all domain errors of the program.

    Attributes:
        exit_code (int): The process exit code used by the CLI for this error.

    """
    exit_code = 2


class GaussianZeroDivisionError(ZeroDivisionError, CongruenceError):
    """Reciprocal of the zero Gaussian integer."""


class InvalidBaseError(CongruenceError):
    """Valuation base smaller than 2."""


class NotInvertibleError(CongruenceError):
    """Residue whose norm shares a factor with the modulus base."""


class OracleLimitExceededError(CongruenceError):
    """Exact rational sum requested for a base above the oracle limit."""


class LimitExceededError(CongruenceError):
    """Expansion or product requested above its configured limit."""
    exit_code = 1


class EmptyPolynomialError(CongruenceError):
    """Degree query on the zero polynomial."""


class NotPIntegralError(CongruenceError):
    """Rational value whose reduced denominator is divisible by p."""


class BadResidueClassError(CongruenceError):
    """Modulus outside the residue classes 1, 5 mod 6."""


class MalformedSpecError(CongruenceError):
    """Inconsistent input parameters."""


class CheckpointError(CongruenceError):
    """Corrupt checkpoint or checkpoint written with other parameters."""


#########
# Tools #
#########

class Validator:
    # noinspection PyUnresolvedReferences
    """
    The descriptor for validating integer dataclass fields.

    The descriptor coerces the assigned value to int (strings coming from
    the command line are accepted), substitutes the default value when the
    dataclass argument is omitted and rejects values below the minimum.

    Attributes:
        default (Optional[int]): The default value, None if the field is required.
        minimum (Optional[int]): The smallest accepted value.
        error (Type[CongruenceError]): The error raised for rejected values.

    Sample using dataclass with required and default fields:

    .. code-block:: python

        >> @dataclass
        >> class Spec:
        >>     base: int = Validator(minimum=2, error=InvalidBaseError)
        >>     k: int = Validator(1, minimum=1)
        >>
        >>
        >> Spec('7').base
        7
        >> Spec(7).k
        1
        >> Spec(1)
        InvalidBaseError: Field 'Spec.base' must be >= 2, now 1.

    """
    def __init__(self, default: ty.Optional[int] = None, minimum: ty.Optional[int] = None,
                 error: ty.Type[CongruenceError] = MalformedSpecError) -> None:
        self._default = default
        self._minimum = minimum
        self._error = error

    def __set_name__(self, owner: ty.Any, name: str) -> None:
        self._public_name = name
        self._private_name = '_' + name

    def __get__(self, obj: ty.Any, owner: ty.Any) -> ty.Any:
        # Dataclass machinery reads the class attribute to find the field default.
        if obj is None:
            return self
        return getattr(obj, self._private_name)

    def __set__(self, obj: ty.Any, value: ty.Any) -> None:
        owner_name = f'{type(obj).__name__}.{self._public_name}'

        if value is self:
            value = self._default
        if value is None:
            msg = f"Field '{owner_name}' is required."
            logger.error(msg)
            raise self._error(msg)

        try:
            value = int(value)
        except (TypeError, ValueError):
            msg = f"Field '{owner_name}' must be an integer, now {value!r}."
            logger.error(msg)
            raise self._error(msg) from None

        if self._minimum is not None and value < self._minimum:
            msg = f"Field '{owner_name}' must be >= {self._minimum}, now {value}."
            logger.error(msg)
            raise self._error(msg)

        setattr(obj, self._private_name, value)


class TypesManager:
    # noinspection PyUnresolvedReferences
    """
    The class-wrapper for the conversion of the value to the needed type.

    Create and return a new object: a string literal is parsed into the
    basic Python value, then the value is optionally rendered back to
    source text and quoted.

    Attributes:
        value: The value to be converted to the needed type.
        as_string (bool, optional): Whether to convert the value to string type. Defaults to False.
        quoting (bool, optional): Whether to quote the value. Defaults to False.

    Samples:

    .. code-block:: python

        >> TypesManager('8')
        8
        >> TypesManager('WARNING')
        'WARNING'
        >> TypesManager(8, as_string=True)
        '8'
        >> TypesManager('WARNING', quoting=True)
        "'WARNING'"
        >> TypesManager('None')
        None

    """
    def __new__(cls, value: ty.Any, as_string: bool = False, quoting: bool = False) -> ty.Any:
        if isinstance(value, str):
            value = cls._parse(value)
        if as_string or quoting:
            value = value if isinstance(value, str) else repr(value)
        if quoting:
            value = cls._quote(value)
        return value

    @staticmethod
    def _parse(value: str) -> ty.Any:
        """
        The method parses the value from string to basic Python type.

        Strings which are not Python literals are returned unchanged.

        """
        try:
            return ast.literal_eval(value)
        except (ValueError, SyntaxError):
            return value

    @staticmethod
    def _quote(value: str) -> str:
        """
        The method quotes the value.

        If the value already contains single quotes, it is double-quoted.

        """
        if "'" in value:
            return f'"{value}"'
        return f"'{value}'"


def config_manager(param: str, new_val: ty.Any = None) -> ty.Any:
    """
    A function that manages configuration parameters.

    This function reads the configuration file specified by CONFIG_DIR, searches for the
    specified configuration parameter, and returns its current value. An environment
    variable named 'GW_' + param overrides the file value on reading. If a new value is
    provided, the function updates the configuration file with the new value and logs a
    warning about the change.

    Args:
        param (str): The name of the configuration parameter to manage.
        new_val (Any, optional): The new value for the configuration parameter. Defaults to None.

    Returns:
        Any: The current value of the configuration parameter if new value is not provided,
        or None if the configuration parameter does not exist.

    Raises:
        FileNotFoundError: If the configuration file specified by CONFIG_DIR does not exist.

    Getting param samples:

    .. code-block:: python

        >> config_manager('PRIME_PRECISION')
        8
        >> os.environ['GW_ORACLE_LIMIT'] = '80'
        >> config_manager('ORACLE_LIMIT')
        80

    Setting param sample:

    .. code-block:: python

        >> config_manager('LOGGING_LEVEL', 'INFO')

    """
    pattern = re.compile(rf'^(?P<name>{re.escape(param)}) = (?P<value>.+)$', re.MULTILINE)

    with open(CONFIG_DIR, 'r', encoding='UTF-8') as config_file:
        current_config_data = config_file.read()
    matched_param = re.search(pattern, current_config_data)

    if matched_param is None:
        return None

    if new_val is None:
        env_value = os.environ.get(ENV_PREFIX + param)
        if env_value is not None:
            return TypesManager(env_value)
        return TypesManager(matched_param.group('value'))

    if isinstance(new_val, str):
        new_val = TypesManager(new_val)
    new_text = TypesManager(new_val, quoting=isinstance(new_val, str), as_string=True)

    updated_config_data = (
        current_config_data[:matched_param.start('value')] +
        new_text +
        current_config_data[matched_param.end('value'):]
    )
    with open(CONFIG_DIR, 'w', encoding='UTF-8') as config_file:
        config_file.write(updated_config_data)
    logger.warning(f'Config params changed: now {param} = {new_text}!')


def logging_error(func: ty.Callable[..., int]) -> ty.Callable[..., int]:
    """
    Decorator for logging domain errors in the CLI command.

    The decorated command returns its own exit code; a CongruenceError
    raised inside is logged and converted to the error's exit code.

    Args:
        func (Callable[..., int]): The command to be decorated.

    Returns:
        Callable[..., int]: The decorated command.

    """
    @wraps(func)
    def wrapper(*args, **kwargs) -> int:
        try:
            return func(*args, **kwargs)
        except CongruenceError as err:
            logger.error(f'{type(err).__name__}: {err}')
            return err.exit_code

    return wrapper


def configure_logging(level: ty.Optional[str] = None) -> None:
    """
    Configures the root logger of the program.

    Records go to stderr in the LOGGING_FORMAT layout, so the report
    written to stdout stays clean.

    Args:
        level (str, optional): The logging level name. Defaults to LOGGING_LEVEL from config.

    """
    level = (level or config_manager('LOGGING_LEVEL') or 'WARNING').upper()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(config_manager('LOGGING_FORMAT')))
    logging.basicConfig(level=level, handlers=[handler], force=True)
