# -*- coding: utf-8 -*-
"""
This module contains the command-line surface of the program: the argparse
parser and one cmd_* handler per subcommand.

Every handler takes the parsed namespace, writes its report to stdout or
--out and returns the process exit code. Domain errors are converted to
exit codes by the logging_error decorator; usage errors exit with 2.

Functions:
    - build_parser: Returns the argument parser with all subcommands.
    - cmd_verify: Classifies one sum S_b^(k).
    - cmd_scan: Classifies the prime sums up to a bound and reports the anomalies.
    - cmd_tuple: Prints slices of the expanded conjugate tuple.
    - cmd_gpoly: Prints g_p(x) mod p and its pattern report.
    - cmd_gpoly_low: Prints the lowest coefficients of g_p(x) mod p^M.
    - cmd_binom: Prints a Gaussian binomial coefficient.
    - cmd_binom_check: Checks the binomial congruences for given p, A, B.
    - cmd_lucas_check: Prints the Lucas-type comparison report.
    - cmd_composite: Scans the composite bases.
    - cmd_classical: Prints the classical harmonic checks for one prime.
    - cmd_power_sum_w: Prints the Gaussian power sum W^(k)(A+Bi).
    - cmd_lemma: Checks the lemma sums and the power-sum vanishing rule.
    - main: Parses the arguments, configures logging and dispatches the command.

"""


import argparse
import logging
import math
import typing as ty

import sympy

from gaussharmonic.config import LOGGING_LEVEL
from gaussharmonic.tools.tools import config_manager, configure_logging, logging_error
from gaussharmonic.tools.gint import Valuation
from gaussharmonic.tools.modring import residue_valuation
from gaussharmonic.congruences.sums import (
    REFERENCE_COMPOSITES,
    classify, compare_with_reference, compare_with_table, lemma_residue, lemma_parts_residue, power_sum_residue,
    wolstenholme_check, classical_poly_check, integer_binomial_check, glaisher_check,
    leudesdorf_check, gauss_power_sum, require_prime,
)
from gaussharmonic.congruences.sympoly import SliceMode, expand_tuple, lowest_slice, truncate_pdeg
from gaussharmonic.congruences.gpoly import (
    GaussBinomSpec, gauss_binom, gpoly_mod_p, gpoly_pattern_check, gpoly_low_coeffs,
    shifted_product_check, central_binom_check, lucas_check,
)
from gaussharmonic.cli.reports import FORMATS, records_frame, render_frame, render_rows, write_output
from gaussharmonic.cli.scanner import scan_primes, select_anomalies, scan_composites


__all__ = (
    'build_parser', 'main',
    'cmd_verify', 'cmd_scan', 'cmd_tuple', 'cmd_gpoly', 'cmd_gpoly_low', 'cmd_binom', 'cmd_binom_check',
    'cmd_lucas_check', 'cmd_composite', 'cmd_classical', 'cmd_power_sum_w', 'cmd_lemma',
)


logger = logging.getLogger(__name__)


LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


###########
# Helpers #
###########

def _valuation(value: Valuation) -> ty.Union[int, str]:
    return 'inf' if value == math.inf else int(value)


def _emit(args: argparse.Namespace, rows: ty.Sequence[ty.Mapping[str, ty.Any]],
          text: ty.Optional[str] = None) -> None:
    """Writes plain text for the table format when given, the rendered rows otherwise."""
    if args.format == 'table' and text is not None:
        write_output(text, args.out)
    else:
        write_output(render_rows(rows, args.format), args.out)


############
# Commands #
############

@logging_error
def cmd_verify(args: argparse.Namespace) -> int:
    precision = args.precision or config_manager('PRIME_PRECISION')
    record = classify(args.base, args.k, precision)
    write_output(render_frame(records_frame([record]), args.format), args.out)
    return 0 if record.holds else 1


@logging_error
def cmd_scan(args: argparse.Namespace) -> int:
    records = scan_primes(args.p_max, args.k_max, args.precision, args.jobs, args.checkpoint)
    selected = select_anomalies(records, args.emit_all)
    diagnostics = compare_with_table(records)
    text = render_frame(records_frame(selected), args.format)
    if args.format == 'table':
        for key, rows in diagnostics.items():
            if rows:
                cases = ', '.join(f'p={p} k={k} {kind} {observed}' for p, k, kind, observed in rows)
                text += f'{key}: {cases}\n'
    write_output(text, args.out)
    return 0


@logging_error
def cmd_tuple(args: argparse.Namespace) -> int:
    parts = [part for part in ('numerator', 'denominator') if getattr(args, part)] or ['numerator', 'denominator']

    if args.lowest:
        d, numerator, denominator = lowest_slice(args.k)
        selected = {'numerator': (d, numerator), 'denominator': (0, denominator)}
    else:
        expansion = expand_tuple(args.k)
        selected = {}
        for part in parts:
            poly = getattr(expansion, part)
            if args.pdeg_equal is not None:
                selected[part] = (args.pdeg_equal, truncate_pdeg(poly, SliceMode.EQUAL, args.pdeg_equal))
            elif args.pdeg_at_most is not None:
                selected[part] = (args.pdeg_at_most, truncate_pdeg(poly, SliceMode.AT_MOST, args.pdeg_at_most))
            else:
                selected[part] = (None, poly)

    rows = [{'k': args.k, 'part': part, 'pdeg': selected[part][0], 'polynomial': str(selected[part][1])}
            for part in parts]
    text = ''.join(f'{row["part"]} = {row["polynomial"]}\n' for row in rows)
    _emit(args, rows, text)
    return 0


@logging_error
def cmd_gpoly(args: argparse.Namespace) -> int:
    poly = gpoly_mod_p(args.p)
    row = {'p': args.p, 'polynomial': str(poly)}
    text = f'g_{args.p}(x) = {poly} (mod {args.p})\n'
    if args.p >= 7:
        report = gpoly_pattern_check(args.p, poly)
        row.update(report.to_dict())
        row['coefficients'] = ' '.join(map(str, report.coefficients))
        text += (f'degree {report.degree} (nominal {report.nominal_degree}), '
                 f'pattern {"holds" if report.holds else "fails"}, '
                 f'coefficients {"real" if report.real_coefficients else "complex"}\n')
    _emit(args, [row], text)
    return 0


@logging_error
def cmd_gpoly_low(args: argparse.Namespace) -> int:
    precision = args.precision or 5
    coefficients = gpoly_low_coeffs(args.p, args.count, precision)
    rows = []
    for j, coefficient in enumerate(coefficients):
        re, im = coefficient.signed()
        observed, saturated = residue_valuation(coefficient)
        rows.append({
            'p': args.p,
            'coefficient': f'a_(r-{j})' if j else 'a_r',
            're': re,
            'im': im,
            'valuation': f'>={observed}' if saturated else observed,
        })
    _emit(args, rows)
    return 0


@logging_error
def cmd_binom(args: argparse.Namespace) -> int:
    spec = GaussBinomSpec(args.A, args.B, args.C, args.D)
    value = gauss_binom(spec)
    _emit(args, [{'binomial': str(spec), 'value': str(value)}], f'{spec} = {value}\n')
    return 0


@logging_error
def cmd_binom_check(args: argparse.Namespace) -> int:
    central = args.p >= 7 and args.p % 4 == 3
    row = {
        'p': args.p, 'A': args.A, 'B': args.B,
        'shifted_product': shifted_product_check(args.p, args.A, args.B),
        'central_binomial': central_binom_check(args.p, args.A, args.B) if central else None,
    }
    _emit(args, [row])
    return 0 if row['shifted_product'] and row['central_binomial'] is not False else 1


@logging_error
def cmd_lucas_check(args: argparse.Namespace) -> int:
    report = lucas_check(args.p, args.A, args.B, args.C, args.D)
    _emit(args, [report.to_dict()])
    return 0


@logging_error
def cmd_composite(args: argparse.Namespace) -> int:
    results = scan_composites(args.n_max, args.k_max, args.precision, args.jobs)
    diagnostics = compare_with_reference(results, REFERENCE_COMPOSITES)
    rows = [
        {'base': result.base, 'holds': result.holds, 'failing_k': ' '.join(map(str, result.failing_k))}
        for result in results if args.emit_all or result.holds
    ]
    text = None
    if args.format == 'table':
        passing = ', '.join(str(result.base) for result in results if result.holds)
        text = f'passing: {passing}\n'
        for key, bases in diagnostics.items():
            if bases:
                text += f'{key}: {", ".join(map(str, bases))}\n'
        if args.emit_all:
            text = render_rows(rows, 'table') + text
    _emit(args, rows, text)
    return 0


@logging_error
def cmd_classical(args: argparse.Namespace) -> int:
    require_prime(args.p, minimum=5)
    row = {
        'p': args.p,
        'harmonic': _valuation(wolstenholme_check(args.p)),
        'polynomial': _valuation(classical_poly_check(args.p)),
        'binomial': _valuation(integer_binomial_check(args.p, args.n)),
    }
    if args.glaisher:
        row['glaisher'] = _valuation(glaisher_check(args.p))
    if args.leudesdorf is not None:
        row['leudesdorf_n'] = args.leudesdorf
        row['leudesdorf'] = _valuation(leudesdorf_check(args.leudesdorf))
    _emit(args, [row])
    return 0


@logging_error
def cmd_power_sum_w(args: argparse.Namespace) -> int:
    value = gauss_power_sum(args.k, args.A, args.B)
    _emit(args, [{'k': args.k, 'A': args.A, 'B': args.B, 'value': str(value)}],
          f'W^({args.k})({args.A}+{args.B}i) = {value}\n')
    return 0


@logging_error
def cmd_lemma(args: argparse.Namespace) -> int:
    rows, failed = [], False
    for p in sympy.primerange(3, args.p_max + 1):
        p = int(p)
        mixed, squared = lemma_parts_residue(p)
        rule = all(
            power_sum_residue(p, q) == ((p - 1) if q % (p - 1) == 0 else 0)
            for q in range(1, 4 * (p - 1) + 1)
        )
        row = {'p': p, 'lemma': lemma_residue(p), 'mixed': mixed, 'squared': squared, 'power_sum_rule': rule}
        vanishing = row['lemma'] == 0 and mixed == 0 and squared == 0
        if p > 5 and not (vanishing and rule):
            failed = True
            logger.warning(f'Lemma sums do not vanish for p = {p}: {row}.')
        if args.emit_all or (p > 5 and not (vanishing and rule)):
            rows.append(row)
    columns = ('p', 'lemma', 'mixed', 'squared', 'power_sum_rule')
    write_output(render_rows(rows, args.format, columns), args.out)
    return 1 if failed else 0


##########
# Parser #
##########

def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='table', help='output format')
    common.add_argument('--out', default=None, help='write the report to this file instead of stdout')
    common.add_argument('--precision', type=int, default=None, help='precision M of the modulus b^M')
    common.add_argument('--jobs', type=int, default=None, help='worker processes, defaults to the CPU count')
    common.add_argument('--checkpoint', default=None, help='JSON checkpoint file of a resumable scan')
    common.add_argument('--all', dest='emit_all', action='store_true', help='emit every row, not only anomalies')
    common.add_argument('--log-level', type=str.upper, choices=LOG_LEVELS, default=None,
                        help=f'logging level, defaults to {LOGGING_LEVEL}')
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    Returns the argument parser with all subcommands.

    The global flags are accepted after the subcommand name.

    .. code-block:: python

        >> build_parser().parse_args(['verify', '--base', '31', '--k', '1']).base
        31

    """
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog='gauss-wolstenholme',
        description='Wolstenholme-type congruences for reciprocal power sums of Gaussian integers.',
    )
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    def add(name: str, handler: ty.Callable[[argparse.Namespace], int], help_text: str) -> argparse.ArgumentParser:
        sub = commands.add_parser(name, parents=[common], help=help_text, description=help_text)
        sub.set_defaults(handler=handler)
        return sub

    sub = add('verify', cmd_verify, 'classify one sum S_b^(k)')
    sub.add_argument('--base', type=int, required=True)
    sub.add_argument('--k', type=int, required=True)

    sub = add('scan', cmd_scan, 'classify S_p^(k) for all primes up to p-max')
    sub.add_argument('--p-max', type=int, required=True)
    sub.add_argument('--k-max', type=int, default=None)

    sub = add('tuple', cmd_tuple, 'expand the conjugate tuple T(m, n, k)')
    sub.add_argument('--k', type=int, required=True)
    sub.add_argument('--numerator', action='store_true')
    sub.add_argument('--denominator', action='store_true')
    slicing = sub.add_mutually_exclusive_group()
    slicing.add_argument('--pdeg-equal', type=int, default=None)
    slicing.add_argument('--pdeg-at-most', type=int, default=None)
    slicing.add_argument('--lowest', action='store_true')

    sub = add('gpoly', cmd_gpoly, 'print g_p(x) mod p')
    sub.add_argument('--p', type=int, required=True)

    sub = add('gpoly-low', cmd_gpoly_low, 'print the lowest coefficients of g_p(x) mod p^M')
    sub.add_argument('--p', type=int, required=True)
    sub.add_argument('--count', type=int, default=5)

    sub = add('binom', cmd_binom, 'print the Gaussian binomial [A+Bi over C+Di]')
    for name in ('--A', '--B', '--C', '--D'):
        sub.add_argument(name, type=int, required=True)

    sub = add('binom-check', cmd_binom_check, 'check the binomial congruences modulo p^5')
    for name in ('--p', '--A', '--B'):
        sub.add_argument(name, type=int, required=True)

    sub = add('lucas-check', cmd_lucas_check, 'compare [pA+pBi over pC+pDi] with [A+Bi over C+Di]')
    for name in ('--p', '--A', '--B', '--C', '--D'):
        sub.add_argument(name, type=int, required=True)

    sub = add('composite', cmd_composite, 'scan composite bases')
    sub.add_argument('--n-max', type=int, required=True)
    sub.add_argument('--k-max', type=int, default=None)

    sub = add('classical', cmd_classical, 'classical harmonic, Glaisher and Leudesdorf checks')
    sub.add_argument('--p', type=int, required=True)
    sub.add_argument('--n', type=int, default=2, help='multiplier of the binomial C(np-1, p-1)')
    sub.add_argument('--glaisher', action='store_true')
    sub.add_argument('--leudesdorf', type=int, default=None, metavar='N')

    sub = add('power-sum-w', cmd_power_sum_w, 'print the Gaussian power sum W^(k)(A+Bi)')
    for name in ('--k', '--A', '--B'):
        sub.add_argument(name, type=int, required=True)

    sub = add('lemma', cmd_lemma, 'check the lemma sums and the power-sum vanishing rule')
    sub.add_argument('--p-max', type=int, required=True)

    return parser


def main(argv: ty.Optional[ty.Sequence[str]] = None) -> int:
    """
    Parses the arguments, configures logging and dispatches the command.

    Args:
        argv (Sequence[str], optional): The arguments without the program name. Defaults to sys.argv[1:].

    Returns:
        int: The exit code: 0 on success, 1 on a failed check or an exceeded limit,
        2 on a usage error or a bad checkpoint.

    """
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else 2
    configure_logging(args.log_level)
    return args.handler(args)
