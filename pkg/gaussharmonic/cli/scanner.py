# -*- coding: utf-8 -*-
"""
This module drives the bulk scans: a worker pool over independent bases,
the resumable JSON checkpoint of a prime scan and the composite scan.

The parallel unit is one base with all powers k together, so the per-term
inverses are shared. Workers only compute; the parent process owns the
checkpoint and merges results in ascending order, so the output does not
depend on the worker count.

Classes:
    - ScanCheckpoint: The dataclass describes the state of a prime scan.

Functions:
    - load_checkpoint: Loads a checkpoint and checks it against the scan parameters.
    - save_checkpoint: Writes a checkpoint atomically.
    - scan_primes: Classifies S_p^(k) for every prime 3 <= p <= p_max and k <= k_max.
    - select_anomalies: Returns the records which are not Expected.
    - scan_composites: Returns the congruence results of the composite bases.

"""


from __future__ import annotations

import json
import logging
import multiprocessing
import os
import tempfile
import typing as ty
from dataclasses import dataclass, field
from pathlib import Path

import sympy

from gaussharmonic.tools.tools import CheckpointError, MalformedSpecError, config_manager
from gaussharmonic.congruences.sums import (
    Classification, CompositeResult, CongruenceRecord,
    classify_all, composite_bases, composite_result, expected_exponent,
)


__all__ = (
    'ScanCheckpoint', 'load_checkpoint', 'save_checkpoint',
    'scan_primes', 'select_anomalies', 'scan_composites',
)


logger = logging.getLogger(__name__)


@dataclass
class ScanCheckpoint:
    """
    The dataclass describes the state of a prime scan.

    Args:
        parameters (Dict[str, int]): The scan parameters p_max, k_max and precision.
        completed_bases (List[int]): The primes already classified, ascending.
        records (List[CongruenceRecord]): Their records, sorted by (base, k).
        schema_version (int, optional): Defaults to CHECKPOINT_SCHEMA_VERSION.

    """
    parameters: ty.Dict[str, int]
    completed_bases: ty.List[int] = field(default_factory=list)
    records: ty.List[CongruenceRecord] = field(default_factory=list)
    schema_version: int = field(default_factory=lambda: config_manager('CHECKPOINT_SCHEMA_VERSION'))

    def add(self, base: int, records: ty.Iterable[CongruenceRecord]) -> None:
        self.completed_bases = sorted({*self.completed_bases, base})
        self.records = sorted([*self.records, *records], key=lambda record: (record.base, record.k))

    def to_json(self) -> str:
        return json.dumps({
            'schema_version': self.schema_version,
            'parameters': self.parameters,
            'completed_bases': self.completed_bases,
            'records': [record.to_dict() for record in self.records],
        }, indent=1, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> ScanCheckpoint:
        data = json.loads(text)
        return cls(
            parameters={key: int(value) for key, value in data['parameters'].items()},
            completed_bases=sorted(int(base) for base in data['completed_bases']),
            records=[CongruenceRecord.from_dict(record) for record in data['records']],
            schema_version=int(data['schema_version']),
        )


def load_checkpoint(path: ty.Union[str, Path], parameters: ty.Mapping[str, int]) -> ScanCheckpoint:
    """
    Loads a checkpoint and checks it against the scan parameters.

    A missing file starts a fresh scan.

    Args:
        path (Union[str, Path]): The checkpoint file.
        parameters (Mapping[str, int]): The parameters of the requested scan.

    Returns:
        ScanCheckpoint: The loaded or the fresh checkpoint.

    Raises:
        CheckpointError: If the file is corrupt, has another schema version
            or was written by a scan with other parameters.

    """
    path = Path(path)
    if not path.exists():
        return ScanCheckpoint(dict(parameters))

    try:
        checkpoint = ScanCheckpoint.from_json(path.read_text(encoding='UTF-8'))
    except (ValueError, KeyError, TypeError, AttributeError) as err:
        msg = f'Corrupt checkpoint {path}: {err}.'
        logger.error(msg)
        raise CheckpointError(msg) from err

    if checkpoint.schema_version != config_manager('CHECKPOINT_SCHEMA_VERSION'):
        msg = f'Checkpoint {path} has schema version {checkpoint.schema_version}, ' \
              f'expected {config_manager("CHECKPOINT_SCHEMA_VERSION")}.'
        logger.error(msg)
        raise CheckpointError(msg)
    if checkpoint.parameters != dict(parameters):
        msg = f'Checkpoint {path} belongs to the scan {checkpoint.parameters}, ' \
              f'refusing to resume with {dict(parameters)}.'
        logger.error(msg)
        raise CheckpointError(msg)

    logger.info(f'Resuming from {path}: {len(checkpoint.completed_bases)} bases done.')
    return checkpoint


def save_checkpoint(checkpoint: ScanCheckpoint, path: ty.Union[str, Path]) -> None:
    """Writes a checkpoint to a temporary file in the same folder and renames it over the target."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=path.name, suffix='.tmp', dir=path.parent)
    try:
        with os.fdopen(fd, 'w', encoding='UTF-8') as tmp_file:
            tmp_file.write(checkpoint.to_json())
        os.replace(tmp_name, path)
    except OSError:
        if os.path.exists(tmp_name):
            os.remove(tmp_name)
        raise
    logger.info(f'Checkpoint written: {checkpoint.completed_bases[-1:]} last of '
                f'{len(checkpoint.completed_bases)} bases.')


################
# Worker pool  #
################

def _classify_prime(task: ty.Tuple[int, int, int]) -> ty.Tuple[int, ty.List[CongruenceRecord]]:
    p, k_max, precision = task
    return p, classify_all(p, k_max, precision)


def _composite(task: ty.Tuple[int, int, int]) -> CompositeResult:
    n, k_max, precision = task
    return composite_result(n, k_max, precision)


def _run(func: ty.Callable, tasks: ty.List[ty.Tuple[int, int, int]],
         jobs: ty.Optional[int]) -> ty.Iterator[ty.Any]:
    jobs = jobs or multiprocessing.cpu_count()
    if jobs < 1:
        msg = f'Worker count must be >= 1, now {jobs}.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    if jobs == 1 or len(tasks) <= 1:
        yield from map(func, tasks)
        return
    with multiprocessing.Pool(processes=min(jobs, len(tasks))) as pool:
        yield from pool.imap_unordered(func, tasks)


def scan_primes(p_max: int, k_max: ty.Optional[int] = None, precision: ty.Optional[int] = None,
                jobs: ty.Optional[int] = None,
                checkpoint_path: ty.Optional[ty.Union[str, Path]] = None) -> ty.List[CongruenceRecord]:
    """
    Classifies S_p^(k) for every prime 3 <= p <= p_max and 1 <= k <= k_max.

    p = 2 is skipped: its only pair 1+i has even norm, so the sum is empty.

    Args:
        p_max (int): The largest scanned base, p_max >= 3.
        k_max (int, optional): The largest power. Defaults to SCAN_K_MAX.
        precision (int, optional): The precision M. Defaults to PRIME_PRECISION.
        jobs (int, optional): The worker count. Defaults to the CPU count.
        checkpoint_path (Union[str, Path], optional): The checkpoint file; written after
            each completed prime and resumed from if it exists.

    Returns:
        List[CongruenceRecord]: All records sorted by (k, p).

    Raises:
        MalformedSpecError: If p_max < 3, k_max < 1 or the precision cannot separate the exponents.
        CheckpointError: If the checkpoint cannot be resumed.

    .. code-block:: python

        >> [r.classification.value for r in scan_primes(40, 1) if r.base in (7, 31)]
        ['Expected', 'Stronger']

    """
    k_max = config_manager('SCAN_K_MAX') if k_max is None else k_max
    precision = config_manager('PRIME_PRECISION') if precision is None else precision
    if p_max < 3:
        msg = f'Scan bound must be >= 3, now {p_max}.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    if k_max < 1:
        msg = f'Power bound must be >= 1, now {k_max}.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    highest = max(expected_exponent(k) for k in range(1, min(k_max, 4) + 1))
    if precision <= highest:
        msg = f'Precision {precision} does not exceed the expected exponent {highest}.'
        logger.error(msg)
        raise MalformedSpecError(msg)

    parameters = {'p_max': p_max, 'k_max': k_max, 'precision': precision}
    if checkpoint_path is not None:
        checkpoint = load_checkpoint(checkpoint_path, parameters)
    else:
        checkpoint = ScanCheckpoint(parameters)

    done = set(checkpoint.completed_bases)
    tasks = [(int(p), k_max, precision) for p in sympy.primerange(3, p_max + 1) if p not in done]
    logger.info(f'Scanning {len(tasks)} primes up to {p_max}, k <= {k_max}, M = {precision}.')

    for p, records in _run(_classify_prime, tasks, jobs):
        checkpoint.add(p, records)
        if checkpoint_path is not None:
            save_checkpoint(checkpoint, checkpoint_path)
        logger.info(f'Prime {p} classified.')

    return sorted(checkpoint.records, key=lambda record: (record.k, record.base))


def select_anomalies(records: ty.Iterable[CongruenceRecord],
                     include_all: bool = False) -> ty.List[CongruenceRecord]:
    if include_all:
        return list(records)
    return [record for record in records if record.classification is not Classification.EXPECTED]


def scan_composites(n_max: int, k_max: ty.Optional[int] = None, precision: ty.Optional[int] = None,
                    jobs: ty.Optional[int] = None) -> ty.List[CompositeResult]:
    """
    Returns the congruence results of the composite bases 4 <= n <= n_max, ascending.

    """
    k_max = config_manager('COMPOSITE_K_MAX') if k_max is None else k_max
    precision = config_manager('COMPOSITE_PRECISION') if precision is None else precision
    if k_max < 1:
        msg = f'Power bound must be >= 1, now {k_max}.'
        logger.error(msg)
        raise MalformedSpecError(msg)
    tasks = [(n, k_max, precision) for n in composite_bases(n_max)]
    return sorted(_run(_composite, tasks, jobs), key=lambda result: result.base)
