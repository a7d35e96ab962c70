# -*- coding: utf-8 -*-
"""
This module renders command results as table, CSV or JSON text.

Functions:
    - records_frame: Returns the DataFrame of congruence records.
    - render_frame: Renders a DataFrame in the requested format.
    - render_rows: Renders a list of flat mappings in the requested format.
    - write_output: Writes the rendered text to stdout or to a file.

"""


import logging
import sys
import typing as ty
from pathlib import Path

import pandas as pd

from gaussharmonic.tools.tools import MalformedSpecError
from gaussharmonic.congruences.sums import CongruenceRecord


__all__ = ('FORMATS', 'RECORD_COLUMNS', 'records_frame', 'render_frame', 'render_rows', 'write_output')


logger = logging.getLogger(__name__)


FORMATS = ('table', 'csv', 'json')
RECORD_COLUMNS = ('base', 'k', 'expected', 'observed', 'saturated', 'type')


def records_frame(records: ty.Iterable[CongruenceRecord]) -> pd.DataFrame:
    """
    Returns the DataFrame of congruence records.

    Args:
        records (Iterable[CongruenceRecord]): The rendered records.

    Returns:
        DataFrame: One row per record with RECORD_COLUMNS; a saturated
        observation is shown as '>=M'.

    """
    rows = [record.to_dict() for record in records]
    frame = pd.DataFrame(rows, columns=list(RECORD_COLUMNS))
    if not frame.empty:
        frame['observed'] = [
            f'>={observed}' if saturated else str(observed)
            for observed, saturated in zip(frame['observed'], frame['saturated'])
        ]
    return frame


def render_frame(frame: pd.DataFrame, fmt: str) -> str:
    """
    Renders a DataFrame in the requested format.

    Args:
        frame (DataFrame): The rendered frame.
        fmt (str): One of FORMATS.

    Returns:
        str: The rendered text, ending with a newline.

    Raises:
        MalformedSpecError: If the format is unknown.

    """
    if fmt == 'csv':
        return frame.to_csv(index=False, lineterminator='\n')
    if fmt == 'json':
        return frame.to_json(orient='records') + '\n'
    if fmt == 'table':
        if frame.empty:
            return '(no rows)\n'
        return frame.to_string(index=False) + '\n'
    msg = f'Unknown output format {fmt!r}, expected one of {", ".join(FORMATS)}.'
    logger.error(msg)
    raise MalformedSpecError(msg)


def render_rows(rows: ty.Sequence[ty.Mapping[str, ty.Any]], fmt: str,
                columns: ty.Optional[ty.Sequence[str]] = None) -> str:
    return render_frame(pd.DataFrame(list(rows), columns=None if columns is None else list(columns)), fmt)


def write_output(text: str, out_path: ty.Optional[str] = None) -> None:
    if out_path is None:
        sys.stdout.write(text)
        return
    path = Path(out_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding='UTF-8')
    logger.info(f'Report written to {path}.')
