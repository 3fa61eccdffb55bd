import csv
import json
import logging
import os

import numpy as np

from ..constants import CSV_FLOAT_FORMAT

SUMMARY_NAME = 'summary.json'
SERIES_NAME = 'series.csv'
FIELD_COLUMNS = ('x', 're', 'im', 'abs2')


def to_jsonable(value):
    """ Converts results to JSON types. Complex numbers become {"re": x, "im": y}.

    >>> to_jsonable({'E': 1 + 2j, 'n': np.int64(3), 'v': np.array([0.5])})
    {'E': {'re': 1.0, 'im': 2.0}, 'n': 3, 'v': [0.5]}
    """
    if isinstance(value, dict):
        return dict((str(k), to_jsonable(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': float(value.real), 'im': float(value.imag)}
    if value is None or isinstance(value, str):
        return value
    return str(value)


def format_cell(value):
    """ CSV cell with full double precision

    >>> format_cell(0.1), format_cell(3), format_cell(True), format_cell('rk4')
    ('0.10000000000000001', '3', '1', 'rk4')
    """
    if isinstance(value, (bool, np.bool_)):
        return str(int(value))
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return CSV_FLOAT_FORMAT.format(float(value))
    if value is None:
        return ''
    return str(value)


def dumps_summary(summary):
    return json.dumps(to_jsonable(summary), sort_keys=True, indent=2) + '\n'


def write_summary(directory, summary):
    path = os.path.join(directory, SUMMARY_NAME)
    with open(path, 'w') as f:
        f.write(dumps_summary(summary))
    logging.debug("wrote {}".format(path))
    return path


def write_csv(path, columns, rows):
    with open(path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(columns)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])
    logging.debug("wrote {} rows to {}".format(len(rows), path))
    return path


def write_series(directory, columns, rows):
    return write_csv(os.path.join(directory, SERIES_NAME), columns, rows)


def field_rows(psi):
    """ (x, Re psi, Im psi, |psi|**2) per node, carrier included """
    samples = psi.samples
    return list(zip(psi.grid.x, samples.real, samples.imag, np.abs(samples) ** 2))


def write_field(directory, k, psi):
    path = os.path.join(directory, 'field_t{}.csv'.format(k))
    return write_csv(path, FIELD_COLUMNS, field_rows(psi))


def read_csv(path):
    """ header and rows of floats, as written by :func:`write_csv` for numeric data """
    with open(path, 'r', newline='') as f:
        reader = csv.reader(f)
        header = next(reader)
        rows = [[float(v) if v else None for v in row] for row in reader]
    return header, rows
