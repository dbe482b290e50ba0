#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import csv
import json
import logging
import math
import os
import re

import numpy as np

from falconer.enum import Mode
from falconer.exceptions import FileAccessError, ValidationError
from falconer.geometry import PointSet, WEIGHT_TOLERANCE
from falconer.spectral import DiscreteMeasure
from falconer.util import make_path

NORMALIZATION_TOLERANCE = 1e-6

_HEADER_PATTERN = re.compile(r"^#\s*dim\s*=\s*(\d+)(?:\s+mode\s*=\s*(\w+))?\s*$")
_INT64_MIN = -2**63
_INT64_MAX = 2**63 - 1


def _parse_header(line):
    match = _HEADER_PATTERN.match(line.strip())
    if match is None:
        return None
    dim = int(match.group(1))
    mode = Mode.from_string(match.group(2)) if match.group(2) is not None else None
    return dim, mode


def _parse_exact(token, row):
    try:
        value = int(token)
    except ValueError:
        raise ValidationError("row %d: invalid integer coordinate %r" % (row, token))
    if value < _INT64_MIN or value > _INT64_MAX:
        raise ValidationError("row %d: coordinate %r does not fit in 64 bits" % (row, token))
    return value


def _parse_float(token, row, what="coordinate"):
    try:
        value = float(token)
    except ValueError:
        raise ValidationError("row %d: invalid %s %r" % (row, what, token))
    if not math.isfinite(value):
        raise ValidationError("row %d: non-finite %s %r" % (row, what, token))
    return value


def _looks_integral(token):
    try:
        int(token)
    except ValueError:
        return False
    return True


def _normalize_weights(weights):
    weights = np.asarray(weights, dtype=np.float64)
    if np.any(weights < 0):
        raise ValidationError("weights must be nonnegative")
    total = math.fsum(weights)
    deviation = abs(total - 1.0)
    if deviation <= WEIGHT_TOLERANCE:
        return weights
    if deviation < NORMALIZATION_TOLERANCE:
        logging.warning("weights sum to %r; normalizing" % total)
        return weights / total
    raise ValidationError("weights sum to %r, expected 1" % total)


def read_rows(path):
    """Return (header, rows) of a point file; rows are (row number, tokens) pairs, comments and blanks skipped."""
    header = None
    rows = []
    try:
        with open(path, newline="") as stream:
            for number, record in enumerate(csv.reader(stream), 1):
                if not record or not "".join(record).strip():
                    continue
                if record[0].lstrip().startswith("#"):
                    if header is None and not rows:
                        header = _parse_header(",".join(record))
                    continue
                rows.append((number, [token.strip() for token in record]))
    except EnvironmentError as error:
        raise FileAccessError("unable to read \"%s\" [%s]" % (path, error), path)
    except UnicodeDecodeError as error:
        raise ValidationError("\"%s\" is not a text file [%s]" % (path, error))
    return header, rows


def validate(path):
    """Parse and check a point file, returning a PointSet (weighted if the file has a weight column).

    The `# dim=d mode=exact|float` header fixes the dimension and coordinate mode; a row may then carry d coordinates
    or d coordinates plus a weight. Without a header every column is a coordinate, and the mode is exact when all
    tokens are integers. Weights off by less than 1e-6 are renormalized with a warning.
    """
    header, rows = read_rows(path)
    if not rows:
        raise ValidationError("\"%s\" contains no points" % path)

    if header is not None:
        dim, mode = header
        if dim < 1:
            raise ValidationError("\"%s\": invalid dimension %d in header" % (path, dim))
    else:
        dim, mode = len(rows[0][1]), None
    if mode is None:
        integral = all(_looks_integral(token) for _, tokens in rows for token in tokens[:dim])
        mode = Mode.exact if integral else Mode.float

    weighted = len(rows[0][1]) == dim + 1 and header is not None
    width = dim + 1 if weighted else dim

    points = []
    weights = []
    for number, tokens in rows:
        if len(tokens) != width:
            raise ValidationError("row %d: expected %d columns, got %d" % (number, width, len(tokens)))
        if mode == Mode.exact:
            points.append(tuple(_parse_exact(token, number) for token in tokens[:dim]))
        else:
            points.append(tuple(_parse_float(token, number) for token in tokens[:dim]))
        if weighted:
            weights.append(_parse_float(tokens[dim], number, "weight"))

    if weighted:
        weights = _normalize_weights(weights)
    else:
        weights = None

    ps = PointSet(points, dim=dim, mode=mode, weights=weights)
    logging.debug("read %r from \"%s\"" % (ps, path))
    return ps


def read_measure(path):
    """Read a measure file; unweighted point files give the uniform measure on their points."""
    ps = validate(path)
    if ps.weights is None:
        ps = ps.with_uniform_weights()
    return DiscreteMeasure.from_point_set(ps)


def _format_value(value):
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (float, np.floating)):
        return repr(float(value))
    if isinstance(value, np.integer):
        return str(int(value))
    return str(value)


def write_csv(path, columns, rows, comments=()):
    """Write comma separated values with `#` prefixed comment lines followed by a `#` prefixed column header."""
    try:
        make_path(os.path.dirname(os.path.abspath(path)))
        with open(path, "w", newline="") as stream:
            for comment in comments:
                stream.write("# %s\n" % comment)
            stream.write("# %s\n" % ",".join(columns))
            writer = csv.writer(stream, lineterminator="\n")
            for row in rows:
                writer.writerow([_format_value(value) for value in row])
    except EnvironmentError as error:
        raise FileAccessError("unable to write \"%s\" [%s]" % (path, error), path)
    return path


def to_builtin(value):
    if isinstance(value, dict):
        return dict((str(key), to_builtin(item)) for key, item in value.items())
    if isinstance(value, (list, tuple)):
        return [to_builtin(item) for item in value]
    if isinstance(value, np.ndarray):
        return to_builtin(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isinf(value):
            return "inf" if value > 0 else "-inf"
        if math.isnan(value):
            return "nan"
        return value
    return value


def dumps(payload):
    return json.dumps(to_builtin(payload), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json(path, payload):
    try:
        make_path(os.path.dirname(os.path.abspath(path)))
        with open(path, "w", encoding="utf-8") as stream:
            stream.write(dumps(payload))
    except EnvironmentError as error:
        raise FileAccessError("unable to write \"%s\" [%s]" % (path, error), path)
    return path


def write_point_set(path, ps):
    columns = ["x%d" % (index + 1) for index in range(ps.dim)]
    rows = [list(point) for point in ps.points]
    if ps.weights is not None:
        columns.append("weight")
        rows = [row + [weight] for row, weight in zip(rows, ps.weights)]
    try:
        make_path(os.path.dirname(os.path.abspath(path)))
        with open(path, "w", newline="") as stream:
            stream.write("# dim=%d mode=%s\n" % (ps.dim, Mode.to_string(ps.mode)))
            writer = csv.writer(stream, lineterminator="\n")
            for row in rows:
                writer.writerow([_format_value(value) for value in row])
    except EnvironmentError as error:
        raise FileAccessError("unable to write \"%s\" [%s]" % (path, error), path)
    return path


def write_curve(path, curve):
    comments = ["nodes=%d" % curve.nodes]
    return write_csv(path, ["t", "sigma"], zip(curve.ts, curve.sigmas), comments)
