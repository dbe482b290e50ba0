#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import collections

import numpy as np

from falconer.exceptions import ValidationError

LogLogFit = collections.namedtuple("LogLogFit", ["slope", "intercept", "residual", "points"])


def loglog_fit(xs, ys, minimum_points=2):
    """Least-squares line through (log x, log y); the residual is the root mean square deviation in log space."""
    xs = np.asarray(xs, dtype=np.float64)
    ys = np.asarray(ys, dtype=np.float64)
    if xs.shape != ys.shape or xs.ndim != 1:
        raise ValidationError("fit needs two equally long one-dimensional sequences")
    if xs.size < minimum_points:
        raise ValidationError("fit needs at least %d points, got %d" % (minimum_points, xs.size))
    if np.any(xs <= 0) or np.any(ys <= 0):
        raise ValidationError("log-log fit needs positive values")

    log_x = np.log(xs)
    log_y = np.log(ys)
    if np.ptp(log_x) == 0:
        raise ValidationError("log-log fit needs at least two distinct abscissae")

    design = np.column_stack([log_x, np.ones_like(log_x)])
    (slope, intercept), _, _, _ = np.linalg.lstsq(design, log_y, rcond=None)
    residual = float(np.sqrt(np.mean((design @ np.array([slope, intercept]) - log_y) ** 2)))
    return LogLogFit(float(slope), float(intercept), residual, int(xs.size))
