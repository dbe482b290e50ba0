#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

__version__ = "1.0.0"
__copyright__ = "Copyright (C) 2024 The falconer developers."

__all__ = ["Error", "InternalError", "ValidationError", "BudgetError", "FileAccessError", "Mode", "Relation",
           "PointSet", "Configuration", "CongruenceKey", "SimilarityKey", "DiscreteMeasure", "OrthogonalTransform",
           "ExperimentConfig", "thresholds", "output_dir"]

import os as _os

from falconer.exceptions import *
from falconer.enum import Mode, Relation
from falconer.geometry import PointSet, Configuration, CongruenceKey, SimilarityKey
from falconer.spectral import DiscreteMeasure, OrthogonalTransform
from falconer.thresholds import thresholds
from falconer.config import ExperimentConfig


def output_dir():
    """Return the value of the `FALCONER_OUTPUT_DIR` environment variable, or the current directory if unset."""
    return _os.environ.get("FALCONER_OUTPUT_DIR", "") or _os.curdir
