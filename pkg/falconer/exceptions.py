#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function


class Error(Exception):
    kind = "error"
    exit_code = 1


class InternalError(Error):
    kind = "internal"
    exit_code = 1


class ValidationError(Error):
    kind = "validation"
    exit_code = 3


class BudgetError(Error):
    kind = "budget"
    exit_code = 4

    def __init__(self, message, required=None, budget=None):
        super(BudgetError, self).__init__(message)
        self.required = required
        self.budget = budget


class FileAccessError(Error):
    kind = "io"
    exit_code = 5

    def __init__(self, message, path=None):
        super(FileAccessError, self).__init__(message)
        self.path = path
