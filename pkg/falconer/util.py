#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import errno
import hashlib
import logging
import multiprocessing
import os

try:
    from tqdm import tqdm as bar
except ImportError:
    def bar(iterable, total=None, disable=None, **kwargs):
        return iterable


def make_path(path, mode=0o777):
    """Create a directory and its parents; an existing directory is not an error."""
    try:
        os.makedirs(path, mode)
    except EnvironmentError as _error:
        if _error.errno != errno.EEXIST or not os.path.isdir(path):
            raise


def hash_file(path, block_size=65536, hash_type="sha256"):
    hash = getattr(hashlib, hash_type)()
    with open(path, "rb") as stream:
        while True:
            data = stream.read(block_size)
            if not data:
                return hash_type + ":" + hash.hexdigest()
            hash.update(data)


class _Guarded(object):
    # workers ignore KeyboardInterrupt; the parent process handles it
    def __init__(self, func):
        self.func = func

    def __call__(self, item):
        try:
            return self.func(item)
        except KeyboardInterrupt:
            return None


def map_partitions(func, partitions, processes=None, progress=False):
    """Apply func to every partition and return the results in partition order.

    With processes > 1 the partitions are distributed over a multiprocessing pool; func must then be picklable
    (a module level function or an instance of a module level class). Results always come back in input order so
    any reduction over them is independent of the number of workers.
    """
    partitions = list(partitions)
    total = len(partitions)
    disable = None if progress else True

    if processes is not None and processes > 1 and total > 1:
        logging.debug("distributing %d partitions over %d processes" % (total, processes))
        pool = multiprocessing.Pool(processes)
        try:
            results = list(bar(pool.imap(_Guarded(func), partitions), total=total, disable=disable))
        finally:
            pool.close()
            pool.join()
        return results

    return [func(partition) for partition in bar(partitions, total=total, disable=disable)]
