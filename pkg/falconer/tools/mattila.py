#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Evaluate the Mattila integral of a measure over an interval of radii."

OPTIONS = ("input", "measure", "level", "grid", "d", "tmin", "tmax", "nodes", "budget")


def main(argv=None):
    return experiment_main("mattila", DESCRIPTION, OPTIONS, argv=argv)


if __name__ == '__main__':
    main()
