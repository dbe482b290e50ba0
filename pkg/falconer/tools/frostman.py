#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Largest ball masses of a measure and the fitted local dimension."

OPTIONS = ("input", "measure", "level", "grid", "d", "radii", "budget")


def main(argv=None):
    return experiment_main("frostman", DESCRIPTION, OPTIONS, argv=argv)


if __name__ == '__main__':
    main()
