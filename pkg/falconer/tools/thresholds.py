#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Dimension thresholds for k-simplices in R^d."

OPTIONS = ("k", "d")


def main(argv=None):
    return experiment_main("thresholds", DESCRIPTION, OPTIONS, argv=argv)


if __name__ == '__main__':
    main()
