#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Build one level of the lattice sharpness construction and its class counts."

OPTIONS = ("d", "s", "q", "level", "budget")


def main(argv=None):
    return experiment_main("sharpness", DESCRIPTION, OPTIONS, argv=argv)


if __name__ == '__main__':
    main()
