#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Count lattice points on circles (d=2) or spheres (d=3)."

OPTIONS = ("d", "nmax", "n")


def main(argv=None):
    return experiment_main("spheres", DESCRIPTION, OPTIONS, argv=argv)


if __name__ == '__main__':
    main()
