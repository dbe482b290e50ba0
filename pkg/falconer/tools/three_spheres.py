#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Count congruence classes of lattice triangles with one vertex on each of three spheres."

OPTIONS = ("n1", "n2", "n3", "budget")


def main(argv=None):
    return experiment_main("three-spheres", DESCRIPTION, OPTIONS, argv=argv)


if __name__ == '__main__':
    main()
