#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Estimate the orthogonal group energy of a measure, optionally averaged over dilations."

OPTIONS = ("input", "measure", "level", "grid", "d", "k", "samples", "seed", "grid-res", "a-min", "a-max", "budget")


def main(argv=None):
    return experiment_main("group-energy", DESCRIPTION, OPTIONS, argv=argv)


if __name__ == '__main__':
    main()
