#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Fit the growth exponent of simplex class counts in lattice boxes [0, q]^d."

OPTIONS = ("qs", "k", "d", "relation", "budget")


def main(argv=None):
    return experiment_main("growth", DESCRIPTION, OPTIONS, parallel=True, argv=argv)


if __name__ == '__main__':
    main()
