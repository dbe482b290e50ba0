#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Spherical averages of the Fourier transform of a measure, with decay fit and annulus energies."

OPTIONS = ("input", "measure", "level", "grid", "d", "ts", "s", "annulus", "resolution", "nodes", "budget")


def main(argv=None):
    return experiment_main("spectral", DESCRIPTION, OPTIONS, argv=argv)


if __name__ == '__main__':
    main()
