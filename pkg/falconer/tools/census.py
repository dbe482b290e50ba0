#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.tools.utils import experiment_main

DESCRIPTION = "Count congruence or similarity classes of k-simplices with vertices in a point set."

OPTIONS = ("input", "grid", "k", "d", "relation", "include-degenerate", "samples", "seed", "budget", "quantization",
           "epsilon")


def main(argv=None):
    return experiment_main("census", DESCRIPTION, OPTIONS, parallel=True, argv=argv)


if __name__ == '__main__':
    main()
