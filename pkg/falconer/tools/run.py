#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import os

from falconer.config import ExperimentConfig
from falconer.experiment import run as run_experiment
from falconer.tools.utils import create_parser, parse_args_and_run, print_summary, DEFAULT_FORMAT, OUTPUT_FORMATS


def run(args):
    overrides = {"out": args.out}
    if args.parallel:
        overrides["processes"] = args.processes or os.cpu_count() or 1
    config = ExperimentConfig.from_sources(args.config, overrides)
    print_summary(run_experiment(config), args.output_format)
    return 0


def main(argv=None):
    parser = create_parser(description="Run the experiment described by a `key = value` experiment file.",
                           parallel=True)
    parser.add_argument("-f", "--output-format", choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT, metavar="FORMAT",
                        help="summary format; default: %(default)s")
    parser.add_argument("--out", metavar="DIR", help="output directory (overrides the `out` key)")
    parser.add_argument("config", metavar="CONFIG", help="experiment file")
    return parse_args_and_run(parser, run, argv)


if __name__ == '__main__':
    main()
