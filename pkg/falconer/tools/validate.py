#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import math

from falconer import formats
from falconer.enum import Mode
from falconer.tools.utils import create_parser, parse_args_and_run, print_summary, DEFAULT_FORMAT, OUTPUT_FORMATS


def run(args):
    ps = formats.validate(args.path)
    summary = {
        "path": args.path,
        "dim": ps.dim,
        "mode": Mode.to_string(ps.mode),
        "points": len(ps),
        "weighted": ps.weights is not None,
    }
    if ps.weights is not None:
        summary["weight_sum"] = math.fsum(ps.weights)
    if args.out is not None:
        formats.write_point_set(args.out, ps)
        summary["normalized"] = args.out
    print_summary(summary, args.output_format)
    return 0


def main(argv=None):
    parser = create_parser(description="Check a point set or measure file and report what it contains.")
    parser.add_argument("-f", "--output-format", choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT, metavar="FORMAT",
                        help="summary format; default: %(default)s")
    parser.add_argument("--out", metavar="PATH", help="write the normalized point file to this path")
    parser.add_argument("path", metavar="PATH", help="point set or measure file")
    return parse_args_and_run(parser, run, argv)


if __name__ == '__main__':
    main()
