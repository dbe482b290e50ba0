#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import argparse
import json
import logging
import os
import sys

try:
    import tabulate
except ImportError:
    tabulate = None

import falconer
from falconer.config import ExperimentConfig, MEASURE_KINDS
from falconer.formats import to_builtin
from falconer.experiment import run as run_experiment

OWN_OUTPUT_FORMATS = ['psv', 'csv', 'json']
if tabulate is None:
    DEFAULT_FORMAT = 'psv'
    OUTPUT_FORMATS = OWN_OUTPUT_FORMATS
else:
    DEFAULT_FORMAT = 'orgtbl'
    OUTPUT_FORMATS = sorted(set(tabulate.tabulate_formats + OWN_OUTPUT_FORMATS))


# parsed first with parse_known_args() so that --version works without the tool's mandatory options
version_parser = argparse.ArgumentParser(add_help=False)
version_parser.add_argument("--version", action="store_true", help="output version information and exit")


# experiment options shared by the tools: flag name -> argparse keyword arguments
OPTIONS = {
    "input": dict(metavar="PATH", help="point set or measure file (CSV, `# dim=d mode=exact|float` header)"),
    "measure": dict(choices=MEASURE_KINDS, help="built-in measure to use instead of --input"),
    "level": dict(type=int, help="construction level (Cantor measure, sharpness scale count)"),
    "grid": dict(type=int, metavar="Q", help="use the integer grid {0..Q}^d (census) or an QxQ grid measure"),
    "k": dict(type=int, help="simplex order k"),
    "d": dict(type=int, help="ambient dimension d"),
    "q": dict(type=int, help="lattice box side q"),
    "qs": dict(type=int, nargs="+", metavar="Q", help="list of lattice box sides"),
    "n": dict(type=int, help="squared radius whose lattice points are listed"),
    "nmax": dict(type=int, help="largest squared radius to count"),
    "n1": dict(type=int, help="squared radius of the first sphere"),
    "n2": dict(type=int, help="squared radius of the second sphere"),
    "n3": dict(type=int, help="squared radius of the third sphere"),
    "s": dict(type=float, help="dimension parameter s"),
    "epsilon": dict(type=float, help="thickening width for the congruent pair measure"),
    "tmin": dict(type=float, help="lower end of the t interval"),
    "tmax": dict(type=float, help="upper end of the t interval"),
    "ts": dict(type=float, nargs="+", metavar="T", help="increasing list of radii t"),
    "radii": dict(type=float, nargs="+", metavar="DELTA", help="decreasing list of ball radii"),
    "annulus": dict(type=float, nargs="+", metavar="R", help="annulus radii r"),
    "resolution": dict(type=int, help="annulus grid cells per axis (default: 64)"),
    "nodes": dict(type=int, help="sphere quadrature nodes (default: 512)"),
    "samples": dict(type=int, help="number of random samples"),
    "seed": dict(type=int, help="random seed (default: 0)"),
    "budget": dict(type=int, help="enumeration budget (default: 10^8)"),
    "grid-res": dict(type=float, metavar="H", help="cell width used to bin the measure"),
    "a-min": dict(type=float, help="smallest dilation"),
    "a-max": dict(type=float, help="largest dilation"),
    "relation": dict(choices=("congruence", "similarity"), help="simplex relation (default: congruence)"),
    "include-degenerate": dict(action="store_const", const=True, help="include degenerate simplices"),
    "quantization": dict(type=float, help="float mode key quantization scale (default: 1e-9)"),
    "out": dict(metavar="DIR", help="output directory (default: $FALCONER_OUTPUT_DIR or the current directory)"),
}


def create_parser(*args, **kwargs):
    parallel = kwargs.pop('parallel', False)
    options = kwargs.pop('options', ())

    parser = argparse.ArgumentParser(*args, parents=[version_parser], **kwargs)
    parser.add_argument("--verbose", action="store_true", help="display debug information")

    if options:
        parser.add_argument("--config", metavar="PATH", help="experiment file with `key = value` lines; "
                            "command line options override its values")
        for name in options + ("out",):
            parser.add_argument("--" + name, **OPTIONS[name])

    if parallel:
        parser.add_argument("--parallel", action="store_true", help="use multi-processing to perform operation")
        parser.add_argument("--processes", type=int, help="use a specific amount of processes for --parallel")

    return parser


def version(program_name):
    print("%s %s" % (program_name, falconer.__version__))
    print(falconer.__copyright__)
    print("")


def log_internal_error():
    import traceback

    logging.error("terminated due to an internal error")
    for message in traceback.format_exc().splitlines():
        logging.error("| " + message)


def report_error(error):
    """Write the one-line machine readable error record to stderr."""
    record = {"error": error.kind, "exit_code": error.exit_code, "message": str(error)}
    print(json.dumps(record, sort_keys=True), file=sys.stderr)


def parse_args_and_run(parser, func, argv=None):
    args, unused_args = version_parser.parse_known_args(argv)
    if args.version:
        version(os.path.basename(sys.argv[0]))
        sys.exit(0)

    args = parser.parse_args(unused_args)

    log_level = logging.DEBUG if args.verbose else logging.INFO
    logging.basicConfig(level=log_level, format="%(levelname)s: %(message)s")

    try:
        return func(args)
    except SystemExit:
        raise
    except KeyboardInterrupt:
        sys.exit(1)
    except falconer.Error as error:
        logging.error(error)
        report_error(error)
        sys.exit(error.exit_code)
    except Exception:
        log_internal_error()
        report_error(falconer.InternalError("terminated due to an internal error"))
        sys.exit(1)
    finally:
        logging.shutdown()


def overrides(args, kind=None):
    """Schema values given on the command line."""
    values = {}
    for name in OPTIONS:
        value = getattr(args, name.replace("-", "_"), None)
        if value is not None:
            values[name.replace("-", "_")] = value
    if getattr(args, "parallel", False):
        values["processes"] = args.processes or os.cpu_count() or 1
    if kind is not None:
        values["experiment"] = kind
    return values


def flatten(payload, prefix=""):
    rows = []
    for key in sorted(payload):
        value = payload[key]
        name = prefix + str(key)
        if isinstance(value, dict):
            rows.extend(flatten(value, name + "."))
        else:
            rows.append((name, value))
    return rows


# Support multiple table output formats

class PlainWriter(object):
    def __init__(self, header):
        self._header = header

    def header(self):
        print("|", " | ".join(self._header), "|")

    def row(self, values):
        print("|", " | ".join(str(item) for item in values), "|")

    def footer(self):
        pass


class TabulateWriter(PlainWriter):
    def __init__(self, header, fmt='orgtbl'):
        super(TabulateWriter, self).__init__(header)
        self._data = []
        self._format = fmt

    def header(self):
        pass

    def row(self, values):
        self._data.append(values)

    def footer(self):
        print(tabulate.tabulate(self._data, headers=self._header, tablefmt=self._format))


class CSVWriter(PlainWriter):
    def header(self):
        print(",".join(["\"" + name.replace("\"", "\"\"") + "\"" for name in self._header]))

    def row(self, values):
        print(",".join("\"" + str(item).replace("\"", "\"\"") + "\"" for item in values))


def get_writer(header, output_format):
    if output_format == "psv":  # PSV = Pipe Separated Values
        return PlainWriter(header)
    if output_format == "csv":
        return CSVWriter(header)
    if tabulate is not None:
        return TabulateWriter(header, output_format)
    return PlainWriter(header)


def print_summary(summary, output_format=DEFAULT_FORMAT):
    if output_format == "json":
        print(json.dumps(to_builtin(summary), sort_keys=True))
        return
    writer = get_writer(["name", "value"], output_format)
    writer.header()
    for row in flatten(summary):
        writer.row(row)
    writer.footer()


def experiment_main(kind, description, options, parallel=False, argv=None):
    """Build the standard parser for one experiment kind and run it."""
    parser = create_parser(description=description, options=options, parallel=parallel)
    parser.add_argument("-f", "--output-format", choices=OUTPUT_FORMATS, default=DEFAULT_FORMAT, metavar="FORMAT",
                        help="summary format; choices (depending on installation of python-tabulate): "
                        "{%(choices)s}; default: %(default)s")

    def run(args):
        config = ExperimentConfig.from_sources(args.config, overrides(args, kind))
        print_summary(run_experiment(config), args.output_format)
        return 0

    return parse_args_and_run(parser, run, argv)
