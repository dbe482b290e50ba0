#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import importlib
import sys

import falconer

TOOLS = {
    "census": "census",
    "growth": "growth",
    "spheres": "spheres",
    "three-spheres": "three_spheres",
    "sharpness": "sharpness",
    "spectral": "spectral",
    "mattila": "mattila",
    "group-energy": "group_energy",
    "frostman": "frostman",
    "thresholds": "thresholds",
    "validate": "validate",
    "run": "run",
}


def usage(stream):
    print("usage: falconer [--version] TOOL [ARGS...]", file=stream)
    print("", file=stream)
    print("tools: %s" % ", ".join(sorted(TOOLS)), file=stream)
    print("run `falconer TOOL --help` for the options of a tool", file=stream)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv:
        usage(sys.stderr)
        return 2
    if argv[0] in ("-h", "--help"):
        usage(sys.stdout)
        return 0
    if argv[0] == "--version":
        print("falconer %s" % falconer.__version__)
        print(falconer.__copyright__)
        return 0
    if argv[0] not in TOOLS:
        print("falconer: unknown tool %r" % argv[0], file=sys.stderr)
        usage(sys.stderr)
        return 2

    module = importlib.import_module("falconer.tools." + TOOLS[argv[0]])
    return module.main(argv[1:])


if __name__ == '__main__':
    sys.exit(main())
