#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import inspect
import os
import re

from configparser import ConfigParser, Error as ConfigParserError

from falconer.schema import *
from falconer.exceptions import InternalError, ValidationError, FileAccessError

EXPERIMENT_KINDS = ("census", "growth", "spheres", "three-spheres", "sharpness", "spectral", "mattila",
                    "group-energy", "frostman", "thresholds")

MEASURE_KINDS = ("cantor", "grid", "delta")

_SECTION = "experiment"


class TypeVisitor(object):
    def visit(self, visitable, *args, **kwargs):
        for type in inspect.getmro(visitable):
            visit_func = getattr(self, "visit_%s" % type.__name__, None)
            if visit_func is not None:
                return visit_func(visitable, *args, **kwargs)

        return self.default(visitable, *args, **kwargs)


class _ConfigParser(TypeVisitor):
    def visit(self, type, value):
        return super(_ConfigParser, self).visit(type, value, "")

    def visit_Integer(self, type, value, path):
        try:
            return int(value)
        except ValueError:
            raise ValueError(prefix_message_with_path(path, "invalid value %r for type %r" % (value, type.name())))

    def visit_Real(self, type, value, path):
        try:
            return float(value)
        except ValueError:
            raise ValueError(prefix_message_with_path(path, "invalid value %r for type %r" % (value, type.name())))

    def visit_Boolean(self, type, value, path):
        upper_case_value = value.upper()
        if upper_case_value in ("FALSE", "NO", "OFF", "0"):
            return False
        if upper_case_value in ("TRUE", "YES", "ON", "1"):
            return True

        raise ValueError(prefix_message_with_path(path, "invalid value %r for type %r" % (value, type.name())))

    def visit_Text(self, type, value, path):
        return value

    def visit_Mapping(self, type, value, path):
        path = "%s:" % type.name() if not path else path

        mapping = {}
        for sub_name in value:
            try:
                sub_type = type[sub_name]
            except KeyError:
                raise ValueError(prefix_message_with_path(join(path, sub_name), "unrecognized configuration option"))

            mapping[sub_name] = super(_ConfigParser, self).visit(sub_type, value[sub_name], join(path, sub_name))
        return mapping

    def visit_Sequence(self, type, value, path):
        path = "%s:" % type.name() if not path else path

        if not isinstance(value, str):
            raise ValueError(prefix_message_with_path(path, "invalid value %r for type %r" % (value, type.name())))

        sequence = []
        for index, sub_value in enumerate(item for item in re.split("[ ,]+", value.strip()) if item):
            sub_path = path + "[%d]" % index
            sequence.append(super(_ConfigParser, self).visit(type.sub_type, sub_value, sub_path))
        return sequence

    def default(self, type, value, path):
        raise InternalError("unsupported type: %s" % type.__name__)


def parse(value, type):
    return _ConfigParser().visit(type, value)


class _ExperimentKind(Choice):
    _alias = "experiment_kind"
    choices = EXPERIMENT_KINDS


class _MeasureKind(Choice):
    _alias = "measure_kind"
    choices = MEASURE_KINDS


class _RelationName(Choice):
    _alias = "relation"
    choices = ("congruence", "similarity")


class _PositiveIntegerList(Sequence):
    _alias = "positive_integer_list"
    sub_type = PositiveInteger


class _PositiveRealList(Sequence):
    _alias = "positive_real_list"
    sub_type = PositiveReal


class ExperimentSchema(Mapping):
    _alias = "experiment"

    experiment = _ExperimentKind()
    input = Text(optional=True)
    measure = _MeasureKind(optional=True)
    level = NonNegativeInteger(optional=True)
    grid = NonNegativeInteger(optional=True)
    k = PositiveInteger(optional=True)
    d = PositiveInteger(optional=True)
    q = NonNegativeInteger(optional=True)
    qs = _PositiveIntegerList(optional=True)
    n = NonNegativeInteger(optional=True)
    nmax = NonNegativeInteger(optional=True)
    n1 = NonNegativeInteger(optional=True)
    n2 = NonNegativeInteger(optional=True)
    n3 = NonNegativeInteger(optional=True)
    s = PositiveReal(optional=True)
    epsilon = PositiveReal(optional=True)
    tmin = PositiveReal(optional=True)
    tmax = PositiveReal(optional=True)
    ts = _PositiveRealList(optional=True)
    radii = _PositiveRealList(optional=True)
    annulus = _PositiveRealList(optional=True)
    resolution = PositiveInteger(optional=True)
    nodes = PositiveInteger(optional=True)
    samples = PositiveInteger(optional=True)
    seed = NonNegativeInteger(optional=True)
    budget = PositiveInteger(optional=True)
    grid_res = PositiveReal(optional=True)
    a_min = PositiveReal(optional=True)
    a_max = PositiveReal(optional=True)
    relation = _RelationName(optional=True)
    include_degenerate = Boolean(optional=True)
    quantization = PositiveReal(optional=True)
    processes = PositiveInteger(optional=True)
    out = Text(optional=True)


# keys that must be present (after defaults) for each experiment kind
_REQUIRED = {
    "census": ("k",),
    "growth": ("qs",),
    "spheres": ("d",),
    "three-spheres": ("n1", "n2", "n3"),
    "sharpness": ("d", "s", "q"),
    "spectral": ("ts",),
    "mattila": ("tmin", "tmax"),
    "group-energy": ("k", "grid_res"),
    "frostman": ("radii",),
    "thresholds": ("k", "d"),
}

_MEASURE_KINDS = ("spectral", "mattila", "group-energy", "frostman")


def _normalize_key(key):
    return key.strip().lower().replace("-", "_")


def read_config_file(path):
    """Read a flat 'key = value' experiment file and return the raw (string) values."""
    parser = ConfigParser(interpolation=None)
    try:
        with open(path) as stream:
            text = stream.read()
    except EnvironmentError as error:
        raise FileAccessError("unable to read config file: \"%s\" [%s]" % (path, error), path)

    try:
        parser.read_string("[%s]\n%s" % (_SECTION, text), source=path)
    except ConfigParserError as error:
        raise ValidationError("unable to parse config file: \"%s\" [%s]" % (path, error))

    return dict((_normalize_key(name), value) for name, value in parser.items(_SECTION))


def parse_config_values(raw):
    try:
        return parse(dict((_normalize_key(name), value) for name, value in raw.items()), ExperimentSchema)
    except ValueError as error:
        raise ValidationError(str(error))


class ExperimentConfig(object):
    """Validated parameters of a single experiment run.

    Values are looked up as attributes; absent optional values read as None.
    """

    def __init__(self, parameters):
        parameters = dict((key, value) for key, value in parameters.items() if value is not None)
        try:
            ExperimentSchema.validate(parameters)
        except ValueError as error:
            raise ValidationError(str(error))

        self._parameters = parameters
        self._check()

    @classmethod
    def from_sources(cls, path=None, overrides=None):
        """Combine a config file (optional) with command-line overrides; overrides win."""
        parameters = {}
        if path is not None:
            parameters.update(parse_config_values(read_config_file(path)))
        for key, value in (overrides or {}).items():
            if value is not None:
                parameters[_normalize_key(key)] = value
        return cls(parameters)

    @property
    def kind(self):
        return self._parameters["experiment"]

    def __getattr__(self, name):
        if name.startswith("_"):
            raise AttributeError(name)
        if name not in ExperimentSchema:
            raise AttributeError(name)
        return self._parameters.get(name)

    def get(self, name, default=None):
        value = self._parameters.get(name)
        return default if value is None else value

    def as_dict(self):
        return dict(self._parameters)

    def _check(self):
        kind = self.kind
        missing = [key for key in _REQUIRED[kind] if key not in self._parameters]
        if kind == "census" and self.input is None and self.grid is None:
            missing.append("input|grid")
        if kind in _MEASURE_KINDS and self.input is None and self.measure is None:
            missing.append("input|measure")
        if missing:
            raise ValidationError("experiment %r: no value for mandatory item(s): %s" % (kind, ", ".join(missing)))

        if self.input is not None and not os.path.isfile(self.input):
            raise ValidationError("experiment %r: input file does not exist: \"%s\"" % (kind, self.input))
        if self.k is not None and self.d is not None and self.k > self.d:
            raise ValidationError("experiment %r: k=%d exceeds dimension d=%d" % (kind, self.k, self.d))
        if self.tmin is not None and self.tmax is not None and not self.tmin < self.tmax:
            raise ValidationError("experiment %r: tmin must be smaller than tmax" % kind)
        if self.a_min is not None and self.a_max is not None and self.a_min > self.a_max:
            raise ValidationError("experiment %r: a_min must not exceed a_max" % kind)
        if kind == "growth" and len(self.qs) < 4:
            raise ValidationError("experiment 'growth': at least 4 q values are required")
        if kind == "sharpness" and not 0 < self.s < self.d:
            raise ValidationError("experiment 'sharpness': s must lie in (0, d)")

    def __repr__(self):
        return "ExperimentConfig(%r)" % self._parameters
