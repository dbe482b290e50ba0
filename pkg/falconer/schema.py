#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import numbers

_INT64 = (-2**63, 2**63 - 1)


def prefix_message_with_path(path, message):
    if not path:
        return message
    separator = " " if path.endswith(":") else ": "
    return path + separator + message


def join(path, *names):
    tail = ".".join(names)
    if not path:
        return tail
    return path + (" " if path.endswith(":") else ".") + tail


class Type(object):
    """Parameter type. Instances declared on a Mapping are its items; `optional` items may be absent."""

    def __init__(self, optional=False):
        self.optional = optional

    @classmethod
    def name(cls):
        return getattr(cls, "_alias", cls.__name__.lower())

    @classmethod
    def invalid(cls, value, detail=""):
        return ValueError("invalid value %r for type %r%s" % (value, cls.name(), detail))


class Integer(Type):
    minimum = None

    @classmethod
    def validate(cls, value):
        if isinstance(value, bool) or not isinstance(value, numbers.Integral):
            raise cls.invalid(value)
        if not _INT64[0] <= value <= _INT64[1] or (cls.minimum is not None and value < cls.minimum):
            raise cls.invalid(value)


class PositiveInteger(Integer):
    _alias = "positive_integer"
    minimum = 1


class NonNegativeInteger(Integer):
    _alias = "nonnegative_integer"
    minimum = 0


class Real(Type):
    positive = False

    @classmethod
    def validate(cls, value):
        # nan compares unequal to itself
        if isinstance(value, bool) or not isinstance(value, numbers.Real) or value != value:
            raise cls.invalid(value)
        if cls.positive and not value > 0:
            raise cls.invalid(value)


class PositiveReal(Real):
    _alias = "positive_real"
    positive = True


class Boolean(Type):
    @classmethod
    def validate(cls, value):
        if not isinstance(value, bool):
            raise cls.invalid(value)


class Text(Type):
    @classmethod
    def validate(cls, value):
        if not isinstance(value, str):
            raise cls.invalid(value)


class Choice(Text):
    choices = ()

    @classmethod
    def validate(cls, value):
        super(Choice, cls).validate(value)
        if value not in cls.choices:
            raise cls.invalid(value, " (expected one of: %s)" % ", ".join(cls.choices))


class Sequence(Type):
    """Homogeneous list of `sub_type` values."""
    sub_type = None

    @classmethod
    def validate(cls, value, path=""):
        path = path or "%s:" % cls.name()
        if isinstance(value, (str, bytes)) or not hasattr(value, "__iter__"):
            raise ValueError(prefix_message_with_path(path, "expected a sequence"))
        for index, item in enumerate(value):
            try:
                cls.sub_type.validate(item)
            except ValueError as error:
                raise ValueError(prefix_message_with_path("%s[%d]" % (path, index), str(error)))


class MetaMapping(type):
    """Collects the Type instances declared in a class body into the `_items` table (name -> (type, optional))."""

    def __new__(meta, name, bases, dct):
        items = {}
        for base in bases:
            items.update(getattr(base, "_items", {}))

        namespace = {}
        for key, value in dct.items():
            if isinstance(value, Type):
                items[key] = (type(value), value.optional)
            else:
                namespace[key] = value
        namespace["_items"] = items
        return super(MetaMapping, meta).__new__(meta, name, bases, namespace)

    def validate(cls, value, path=""):
        path = path or "%s:" % cls.name()
        if not hasattr(value, "keys"):
            raise ValueError(prefix_message_with_path(path, "expected a mapping"))

        unknown = sorted(set(value) - set(cls._items))
        if unknown:
            raise ValueError(prefix_message_with_path(path, "undefined item: %r" % unknown[0]))

        for item_name, (item_type, item_optional) in cls._items.items():
            item_path = join(path, item_name)
            item = value.get(item_name)
            if item is None:
                if not item_optional:
                    raise ValueError(prefix_message_with_path(item_path, "no value for mandatory item"))
                continue
            if issubclass(item_type, Sequence) or isinstance(item_type, MetaMapping):
                item_type.validate(item, item_path)
                continue
            try:
                item_type.validate(item)
            except ValueError as error:
                raise ValueError(prefix_message_with_path(item_path, str(error)))

    def __getitem__(cls, name):
        return cls._items[name][0]

    def __iter__(cls):
        return iter(cls._items)

    def __contains__(cls, name):
        return name in cls._items


Mapping = MetaMapping("Mapping", (Type,), {})
