#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from falconer.exceptions import ValidationError


class MetaEnum(type):
    def __new__(meta, name, bases, dct):
        class_dct = dct.copy()
        for value, item in enumerate(dct.get('_items', [])):
            class_dct[item] = value
        return super(MetaEnum, meta).__new__(meta, name, bases, class_dct)

    def count(cls):
        return len(cls._items)

    def valid(cls, value):
        return value in range(len(cls._items))

    def items(cls):
        return cls._items

    def to_string(cls, value):
        if not cls.valid(value):
            raise ValidationError("enumeration: %s has no item with value: %r" % (cls.__name__, value))
        return cls._items[value]

    def from_string(cls, value):
        try:
            return cls._items.index(value)
        except ValueError:
            raise ValidationError("enumeration: %s does not contain: %r (expected one of: %s)" %
                                  (cls.__name__, value, ", ".join(cls._items)))

    def coerce(cls, value):
        '''accept either an item name or an item value'''
        if isinstance(value, str):
            return cls.from_string(value)
        if not cls.valid(value):
            raise ValidationError("enumeration: %s has no item with value: %r" % (cls.__name__, value))
        return value


Enum = MetaEnum('Enum', (), {})


class Mode(Enum):
    '''Coordinate mode of a point set.'''
    _items = ["exact", "float"]


class Relation(Enum):
    '''Equivalence relation used to classify simplices.'''
    _items = ["congruence", "similarity"]
