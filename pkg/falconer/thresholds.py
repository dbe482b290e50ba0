#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

from fractions import Fraction

from falconer.exceptions import ValidationError


class Thresholds(object):
    """Dimension thresholds for k-simplices in R^d, as exact fractions."""

    def __init__(self, k, d):
        self.k = k
        self.d = d
        self.t_kd = Fraction(d * k + 1, k + 1)
        self.s_kd = Fraction(d * k, k + 1)
        self.lower_bound = max(Fraction(k - 1), Fraction(d, 2))
        self.falconer_necessary = Fraction(d, 2)
        self.mattila_sufficient = Fraction(d + 1, 2)
        self.planar_special = Fraction(8, 5) if d == k == 2 else None
        self.planar_lower = Fraction(3, 2) if d == k == 2 else None
        self.previous_similarity = Fraction(2 * d * d - d + 1, 2 * d) if k == d else None

    def as_dict(self):
        def value(fraction):
            return None if fraction is None else float(fraction)

        def text(fraction):
            return None if fraction is None else str(fraction)

        fields = ("t_kd", "s_kd", "lower_bound", "planar_special", "planar_lower", "previous_similarity",
                  "falconer_necessary", "mattila_sufficient")
        result = {"k": self.k, "d": self.d}
        result.update((name, value(getattr(self, name))) for name in fields)
        result["exact"] = dict((name, text(getattr(self, name))) for name in fields)
        result["t"] = value(self.t_kd)
        result["s"] = value(self.s_kd)
        result["lower"] = value(self.lower_bound)
        return result

    def __repr__(self):
        return "Thresholds(k=%d, d=%d, t=%s, s=%s, lower=%s)" % (self.k, self.d, self.t_kd, self.s_kd,
                                                                 self.lower_bound)


def thresholds(k, d):
    if k < 1 or d < 1:
        raise ValidationError("k and d must be positive, got k=%r, d=%r" % (k, d))
    if k > d:
        raise ValidationError("k=%d exceeds the dimension d=%d" % (k, d))
    return Thresholds(k, d)
