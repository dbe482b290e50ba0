#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import collections
import itertools
import logging
import math

import numpy as np

from falconer.enum import Mode, Relation
from falconer.exceptions import BudgetError, ValidationError
from falconer.fitting import loglog_fit
from falconer.geometry import DEFAULT_BUDGET, PointSet, count_classes
from falconer.util import map_partitions


def circle_lattice_points(n):
    """All integer pairs (a, b) with a^2 + b^2 = n, in lexicographic order."""
    if n < 0:
        raise ValidationError("n must be nonnegative, got %r" % (n,))
    radius = math.isqrt(n)
    points = []
    for a in range(-radius, radius + 1):
        remainder = n - a * a
        b = math.isqrt(remainder)
        if b * b == remainder:
            points.extend([(a, -b), (a, b)] if b else [(a, 0)])
    return points


def sphere_lattice_points(n):
    """All integer triples (a, b, c) with a^2 + b^2 + c^2 = n, in lexicographic order."""
    if n < 0:
        raise ValidationError("n must be nonnegative, got %r" % (n,))
    radius = math.isqrt(n)
    points = []
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            remainder = n - a * a - b * b
            if remainder < 0:
                continue
            c = math.isqrt(remainder)
            if c * c == remainder:
                points.extend([(a, b, -c), (a, b, c)] if c else [(a, b, 0)])
    return points


def representation_counts(nmax, squares=2):
    """r(n) for 0 <= n <= nmax: the number of ways to write n as a sum of `squares` integer squares."""
    radius = math.isqrt(nmax)
    axis = np.arange(-radius, radius + 1, dtype=np.int64) ** 2
    values = axis
    for _ in range(squares - 1):
        values = (values[:, None] + axis[None, :]).ravel()
        values = values[values <= nmax]
    return np.bincount(values, minlength=nmax + 1)


def circle_count_profile(limits):
    """Rows (N, max r_2(n) over n <= N) for every N in limits."""
    limits = sorted(set(int(limit) for limit in limits))
    if not limits or limits[0] < 0:
        raise ValidationError("limits must be nonnegative integers")
    running = np.maximum.accumulate(representation_counts(limits[-1], 2))
    return [(limit, int(running[limit])) for limit in limits]


class LatticeBox(object):
    def __init__(self, dim, q):
        if dim < 1:
            raise ValidationError("invalid dimension: %r" % (dim,))
        if q < 0:
            raise ValidationError("box side must be nonnegative, got %r" % (q,))
        self.dim = dim
        self.q = q

    @property
    def size(self):
        return (self.q + 1) ** self.dim

    def point_set(self, budget=DEFAULT_BUDGET):
        if self.size > budget:
            raise BudgetError("a box with %d points exceeds the budget of %d" % (self.size, budget), self.size,
                              budget)
        return PointSet.grid(self.q, self.dim)

    def __repr__(self):
        return "LatticeBox(dim=%d, q=%d)" % (self.dim, self.q)


GrowthEntry = collections.namedtuple("GrowthEntry", ["q", "count"])


class GrowthRecord(object):
    """Class counts of growing lattice boxes, and the power law fitted through them."""

    def __init__(self, entries=()):
        self.entries = []
        self.exponent = None
        self.intercept = None
        self.residual = None
        for entry in entries:
            self.append(entry)

    def append(self, entry):
        entry = GrowthEntry(*entry)
        if self.entries and entry.q <= self.entries[-1].q:
            raise ValidationError("q values must be strictly increasing (%d after %d)" % (entry.q, self.entries[-1].q))
        if entry.count <= 0:
            raise ValidationError("class counts must be positive (q=%d has %d)" % (entry.q, entry.count))
        self.entries.append(entry)

    def as_dict(self):
        return {"entries": [{"q": entry.q, "count": entry.count} for entry in self.entries],
                "beta": self.exponent, "residual": self.residual}

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


class _ReducedTriangleCensus(object):
    # planar triangle keys with the first vertex at the origin, for one value of the first coordinate of v
    def __init__(self, q, relation):
        self.q = q
        self.relation = relation

    def __call__(self, vx):
        q = self.q
        modulus = 2 * q * q + 1
        span = np.arange(-q, q + 1, dtype=np.int64)
        wx, wy = [axis.ravel() for axis in np.meshgrid(span, span, indexing="ij")]
        keys = []
        for vy in range(-q, q + 1):
            keep = vx * wy - vy * wx != 0
            keep &= np.maximum(np.maximum(vx, wx), 0) - np.minimum(np.minimum(vx, wx), 0) <= q
            keep &= np.maximum(np.maximum(vy, wy), 0) - np.minimum(np.minimum(vy, wy), 0) <= q
            x, y = wx[keep], wy[keep]
            if x.size == 0:
                continue
            sides = np.sort(np.column_stack([np.full_like(x, vx * vx + vy * vy), x * x + y * y,
                                             (vx - x) ** 2 + (vy - y) ** 2]), axis=1)
            if self.relation == Relation.similarity:
                sides //= np.gcd(np.gcd(sides[:, 0], sides[:, 1]), sides[:, 2])[:, None]
            keys.append(np.unique((sides[:, 0] * modulus + sides[:, 1]) * modulus + sides[:, 2]))
        if not keys:
            return np.empty(0, dtype=np.int64)
        return np.unique(np.concatenate(keys))


def grid_simplex_census(box, k, relation=Relation.congruence, budget=DEFAULT_BUDGET, method="auto", processes=None):
    """Number of congruence (or similarity) classes of nondegenerate k-simplices with vertices in the box.

    Planar triangles use the translation reduction: one vertex sits at the origin, the others range over
    [-q, q]^2, and a triangle is admitted when its bounding box fits in the box. Other cases, or method="direct",
    enumerate the box's vertex sets.
    """
    relation = Relation.coerce(relation)
    if method not in ("auto", "reduced", "direct"):
        raise ValidationError("unknown census method: %r" % (method,))
    if k > box.dim:
        raise ValidationError("k=%d exceeds the dimension %d of the box" % (k, box.dim))

    reduced = box.dim == 2 and k == 2 and method != "direct"
    if method == "reduced" and not reduced:
        raise ValidationError("the translation reduction only applies to planar triangles")

    if reduced:
        required = (2 * box.q + 1) ** 4
        if required > budget:
            raise BudgetError("the reduced census of q=%d needs %d pairs, exceeding the budget of %d" %
                              (box.q, required, budget), required, budget)
        logging.debug("reduced triangle census for q=%d (%d vertex pairs)" % (box.q, required))
        partial = map_partitions(_ReducedTriangleCensus(box.q, relation), range(-box.q, box.q + 1), processes)
        count = int(np.unique(np.concatenate(partial)).size)
    else:
        count = count_classes(box.point_set(budget), k, relation, budget=budget, processes=processes).count
    return GrowthEntry(box.q, count)


def fit_growth_exponent(record):
    """Fit count ~ C q^beta; stores and returns beta."""
    if len(record) < 4:
        raise ValidationError("a growth fit needs at least 4 points, got %d" % len(record))
    fit = loglog_fit([entry.q for entry in record], [entry.count for entry in record], minimum_points=4)
    record.exponent = fit.slope
    record.intercept = fit.intercept
    record.residual = fit.residual
    return fit.slope


def growth_record(qs, k=2, dim=2, relation=Relation.congruence, budget=DEFAULT_BUDGET, processes=None):
    record = GrowthRecord()
    for q in sorted(qs):
        record.append(grid_simplex_census(LatticeBox(dim, q), k, relation, budget, processes=processes))
    fit_growth_exponent(record)
    return record


def sharpness_scales(levels):
    """q_1 = 2 and q_{i+1} = q_i^i + 1, the smallest integers with q_{i+1} > q_i^i."""
    if levels < 1:
        raise ValidationError("at least one level is required")
    scales = [2]
    for index in range(1, levels):
        scales.append(scales[-1] ** index + 1)
    return scales


class SharpnessSet(object):
    """One construction level: the lattice points of [0, q]^d scaled into [0, 1]^d.

    Each center carries a neighborhood of half-width q^(-d/s) / q, kept as (q, s) and evaluated on demand.
    """

    radius_formula = "q^(-d/s)/q"

    def __init__(self, dim, q, s, centers):
        self.dim = dim
        self.q = q
        self.s = s
        self.centers = centers

    @property
    def radius(self):
        return self.q ** (-self.dim / self.s) / self.q

    def lattice_points(self):
        return PointSet.grid(self.q, self.dim)

    def as_dict(self):
        return {"d": self.dim, "q": self.q, "s": self.s, "centers": len(self.centers), "radius": self.radius,
                "radius_formula": self.radius_formula}

    def __repr__(self):
        return "SharpnessSet(d=%d, q=%d, s=%r, centers=%d)" % (self.dim, self.q, self.s, len(self.centers))


def build_sharpness_set(d, s, q):
    if not 0 < s < d:
        raise ValidationError("s must lie in (0, %d), got %r" % (d, s))
    if q < 2:
        raise ValidationError("q must be at least 2, got %r" % (q,))
    centers = [tuple(m / q for m in point) for point in itertools.product(range(q + 1), repeat=d)]
    return SharpnessSet(d, q, s, PointSet(centers, dim=d, mode=Mode.float))


def triangle_volume_bound(q, s, class_count):
    """Measure bound for the triangle classes of one planar level: q^(-6/s) times the class count."""
    return q ** (-6.0 / s) * class_count


def tetrahedron_volume_bound(q, s):
    """Trivial measure bound for the tetrahedron classes of one level in three dimensions."""
    return q ** (-18.0 / s) * q ** 9


class ThreeSpheresCensus(object):
    def __init__(self, radii, table, triangles):
        self.radii = radii
        self.table = table
        self.triangles = triangles

    @property
    def count(self):
        return len(self.table)

    def rows(self):
        return [{"radii": list(key[0]), "key": list(key[1]), "multiplicity": multiplicity}
                for key, multiplicity in sorted(self.table.items())]

    def __repr__(self):
        return "ThreeSpheresCensus(radii=%r, count=%d)" % (self.radii, self.count)


def three_spheres_triangle_census(n1, n2, n3, distinct=True, nondegenerate=True, budget=DEFAULT_BUDGET):
    """Congruence classes of triangles (u, v, w) with |u|^2 = n1, |v|^2 = n2 and |w|^2 = n3 on the integer lattice.

    A class is the lexicographically smallest side vector over the vertex permutations that keep every vertex on its
    own sphere, together with the sorted radius multiset.
    """
    radii = (n1, n2, n3)
    spheres = []
    for n in radii:
        points = sphere_lattice_points(n)
        if not points:
            raise ValidationError("the sphere |x|^2 = %d has no lattice points" % n)
        spheres.append(np.array(points, dtype=np.int64))

    required = spheres[0].shape[0] * spheres[1].shape[0] * spheres[2].shape[0]
    if required > budget:
        raise BudgetError("%d vertex triples exceed the budget of %d" % (required, budget), required, budget)

    u = spheres[0][:, None, None, :]
    v = spheres[1][None, :, None, :]
    w = spheres[2][None, None, :, :]
    shape = (u.shape[0], v.shape[1], w.shape[2])
    sides = {(0, 1): np.sum((u - v) ** 2, axis=-1), (0, 2): np.sum((u - w) ** 2, axis=-1),
             (1, 2): np.sum((v - w) ** 2, axis=-1)}
    sides = dict((pair, np.broadcast_to(value, shape)) for pair, value in sides.items())

    keep = np.ones(shape, dtype=bool)
    if distinct:
        keep &= (sides[(0, 1)] != 0) & (sides[(0, 2)] != 0) & (sides[(1, 2)] != 0)
    if nondegenerate:
        keep &= np.any(np.cross(v - u, w - u) != 0, axis=-1)

    def side(i, j):
        return sides[(min(i, j), max(i, j))][keep]

    modulus = 4 * max(radii) + 1
    encoded = None
    for permutation in itertools.permutations(range(3)):
        if any(radii[permutation[i]] != radii[i] for i in range(3)):
            continue
        a, b, c = (side(permutation[i], permutation[j]) for i, j in ((0, 1), (0, 2), (1, 2)))
        candidate = (a * modulus + b) * modulus + c
        encoded = candidate if encoded is None else np.minimum(encoded, candidate)

    values, counts = np.unique(encoded, return_counts=True)
    radius_key = tuple(sorted(radii))
    table = {}
    for value, count in zip(values.tolist(), counts.tolist()):
        entries = (value // (modulus * modulus), (value // modulus) % modulus, value % modulus)
        table[(radius_key, entries)] = count
    return ThreeSpheresCensus(radii, table, int(np.count_nonzero(keep)))
