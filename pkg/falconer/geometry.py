#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import collections
import itertools
import logging
import math
from functools import reduce

import numpy as np

from falconer.enum import Mode, Relation
from falconer.exceptions import BudgetError, ValidationError
from falconer.util import map_partitions

DEFAULT_BUDGET = 10**8
DEFAULT_QUANTIZATION = 1e-9
DEGENERACY_TOLERANCE = 1e-9
WEIGHT_TOLERANCE = 1e-12

_INT64_MIN = -2**63
_INT64_MAX = 2**63 - 1


def _is_integer(value):
    return isinstance(value, (int, np.integer)) and not isinstance(value, (bool, np.bool_))


class PointSet(object):
    """A finite list of d-dimensional points, optionally carrying probability weights.

    In exact mode all coordinates are integers and every squared distance is guaranteed to fit in a signed 64-bit
    integer; in float mode coordinates are reals.
    """

    def __init__(self, points, dim=None, mode=Mode.float, weights=None):
        mode = Mode.coerce(mode)
        points = [tuple(point) for point in points]
        if dim is None:
            if not points:
                raise ValidationError("cannot infer the dimension of an empty point set")
            dim = len(points[0])
        if not _is_integer(dim) or dim < 1:
            raise ValidationError("invalid dimension: %r" % (dim,))

        for index, point in enumerate(points):
            if len(point) != dim:
                raise ValidationError("point %d has %d coordinates, expected %d" % (index, len(point), dim))

        if mode == Mode.exact:
            for index, point in enumerate(points):
                if not all(_is_integer(x) for x in point):
                    raise ValidationError("point %d has a non-integer coordinate in exact mode" % index)
            points = [tuple(int(x) for x in point) for point in points]
            for index, point in enumerate(points):
                if any(x < _INT64_MIN or x > _INT64_MAX for x in point):
                    raise ValidationError("point %d has a coordinate that does not fit in 64 bits" % index)
            if points:
                span = max(max(point[m] for point in points) - min(point[m] for point in points)
                           for m in range(dim))
                if dim * span * span > _INT64_MAX:
                    raise ValidationError("squared distances overflow 64-bit integers (coordinate span %d)" % span)
            self._array = np.array(points, dtype=np.int64).reshape(len(points), dim)
        else:
            self._array = np.array(points, dtype=np.float64).reshape(len(points), dim)
            if not np.all(np.isfinite(self._array)):
                raise ValidationError("point set contains non-finite coordinates")

        if weights is not None:
            weights = np.asarray(weights, dtype=np.float64)
            if weights.shape != (len(points),):
                raise ValidationError("expected %d weights, got %d" % (len(points), weights.size))
            if np.any(weights < 0):
                raise ValidationError("weights must be nonnegative")
            if abs(math.fsum(weights) - 1.0) > WEIGHT_TOLERANCE:
                raise ValidationError("weights must sum to 1 (sum is %r)" % math.fsum(weights))

        self._points = points
        self._dim = dim
        self._mode = mode
        self._weights = weights

    @classmethod
    def grid(cls, q, dim=2):
        """Integer grid {0, ..., q}^dim in exact mode."""
        return cls(list(itertools.product(range(q + 1), repeat=dim)), dim=dim, mode=Mode.exact)

    @property
    def dim(self):
        return self._dim

    @property
    def mode(self):
        return self._mode

    @property
    def exact(self):
        return self._mode == Mode.exact

    @property
    def points(self):
        return self._points

    @property
    def weights(self):
        return self._weights

    @property
    def array(self):
        return self._array

    def with_uniform_weights(self):
        n = len(self._points)
        if n == 0:
            raise ValidationError("cannot weight an empty point set")
        return PointSet(self._points, self._dim, self._mode, np.full(n, 1.0 / n))

    def squared_distance(self, i, j):
        if self.exact:
            return sum((a - b) * (a - b) for a, b in zip(self._points[i], self._points[j]))
        difference = self._array[i] - self._array[j]
        return float(np.dot(difference, difference))

    def __len__(self):
        return len(self._points)

    def __getitem__(self, index):
        return self._points[index]

    def __repr__(self):
        return "PointSet(dim=%d, mode=%s, n=%d%s)" % (self._dim, Mode.to_string(self._mode), len(self._points),
                                                        ", weighted" if self._weights is not None else "")


class Configuration(object):
    """An ordered (k+1)-tuple of point indices."""

    def __init__(self, k, vertex_indices):
        vertex_indices = tuple(vertex_indices)
        if not _is_integer(k) or k < 1:
            raise ValidationError("invalid simplex order k: %r" % (k,))
        if len(vertex_indices) != k + 1:
            raise ValidationError("a %d-simplex needs %d vertices, got %d" % (k, k + 1, len(vertex_indices)))
        self._k = k
        self._vertex_indices = vertex_indices

    @property
    def k(self):
        return self._k

    @property
    def vertex_indices(self):
        return self._vertex_indices

    def check(self, ps):
        for index in self._vertex_indices:
            if not _is_integer(index) or not 0 <= index < len(ps):
                raise ValidationError("vertex index %r out of range for a point set of %d points" % (index, len(ps)))

    def __len__(self):
        return len(self._vertex_indices)

    def __iter__(self):
        return iter(self._vertex_indices)

    def __eq__(self, other):
        return self._k == other._k and self._vertex_indices == other._vertex_indices

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self._k, self._vertex_indices))

    def __repr__(self):
        return "Configuration(k=%d, vertex_indices=%r)" % (self._k, self._vertex_indices)


class CongruenceKey(object):
    def __init__(self, k, entries, canonical=True):
        entries = tuple(entries)
        if len(entries) != k * (k + 1) // 2:
            raise ValidationError("a key for k=%d needs %d entries, got %d" % (k, k * (k + 1) // 2, len(entries)))
        self._k = k
        self._entries = entries
        self._canonical = canonical

    @property
    def k(self):
        return self._k

    @property
    def entries(self):
        return self._entries

    @property
    def canonical(self):
        return self._canonical

    def as_list(self):
        return list(self._entries)

    def __eq__(self, other):
        return type(self) is type(other) and self._k == other._k and self._entries == other._entries

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return (self._k, self._entries) < (other._k, other._entries)

    def __hash__(self):
        return hash((type(self).__name__, self._k, self._entries))

    def __repr__(self):
        return "%s(k=%d, entries=%r)" % (type(self).__name__, self._k, self._entries)


class SimilarityKey(CongruenceKey):
    """Congruence key normalized for scale.

    Exact mode entries are divided by their gcd. Float mode entries are quantized multiples of `scale` of the squared
    distances divided by the largest one; `ratios` gives the normalized values (largest exactly 1).
    """

    def __init__(self, k, entries, canonical=True, scale=None):
        super(SimilarityKey, self).__init__(k, entries, canonical)
        self._scale = scale

    @property
    def scale(self):
        return self._scale

    @property
    def ratios(self):
        largest = max(self._entries)
        return tuple(entry / largest for entry in self._entries)


def _pairs(k):
    return [(i, j) for i in range(k + 1) for j in range(i + 1, k + 1)]


def squared_distance_vector(ps, c):
    """Return the squared distances of the configuration for pairs (1,2), (1,3), ..., (k,k+1)."""
    c.check(ps)
    vertices = c.vertex_indices
    return tuple(ps.squared_distance(vertices[i], vertices[j]) for i, j in _pairs(c.k))


def _determinant(matrix):
    """Exact determinant of a square integer matrix (fraction-free Bareiss elimination)."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    previous = 1
    for i in range(n - 1):
        if a[i][i] == 0:
            for r in range(i + 1, n):
                if a[r][i] != 0:
                    a[i], a[r] = a[r], a[i]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) // previous
        previous = a[i][i]
    return sign * a[n - 1][n - 1]


def _gram_from_squared(vector, k):
    # twice the Gram matrix of the offsets x^j - x^1, from the squared distances alone
    index = dict(((i, j), entry) for (i, j), entry in zip(_pairs(k), vector))

    def squared(i, j):
        if i == j:
            return 0
        return index[(min(i, j), max(i, j))]

    return [[squared(0, i) + squared(0, j) - squared(i, j) for j in range(1, k + 1)] for i in range(1, k + 1)]


def _full_rank(gram):
    # relative rank criterion on the singular values of the offset matrix (square roots of the gram eigenvalues)
    eigenvalues = np.clip(np.linalg.eigvalsh(np.asarray(gram, dtype=np.float64)), 0.0, None)
    singular = np.sqrt(eigenvalues)
    largest = singular.max() if singular.size else 0.0
    return bool(largest > 0.0 and singular.min() >= DEGENERACY_TOLERANCE * largest)


def vector_is_nondegenerate(vector, k, exact=True):
    """Nondegeneracy of a simplex given only its squared distance vector."""
    gram = _gram_from_squared(vector, k)
    if exact:
        return _determinant(gram) != 0
    return _full_rank(gram)


def is_nondegenerate(ps, c):
    c.check(ps)
    if c.k > ps.dim:
        return False
    vertices = c.vertex_indices
    if ps.exact:
        base = ps.points[vertices[0]]
        offsets = [[a - b for a, b in zip(ps.points[index], base)] for index in vertices[1:]]
        gram = [[sum(x * y for x, y in zip(u, v)) for v in offsets] for u in offsets]
        return _determinant(gram) != 0

    offsets = ps.array[list(vertices[1:])] - ps.array[vertices[0]]
    singular = np.linalg.svd(offsets, compute_uv=False)
    largest = singular.max() if singular.size else 0.0
    return bool(largest > 0.0 and singular.min() >= DEGENERACY_TOLERANCE * largest)


def _quantize(vector, scale):
    return tuple(int(round(value / scale)) for value in vector)


def _canonical_entries(vector, k):
    """Lexicographically minimal upper-triangle vector over all (k+1)! vertex permutations."""
    matrix = [[0] * (k + 1) for _ in range(k + 1)]
    for (i, j), entry in zip(_pairs(k), vector):
        matrix[i][j] = matrix[j][i] = entry
    if k == 1:
        return tuple(vector)
    if k == 2:
        # the symmetric group on three vertices acts as the full symmetric group on the three edges
        return tuple(sorted(vector))
    pairs = _pairs(k)
    return min(tuple(matrix[p[i]][p[j]] for i, j in pairs) for p in itertools.permutations(range(k + 1)))


def _key_vector(ps, c, scale):
    vector = squared_distance_vector(ps, c)
    if ps.exact:
        return vector
    if scale is None:
        raise ValidationError("float mode keys need a quantization scale")
    if scale <= 0:
        raise ValidationError("quantization scale must be positive")
    return _quantize(vector, scale)


def congruence_key(ps, c, scale=DEFAULT_QUANTIZATION):
    return CongruenceKey(c.k, _canonical_entries(_key_vector(ps, c, scale), c.k))


def _similarity_entries(vector, k, exact, scale):
    if exact:
        divisor = reduce(math.gcd, vector, 0)
        if divisor == 0:
            raise ValidationError("all vertices coincide; the configuration has no similarity class")
        return _canonical_entries(tuple(entry // divisor for entry in vector), k)

    largest = max(vector)
    if largest <= 0:
        raise ValidationError("all vertices coincide; the configuration has no similarity class")
    return _canonical_entries(_quantize([entry / largest for entry in vector], scale), k)


def similarity_key(ps, c, scale=DEFAULT_QUANTIZATION):
    vector = squared_distance_vector(ps, c)
    if not ps.exact and scale is None:
        raise ValidationError("float mode keys need a quantization scale")
    if not ps.exact and scale <= 0:
        raise ValidationError("quantization scale must be positive")
    return SimilarityKey(c.k, _similarity_entries(vector, c.k, ps.exact, scale), scale=None if ps.exact else scale)


def _make_key(ps, c, relation, scale):
    if relation == Relation.congruence:
        return congruence_key(ps, c, scale)
    return similarity_key(ps, c, scale)


class ClassCensus(object):
    """Result of a class enumeration: the class count and the multiplicity of every key."""

    def __init__(self, k, relation, table, enumerated, sampled=False):
        self.k = k
        self.relation = relation
        self.table = table
        self.enumerated = enumerated
        self.sampled = sampled

    @property
    def count(self):
        return len(self.table)

    def rows(self):
        return [{"key": key.as_list(), "multiplicity": multiplicity}
                for key, multiplicity in sorted(self.table.items())]

    def __repr__(self):
        return "ClassCensus(k=%d, relation=%s, count=%d%s)" % (self.k, Relation.to_string(self.relation), self.count,
                                                               ", sampled" if self.sampled else "")


class _ClassCounter(object):
    # counts the keys of all (k+1)-combinations whose smallest index is the given leading index
    def __init__(self, ps, k, relation, include_degenerate, scale):
        self.ps = ps
        self.k = k
        self.relation = relation
        self.include_degenerate = include_degenerate
        self.scale = scale

    def count(self, combinations):
        table = collections.Counter()
        for combination in combinations:
            c = Configuration(self.k, combination)
            if not self.include_degenerate and not is_nondegenerate(self.ps, c):
                continue
            try:
                key = _make_key(self.ps, c, self.relation, self.scale)
            except ValidationError:
                # coincident vertices have no similarity class
                continue
            table[key] += 1
        return table

    def __call__(self, leading):
        n = len(self.ps)
        return self.count((leading,) + rest for rest in itertools.combinations(range(leading + 1, n), self.k))


def count_classes(ps, k, relation=Relation.congruence, include_degenerate=False, budget=DEFAULT_BUDGET,
                  samples=None, seed=None, processes=None, scale=DEFAULT_QUANTIZATION, progress=False):
    """Count the distinct congruence (or similarity) classes of k-simplices with vertices in the point set.

    Enumeration runs over index combinations, since the keys absorb vertex permutations. If the number of
    combinations exceeds the budget, `samples` random combinations are drawn instead (seeded) and the count becomes a
    lower bound; without `samples` a BudgetError is raised.
    """
    relation = Relation.coerce(relation)
    if not _is_integer(k) or k < 1:
        raise ValidationError("invalid simplex order k: %r" % (k,))
    if k > ps.dim:
        raise ValidationError("k=%d exceeds the dimension %d of the point set" % (k, ps.dim))

    n = len(ps)
    total = math.comb(n, k + 1)
    counter = _ClassCounter(ps, k, relation, include_degenerate, scale)

    if total > budget:
        if samples is None:
            raise BudgetError("enumerating %d combinations exceeds the budget of %d" % (total, budget), total, budget)
        logging.warning("enumerating %d random combinations out of %d; the class count is a lower bound" %
                        (samples, total))
        rng = np.random.default_rng(seed)
        combinations = [tuple(sorted(int(i) for i in rng.choice(n, size=k + 1, replace=False)))
                        for _ in range(samples)]
        return ClassCensus(k, relation, dict(counter.count(combinations)), samples, sampled=True)

    logging.debug("enumerating %d combinations of %d points" % (total, n))
    table = collections.Counter()
    for partial in map_partitions(counter, range(max(n - k, 0)), processes, progress):
        table.update(partial)
    return ClassCensus(k, relation, dict(table), total)


def distance_set(ps):
    """Sorted distinct nonzero squared distances determined by the point set."""
    values = set()
    for i, j in itertools.combinations(range(len(ps)), 2):
        value = ps.squared_distance(i, j)
        if value != 0:
            values.add(value)
    return sorted(values)


class ThickenedMeasure(object):
    def __init__(self, value, stderr=0.0, exact=True, samples=None, seed=None):
        self.value = value
        self.stderr = stderr
        self.exact = exact
        self.samples = samples
        self.seed = seed

    def as_dict(self):
        return {"value": self.value, "stderr": self.stderr, "exact": self.exact, "samples": self.samples,
                "seed": self.seed}

    def __repr__(self):
        return "ThickenedMeasure(value=%r, stderr=%r)" % (self.value, self.stderr)


def _tuple_distances(array, indices, k):
    pairs = _pairs(k)
    squared = np.empty((indices.shape[0], len(pairs)), dtype=array.dtype)
    for column, (i, j) in enumerate(pairs):
        difference = array[indices[:, i]] - array[indices[:, j]]
        squared[:, column] = np.sum(difference * difference, axis=1)
    return squared


def thickened_pair_measure(ps, k, epsilon, budget=DEFAULT_BUDGET, samples=None, seed=None, include_degenerate=True,
                           chunk_size=1 << 20):
    """mu^{2(k+1)} measure of the pairs of (k+1)-tuples whose corresponding distances differ by at most epsilon.

    The exact path sums over all ordered pairs of ordered tuples, grouping tuples with identical distance vectors
    first. When n^{2(k+1)} exceeds the budget, `samples` pairs are drawn from mu instead and the standard error of the
    estimate is reported.
    """
    if ps.weights is None:
        raise ValidationError("the thickened pair measure needs a weighted point set")
    if not epsilon > 0:
        raise ValidationError("epsilon must be positive, got %r" % (epsilon,))
    if not _is_integer(k) or k < 1:
        raise ValidationError("invalid simplex order k: %r" % (k,))

    n = len(ps)
    weights = ps.weights
    required = n ** (2 * (k + 1))

    if required > budget:
        if samples is None:
            raise BudgetError("summing over %d ordered tuple pairs exceeds the budget of %d" % (required, budget),
                              required, budget)
        rng = np.random.default_rng(seed)
        indices = rng.choice(n, size=(samples, 2 * (k + 1)), p=weights)
        left = np.sqrt(_tuple_distances(ps.array, indices[:, :k + 1], k).astype(np.float64))
        right = np.sqrt(_tuple_distances(ps.array, indices[:, k + 1:], k).astype(np.float64))
        hits = np.all(np.abs(left - right) <= epsilon, axis=1)
        if not include_degenerate:
            left_ok = np.array([vector_is_nondegenerate(tuple(row), k, ps.exact)
                                for row in _tuple_distances(ps.array, indices[:, :k + 1], k).tolist()])
            right_ok = np.array([vector_is_nondegenerate(tuple(row), k, ps.exact)
                                 for row in _tuple_distances(ps.array, indices[:, k + 1:], k).tolist()])
            hits &= left_ok & right_ok
        value = float(np.mean(hits))
        stderr = math.sqrt(value * (1.0 - value) / samples)
        return ThickenedMeasure(value, stderr, exact=False, samples=samples, seed=seed)

    indices = np.array(list(itertools.product(range(n), repeat=k + 1)), dtype=np.int64).reshape(-1, k + 1)
    squared = _tuple_distances(ps.array, indices, k)
    tuple_weights = np.prod(weights[indices], axis=1)

    vectors, inverse = np.unique(squared, axis=0, return_inverse=True)
    class_weights = np.bincount(inverse.reshape(-1), weights=tuple_weights, minlength=vectors.shape[0])
    if not include_degenerate:
        keep = np.array([vector_is_nondegenerate(tuple(row), k, ps.exact) for row in vectors.tolist()], dtype=bool)
        class_weights = np.where(keep, class_weights, 0.0)

    distances = np.sqrt(vectors.astype(np.float64))
    count = distances.shape[0]
    rows = max(1, chunk_size // max(count, 1))
    partial = []
    for start in range(0, count, rows):
        block = distances[start:start + rows]
        close = np.all(np.abs(block[:, None, :] - distances[None, :, :]) <= epsilon, axis=2)
        partial.append(class_weights[start:start + rows] @ (close @ class_weights))
    value = float(np.sum(partial)) if partial else 0.0
    return ThickenedMeasure(min(max(value, 0.0), 1.0))
