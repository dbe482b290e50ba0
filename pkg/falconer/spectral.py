#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import itertools
import logging
import math

import numpy as np
from scipy.signal import fftconvolve
from scipy.spatial.distance import pdist, squareform

from falconer.exceptions import BudgetError, ValidationError
from falconer.fitting import loglog_fit

DEFAULT_BUDGET = 10**8
DEFAULT_SPHERE_NODES = 512
WEIGHT_TOLERANCE = 1e-12
ORTHOGONALITY_TOLERANCE = 1e-12
MINIMUM_SPHERE_NODES = 16
MINIMUM_ANNULUS_RESOLUTION = 32
PANEL_WIDTH = 0.5
PANEL_NODES = 12

# complex exponentials evaluated per block in fourier_transform
_BLOCK = 1 << 22


class DiscreteMeasure(object):
    """Finitely many weighted atoms in R^d.

    With `cell_width` set, every atom stands for the uniform density on the axis-aligned cube of that width centered
    at the atom, and the Fourier transform carries the corresponding sinc factor.
    """

    def __init__(self, points, weights, cell_width=None, normalized=True):
        points = np.array(points, dtype=np.float64)
        if points.ndim == 1:
            points = points.reshape(-1, 1)
        weights = np.array(weights, dtype=np.float64).reshape(-1)
        if points.ndim != 2 or points.shape[0] == 0 or points.shape[1] == 0:
            raise ValidationError("a measure needs at least one atom with at least one coordinate")
        if weights.shape[0] != points.shape[0]:
            raise ValidationError("expected %d weights, got %d" % (points.shape[0], weights.shape[0]))
        if not np.all(np.isfinite(points)) or not np.all(np.isfinite(weights)):
            raise ValidationError("a measure needs finite atoms and weights")
        if np.any(weights < 0):
            raise ValidationError("weights must be nonnegative")
        if normalized and abs(math.fsum(weights) - 1.0) > WEIGHT_TOLERANCE:
            raise ValidationError("weights must sum to 1 (sum is %r)" % math.fsum(weights))
        if cell_width is not None and not cell_width > 0:
            raise ValidationError("cell width must be positive, got %r" % (cell_width,))

        self._points = points
        self._weights = weights
        self.cell_width = cell_width
        self.normalized = normalized

    @classmethod
    def from_point_set(cls, ps):
        if ps.weights is None:
            raise ValidationError("a measure needs a weighted point set")
        return cls(ps.array.astype(np.float64), ps.weights)

    @classmethod
    def delta(cls, dim=2):
        return cls(np.zeros((1, dim)), [1.0])

    @property
    def dim(self):
        return self._points.shape[1]

    @property
    def points(self):
        return self._points

    @property
    def weights(self):
        return self._weights

    @property
    def mass(self):
        return math.fsum(self._weights)

    def with_cell_width(self, cell_width):
        return DiscreteMeasure(self._points, self._weights, cell_width, self.normalized)

    def minimum_spacing(self):
        if len(self) < 2:
            return math.inf
        return float(np.min(pdist(self._points)))

    def __len__(self):
        return self._points.shape[0]

    def __repr__(self):
        return "DiscreteMeasure(dim=%d, atoms=%d%s)" % (self.dim, len(self),
                                                         "" if self.cell_width is None else
                                                         ", cell_width=%r" % self.cell_width)


def cantor_product_measure(level, dim=2, cells=False):
    """Uniform measure on the level-`level` middle-thirds Cantor interval centers, raised to the power dim.

    With `cells` every atom carries the uniform density on its level cube of side 3^-level, so the transform follows
    the level-`level` union of cubes instead of aliasing beyond frequencies of order 3^level.
    """
    if level < 0:
        raise ValidationError("level must be nonnegative, got %r" % (level,))
    axis = np.zeros(1)
    for index in range(1, level + 1):
        axis = np.concatenate([axis, axis + 2.0 * 3.0 ** -index])
    axis = np.sort(axis) + 0.5 * 3.0 ** -level
    points = np.array(list(itertools.product(axis, repeat=dim)))
    return DiscreteMeasure(points, np.full(len(points), 1.0 / len(points)), 3.0 ** -level if cells else None)


def grid_measure(n, dim=2):
    """Uniform measure on the n^dim cell centers of [0, 1]^dim."""
    if n < 1:
        raise ValidationError("n must be positive, got %r" % (n,))
    axis = (np.arange(n) + 0.5) / n
    points = np.array(list(itertools.product(axis, repeat=dim)))
    return DiscreteMeasure(points, np.full(len(points), 1.0 / len(points)))


def scaled_measure(m, factor):
    """Image of m under x -> factor * x."""
    if not factor > 0:
        raise ValidationError("scale factor must be positive, got %r" % (factor,))
    cell_width = None if m.cell_width is None else m.cell_width * factor
    return DiscreteMeasure(m.points * factor, m.weights, cell_width, m.normalized)


class OrthogonalTransform(object):
    def __init__(self, matrix):
        matrix = np.array(matrix, dtype=np.float64)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise ValidationError("an orthogonal transform needs a square matrix")
        deviation = np.max(np.abs(matrix.T @ matrix - np.eye(matrix.shape[0])))
        if deviation > ORTHOGONALITY_TOLERANCE:
            raise ValidationError("matrix is not orthogonal (deviation %g)" % deviation)
        self.matrix = matrix

    @classmethod
    def identity(cls, dim):
        return cls(np.eye(dim))

    @property
    def dim(self):
        return self.matrix.shape[0]

    @property
    def determinant(self):
        return float(np.linalg.det(self.matrix))

    @property
    def T(self):
        return OrthogonalTransform(self.matrix.T)

    def apply(self, points):
        return np.asarray(points, dtype=np.float64) @ self.matrix.T

    def __repr__(self):
        return "OrthogonalTransform(%r)" % self.matrix.tolist()


def _matrix(g):
    return g.matrix if isinstance(g, OrthogonalTransform) else np.asarray(g, dtype=np.float64)


def fourier_transform(m, xi):
    """m^(xi) = sum_j w_j exp(-2 pi i x_j . xi); xi is one d-vector or an array of them (last axis d)."""
    xi = np.asarray(xi, dtype=np.float64)
    if xi.shape[-1:] != (m.dim,):
        raise ValidationError("frequency has %r coordinates, the measure lives in dimension %d" %
                              (xi.shape[-1:], m.dim))
    shape = xi.shape[:-1]
    frequencies = xi.reshape(-1, m.dim)
    values = np.empty(frequencies.shape[0], dtype=np.complex128)
    rows = max(1, _BLOCK // len(m))
    for start in range(0, frequencies.shape[0], rows):
        block = frequencies[start:start + rows]
        values[start:start + rows] = np.exp(-2j * np.pi * (block @ m.points.T)) @ m.weights
        if m.cell_width is not None:
            values[start:start + rows] *= np.prod(np.sinc(m.cell_width * block), axis=1)
    if not shape:
        return complex(values[0])
    return values.reshape(shape)


def pushforward_transform(m, g, xi):
    """Transform of the pushforward of m x m under (u, v) -> u - g v, evaluated through m^ alone."""
    xi = np.asarray(xi, dtype=np.float64)
    return fourier_transform(m, xi) * np.conj(fourier_transform(m, xi @ _matrix(g)))


def haar_sample(d, seed=None):
    """Draw g from the Haar measure on O(d); `seed` is an integer, None, or a numpy Generator."""
    if d < 2:
        raise ValidationError("Haar sampling needs d >= 2, got %r" % (d,))
    rng = np.random.default_rng(seed)
    q, r = np.linalg.qr(rng.standard_normal((d, d)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    q = q * signs
    if rng.random() < 0.5:
        q[:, -1] = -q[:, -1]
    return OrthogonalTransform(q)


def haar_samples(d, count, seed=None):
    rng = np.random.default_rng(seed)
    return [haar_sample(d, rng) for _ in range(count)]


def nu_g_pushforward(m, g, budget=DEFAULT_BUDGET):
    """Atomic pushforward of m x m under (u, v) -> u - g v, with coinciding atoms merged."""
    n = len(m)
    if n * n > budget:
        raise BudgetError("%d pushforward atoms exceed the budget of %d" % (n * n, budget), n * n, budget)
    matrix = _matrix(g)
    # -0.0 + 0.0 == +0.0, so signed zeros merge
    atoms = (m.points[:, None, :] - (m.points @ matrix.T)[None, :, :]).reshape(-1, m.dim) + 0.0
    weights = np.outer(m.weights, m.weights).reshape(-1)
    atoms, inverse = np.unique(atoms, axis=0, return_inverse=True)
    merged = np.bincount(inverse.reshape(-1), weights=weights, minlength=atoms.shape[0])
    return DiscreteMeasure(atoms, merged / math.fsum(merged))


def sphere_nodes(d, count):
    """Equal-weight nodes on the unit sphere: equal angles for d=2, a Fibonacci lattice for d=3."""
    if count < MINIMUM_SPHERE_NODES:
        raise ValidationError("at least %d sphere nodes are required, got %d" % (MINIMUM_SPHERE_NODES, count))
    if d == 2:
        angles = 2.0 * np.pi * np.arange(count) / count
        return np.column_stack([np.cos(angles), np.sin(angles)])
    if d == 3:
        indices = np.arange(count, dtype=np.float64) + 0.5
        phi = np.arccos(1.0 - 2.0 * indices / count)
        theta = 2.0 * np.pi * indices / ((1.0 + 5.0 ** 0.5) / 2.0)
        return np.column_stack([np.cos(theta) * np.sin(phi), np.sin(theta) * np.sin(phi), np.cos(phi)])
    raise ValidationError("spherical quadrature is only available for d=2 and d=3, got d=%d" % d)


def _spherical_averages(m, ts, nodes):
    omega = sphere_nodes(m.dim, nodes)
    ts = np.asarray(ts, dtype=np.float64)
    values = np.abs(fourier_transform(m, ts[:, None, None] * omega[None, :, :])) ** 2
    return np.minimum(np.mean(values, axis=1), 1.0) if m.normalized else np.mean(values, axis=1)


def spherical_average(m, t, nodes=DEFAULT_SPHERE_NODES):
    """Average of |m^(t omega)|^2 over the unit sphere, with the sphere measure normalized to 1."""
    if not t > 0:
        raise ValidationError("t must be positive, got %r" % (t,))
    return float(_spherical_averages(m, [t], nodes)[0])


class SphericalAverageCurve(object):
    def __init__(self, ts, sigmas, nodes):
        self.ts = tuple(float(t) for t in ts)
        self.sigmas = tuple(float(sigma) for sigma in sigmas)
        self.nodes = nodes

    def rows(self):
        return list(zip(self.ts, self.sigmas))

    def __len__(self):
        return len(self.ts)

    def __repr__(self):
        return "SphericalAverageCurve(points=%d, nodes=%d)" % (len(self.ts), self.nodes)


def spherical_average_curve(m, ts, nodes=DEFAULT_SPHERE_NODES):
    ts = [float(t) for t in ts]
    if not ts:
        raise ValidationError("a curve needs at least one t value")
    if ts[0] <= 0 or any(b <= a for a, b in zip(ts, ts[1:])):
        raise ValidationError("t values must be positive and strictly increasing")
    return SphericalAverageCurve(ts, _spherical_averages(m, ts, nodes), nodes)


def annulus_energy(m, r, resolution=64):
    """r^-d times the integral of |m^|^2 over r <= |x| <= 2r.

    Midpoint rule on a tensor grid of `resolution` cells per axis covering [-2r, 2r]^d.
    """
    if not r > 0:
        raise ValidationError("r must be positive, got %r" % (r,))
    if resolution < MINIMUM_ANNULUS_RESOLUTION:
        raise ValidationError("resolution %d leaves fewer than 8 cells across the annulus (minimum %d)" %
                              (resolution, MINIMUM_ANNULUS_RESOLUTION))
    h = 4.0 * r / resolution
    axis = -2.0 * r + h * (np.arange(resolution) + 0.5)
    grid = np.stack(np.meshgrid(*([axis] * m.dim), indexing="ij"), axis=-1).reshape(-1, m.dim)
    norms = np.sqrt(np.sum(grid * grid, axis=1))
    inside = grid[(norms >= r) & (norms <= 2.0 * r)]
    if inside.shape[0] == 0:
        return 0.0
    total = math.fsum(np.abs(fourier_transform(m, inside)) ** 2)
    return total * h ** m.dim / r ** m.dim


def dilation_averaged_energy(m, xi_norm, nodes=DEFAULT_SPHERE_NODES, scales=16):
    """Integral over a in [1, 2] (measure da/a) of the spherical average of |m^|^2 at radius a |xi|."""
    if not xi_norm > 0:
        raise ValidationError("|xi| must be positive, got %r" % (xi_norm,))
    abscissae, weights = np.polynomial.legendre.leggauss(scales)
    a = 1.5 + 0.5 * abscissae
    sigmas = _spherical_averages(m, a * xi_norm, nodes)
    return float(np.sum(0.5 * weights * sigmas / a))


class EnergyIntegral(object):
    """Off-diagonal energy sum of an atomic measure, standing in for the energy of a continuous measure."""

    discrete_surrogate = True

    def __init__(self, value, s, infinite=False):
        self.value = value
        self.s = s
        self.infinite = infinite

    def as_dict(self):
        return {"value": self.value, "s": self.s, "infinite": self.infinite,
                "discrete_surrogate": self.discrete_surrogate}

    def __float__(self):
        return float(self.value)

    def __repr__(self):
        return "EnergyIntegral(value=%r, s=%r)" % (self.value, self.s)


def energy_integral(m, s, budget=DEFAULT_BUDGET):
    if not 0 < s < m.dim:
        raise ValidationError("s must lie in (0, %d), got %r" % (m.dim, s))
    n = len(m)
    if n < 2:
        return EnergyIntegral(0.0, s)
    pairs = n * (n - 1) // 2
    if pairs > budget:
        raise BudgetError("%d atom pairs exceed the budget of %d" % (pairs, budget), pairs, budget)

    distances = pdist(m.points)
    i, j = np.triu_indices(n, 1)
    products = m.weights[i] * m.weights[j]
    coincident = (distances == 0) & (products > 0)
    if np.any(coincident):
        logging.warning("%d pairs of distinct atoms coincide; the energy is infinite" % np.count_nonzero(coincident))
        return EnergyIntegral(math.inf, s, infinite=True)
    keep = products > 0
    return EnergyIntegral(2.0 * math.fsum(products[keep] * distances[keep] ** -s), s)


def _panels(t_min, t_max, width):
    first = int(math.floor(t_min / width))
    last = int(math.ceil(t_max / width))
    for index in range(first, last):
        low = max(t_min, index * width)
        high = min(t_max, (index + 1) * width)
        if high > low:
            yield low, high


def mattila_integral(m, t_min, t_max, nodes=DEFAULT_SPHERE_NODES, panel_nodes=PANEL_NODES, budget=DEFAULT_BUDGET):
    """Integral of sigma(t)^2 t^(d-1) over [t_min, t_max].

    Composite Gauss-Legendre on the panels of a fixed grid of width 0.5, cut at t_min and t_max, so splitting an
    interval at a panel boundary reproduces the same evaluations.
    """
    if not 0 < t_min < t_max:
        raise ValidationError("need 0 < t_min < t_max, got [%r, %r]" % (t_min, t_max))
    panels = list(_panels(t_min, t_max, PANEL_WIDTH))
    required = len(panels) * panel_nodes * nodes * len(m)
    if required > budget:
        raise BudgetError("%d transform evaluations exceed the budget of %d" % (required, budget), required, budget)

    abscissae, weights = np.polynomial.legendre.leggauss(panel_nodes)
    ts = np.concatenate([0.5 * (high - low) * abscissae + 0.5 * (high + low) for low, high in panels])
    factors = np.concatenate([0.5 * (high - low) * weights for low, high in panels])
    sigmas = _spherical_averages(m, ts, nodes)
    return math.fsum(factors * sigmas ** 2 * ts ** (m.dim - 1))


class GroupEnergy(object):
    def __init__(self, value, stderr, samples, k, grid_resolution, seed=None, a_range=None):
        self.value = value
        self.stderr = stderr
        self.samples = samples
        self.k = k
        self.grid_resolution = grid_resolution
        self.seed = seed
        self.a_range = a_range

    def as_dict(self):
        result = {"value": self.value, "stderr": self.stderr, "samples": self.samples, "k": self.k,
                  "grid_resolution": self.grid_resolution, "seed": self.seed}
        if self.a_range is not None:
            result["a_range"] = list(self.a_range)
        return result

    def __repr__(self):
        return "GroupEnergy(value=%r, stderr=%r)" % (self.value, self.stderr)


def bin_measure(m, h):
    """Cell masses of m on the lattice of spacing h anchored at the lower corner of its support."""
    if not h > 0:
        raise ValidationError("grid resolution must be positive, got %r" % (h,))
    spacing = m.minimum_spacing()
    if h > spacing:
        raise ValidationError("grid resolution %r is coarser than the minimum atom spacing %r" % (h, spacing))
    indices = np.rint((m.points - m.points.min(axis=0)) / h).astype(np.int64)
    cells = np.zeros(tuple(indices.max(axis=0) + 1), dtype=np.float64)
    np.add.at(cells, tuple(indices.T), m.weights)
    return cells


def transform_cells(cells, matrix, scale=1.0):
    """Image of a cell-mass grid under x -> scale * matrix x about a central cell, by cloud-in-cell splatting."""
    dim = cells.ndim
    occupied = np.nonzero(cells)
    masses = cells[occupied]
    center = np.array([(size - 1) // 2 for size in cells.shape])
    offsets = np.column_stack(occupied) - center

    reach = int(math.ceil(scale * math.sqrt(dim) * max(cells.shape)))
    size = 2 * reach + 3
    positions = scale * (offsets @ np.asarray(matrix, dtype=np.float64).T) + (size - 1) // 2
    base = np.floor(positions).astype(np.int64)
    fraction = positions - base

    image = np.zeros((size,) * dim, dtype=np.float64)
    for corner in itertools.product((0, 1), repeat=dim):
        corner = np.array(corner)
        share = np.prod(np.where(corner, fraction, 1.0 - fraction), axis=1)
        np.add.at(image, tuple((base + corner).T), masses * share)
    return image


def correlation_energy(cells, image, k, h):
    """Integral of nu^(k+1), where nu is the density of the difference of the two cell-mass grids."""
    flipped = image[(slice(None, None, -1),) * image.ndim]
    nu = np.clip(fftconvolve(cells, flipped, mode="full"), 0.0, None)
    return float(np.sum(nu ** (k + 1))) * h ** (-cells.ndim * k)


def _estimate(values):
    values = np.asarray(values, dtype=np.float64)
    mean = float(np.mean(values))
    stderr = float(np.std(values, ddof=1) / math.sqrt(values.size)) if values.size > 1 else 0.0
    return mean, stderr


def _transform_list(transforms, d):
    result = []
    for g in transforms:
        g = g if isinstance(g, OrthogonalTransform) else OrthogonalTransform(g)
        if g.dim != d:
            raise ValidationError("transform of dimension %d applied to a measure of dimension %d" % (g.dim, d))
        result.append(g)
    if not result:
        raise ValidationError("at least one transform is required")
    return result


def group_energy(m, k, samples, grid_resolution, seed=None, transforms=None, budget=DEFAULT_BUDGET):
    """Monte Carlo estimate of the Haar average of the integral of nu_g^(k+1).

    m is binned to cells of width `grid_resolution`; nu_g is the cross-correlation of the cell masses with their
    g-rotated image. An explicit `transforms` list replaces the Haar samples.
    """
    if k < 1:
        raise ValidationError("k must be at least 1, got %r" % (k,))
    cells = bin_measure(m, grid_resolution)
    if cells.size > budget:
        raise BudgetError("a grid of %d cells exceeds the budget of %d" % (cells.size, budget), cells.size, budget)

    if transforms is None:
        if samples < 1:
            raise ValidationError("at least one Haar sample is required")
        transforms = haar_samples(m.dim, samples, seed)
    else:
        transforms = _transform_list(transforms, m.dim)

    logging.debug("group energy over %d transforms on a %s grid" % (len(transforms), "x".join(map(str, cells.shape))))
    values = [correlation_energy(cells, transform_cells(cells, g.matrix), k, grid_resolution) for g in transforms]
    mean, stderr = _estimate(values)
    return GroupEnergy(mean, stderr, len(values), k, grid_resolution, seed)


def _scale_generator(seed):
    # independent of the transform stream, which matches group_energy for the same seed
    return np.random.default_rng(np.random.SeedSequence(seed).spawn(1)[0])


def group_energy_similarity(m, k, samples, grid_resolution, a_range=(1.0, 2.0), seed=None, budget=DEFAULT_BUDGET):
    """As group_energy, with an extra dilation a drawn uniformly in log a over a_range (the normalized da/a)."""
    a_min, a_max = a_range
    if not 0 < a_min <= a_max:
        raise ValidationError("need 0 < a_min <= a_max, got %r" % (a_range,))
    if k < 1:
        raise ValidationError("k must be at least 1, got %r" % (k,))
    if samples < 1:
        raise ValidationError("at least one sample is required")
    cells = bin_measure(m, grid_resolution)
    if cells.size * a_max ** m.dim > budget:
        raise BudgetError("a grid of %d cells exceeds the budget of %d" % (cells.size, budget), cells.size, budget)

    transforms = haar_samples(m.dim, samples, seed)
    scales = np.exp(_scale_generator(seed).uniform(math.log(a_min), math.log(a_max), samples))
    values = [correlation_energy(cells, transform_cells(cells, g.matrix, a), k, grid_resolution)
              for g, a in zip(transforms, scales)]
    mean, stderr = _estimate(values)
    return GroupEnergy(mean, stderr, samples, k, grid_resolution, seed, (a_min, a_max))


class FrostmanCheck(object):
    def __init__(self, radii, masses, exponent, residual):
        self.radii = tuple(radii)
        self.masses = tuple(masses)
        self.exponent = exponent
        self.residual = residual

    def rows(self):
        return list(zip(self.radii, self.masses))

    def as_dict(self):
        return {"radii": list(self.radii), "masses": list(self.masses), "exponent": self.exponent,
                "residual": self.residual}


def frostman_check(m, radii, budget=DEFAULT_BUDGET):
    """Largest closed-ball mass around an atom for every radius, and the slope of log mass against log radius."""
    radii = [float(radius) for radius in radii]
    if len(radii) < 2:
        raise ValidationError("at least two radii are required")
    if radii[-1] <= 0 or any(b >= a for a, b in zip(radii, radii[1:])):
        raise ValidationError("radii must be positive and strictly decreasing")
    n = len(m)
    if n * n > budget:
        raise BudgetError("%d atom pairs exceed the budget of %d" % (n * n, budget), n * n, budget)

    distances = squareform(pdist(m.points)) if n > 1 else np.zeros((1, 1))
    masses = [float(np.max((distances <= radius) @ m.weights)) for radius in radii]
    fit = loglog_fit(radii, masses)
    return FrostmanCheck(radii, masses, fit.slope, fit.residual)


def gamma_exponent(s, d):
    """Decay exponent of the spherical averages for s >= d/2; None below that range."""
    if s < d / 2:
        return None
    if s <= (d + 2) / 2:
        return (d + 2 * s - 2) / 4
    return s - 1


class DecayFit(object):
    def __init__(self, slope, intercept, residual, s, d, points):
        self.slope = slope
        self.intercept = intercept
        self.residual = residual
        self.s = s
        self.d = d
        self.points = points
        self.energy_reference = -(s - 1)
        gamma = gamma_exponent(s, d)
        self.gamma_reference = None if gamma is None else -gamma

    @property
    def within_energy_bound(self):
        return self.slope <= self.energy_reference + 0.3

    @property
    def within_gamma_bound(self):
        if self.gamma_reference is None:
            return None
        return self.slope <= self.gamma_reference + 0.3

    def as_dict(self):
        return {"slope": self.slope, "intercept": self.intercept, "residual": self.residual, "s": self.s,
                "d": self.d, "points": self.points,
                "references": {"energy": self.energy_reference, "gamma": self.gamma_reference},
                "within": {"energy": self.within_energy_bound, "gamma": self.within_gamma_bound}}

    def __repr__(self):
        return "DecayFit(slope=%r, s=%r, d=%r)" % (self.slope, self.s, self.d)


def decay_fit(curve, s, d):
    rows = [(t, sigma) for t, sigma in curve.rows() if t >= 1]
    positive = [(t, sigma) for t, sigma in rows if sigma > 0]
    if len(positive) < len(rows):
        logging.warning("dropping %d nonpositive sigma values from the decay fit" % (len(rows) - len(positive)))
    if len(positive) < 4:
        raise ValidationError("a decay fit needs at least 4 positive points with t >= 1, got %d" % len(positive))
    fit = loglog_fit([t for t, _ in positive], [sigma for _, sigma in positive], minimum_points=4)
    return DecayFit(fit.slope, fit.intercept, fit.residual, s, d, fit.points)
