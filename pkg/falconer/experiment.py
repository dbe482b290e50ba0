#
# Copyright (C) 2024 The falconer developers.
#

from __future__ import absolute_import, division, print_function

import datetime
import logging
import math
import os

import falconer
from falconer import formats, geometry, lattice, spectral
from falconer.enum import Relation
from falconer.exceptions import ValidationError
from falconer.thresholds import thresholds
from falconer.util import hash_file, make_path

MANIFEST = "manifest.json"

DEFAULT_SEED = 0
DEFAULT_SAMPLES = 64
DEFAULT_LEVEL = 4
DEFAULT_GRID = 32
DEFAULT_NMAX = 100


class Artifacts(object):
    """Output files of one run, collected for the manifest."""

    def __init__(self, directory):
        self.directory = directory
        self.paths = []

    def _path(self, name):
        path = os.path.join(self.directory, name)
        self.paths.append(path)
        return path

    def json(self, name, payload):
        return formats.write_json(self._path(name), payload)

    def csv(self, name, columns, rows, comments=()):
        return formats.write_csv(self._path(name), columns, rows, comments)

    def point_set(self, name, ps):
        return formats.write_point_set(self._path(name), ps)

    def curve(self, name, curve):
        return formats.write_curve(self._path(name), curve)

    def manifest(self, config):
        outputs = [{"path": os.path.basename(path), "hash": hash_file(path)} for path in self.paths]
        payload = {
            "tool": "falconer",
            "version": falconer.__version__,
            "experiment": config.kind,
            "parameters": config.as_dict(),
            "outputs": outputs,
            "created": datetime.datetime.now(datetime.timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ"),
        }
        return formats.write_json(os.path.join(self.directory, MANIFEST), payload)


def load_measure(config, cells=False):
    if config.input is not None:
        return formats.read_measure(config.input)
    dim = config.get("d", 2)
    if config.measure == "cantor":
        return spectral.cantor_product_measure(config.get("level", DEFAULT_LEVEL), dim, cells)
    if config.measure == "grid":
        return spectral.grid_measure(config.get("grid", DEFAULT_GRID), dim)
    return spectral.DiscreteMeasure.delta(dim)


def _relation(config):
    return Relation.from_string(config.get("relation", "congruence"))


def _census(config, artifacts):
    if config.input is not None:
        ps = formats.validate(config.input)
    else:
        ps = geometry.PointSet.grid(config.grid, config.get("d", 2))

    census = geometry.count_classes(ps, config.k, _relation(config),
                                    include_degenerate=config.get("include_degenerate", False),
                                    budget=config.get("budget", geometry.DEFAULT_BUDGET), samples=config.samples,
                                    seed=config.get("seed", DEFAULT_SEED), processes=config.processes,
                                    scale=config.get("quantization", geometry.DEFAULT_QUANTIZATION))
    summary = {"count": census.count, "k": census.k, "relation": Relation.to_string(census.relation),
               "points": len(ps), "enumerated": census.enumerated, "sampled": census.sampled}

    if config.epsilon is not None:
        weighted = ps if ps.weights is not None else ps.with_uniform_weights()
        summary["thickened"] = geometry.thickened_pair_measure(
            weighted, config.k, config.epsilon, budget=config.get("budget", geometry.DEFAULT_BUDGET),
            samples=config.samples, seed=config.get("seed", DEFAULT_SEED),
            include_degenerate=config.get("include_degenerate", True)).as_dict()

    artifacts.json("classes.json", census.rows())
    artifacts.json("census.json", summary)
    return summary


def _growth(config, artifacts):
    record = lattice.growth_record(config.qs, config.get("k", 2), config.get("d", 2), _relation(config),
                                   config.get("budget", geometry.DEFAULT_BUDGET), config.processes)
    artifacts.csv("growth.csv", ["q", "count"], record.entries)
    summary = {"beta": record.exponent, "residual": record.residual, "points": len(record)}
    artifacts.json("growth.json", summary)
    return summary


def _spheres(config, artifacts):
    d = config.d
    if d not in (2, 3):
        raise ValidationError("lattice point enumeration is available for d=2 and d=3, got d=%d" % d)
    nmax = config.get("nmax", DEFAULT_NMAX)
    counts = lattice.representation_counts(nmax, d)
    artifacts.csv("counts.csv", ["n", "count"], enumerate(counts.tolist()))
    summary = {"d": d, "nmax": nmax, "max_count": int(counts.max())}

    if d == 2:
        limits = [10 ** e for e in range(1, int(math.log10(nmax)) + 1)] if nmax >= 10 else [nmax]
        profile = lattice.circle_count_profile(limits)
        artifacts.csv("profile.csv", ["N", "max_count"], profile)
    if config.n is not None:
        points = lattice.circle_lattice_points(config.n) if d == 2 else lattice.sphere_lattice_points(config.n)
        columns = ["x%d" % (index + 1) for index in range(d)]
        artifacts.csv("points.csv", columns, points, ["n=%d" % config.n])
        summary["n"] = config.n
        summary["points"] = len(points)

    artifacts.json("spheres.json", summary)
    return summary


def _three_spheres(config, artifacts):
    census = lattice.three_spheres_triangle_census(config.n1, config.n2, config.n3,
                                                   budget=config.get("budget", geometry.DEFAULT_BUDGET))
    summary = {"radii": list(census.radii), "count": census.count, "triangles": census.triangles}
    artifacts.json("classes.json", census.rows())
    artifacts.json("three_spheres.json", summary)
    return summary


def _sharpness(config, artifacts):
    sharpness = lattice.build_sharpness_set(config.d, config.s, config.q)
    summary = sharpness.as_dict()
    summary["scales"] = lattice.sharpness_scales(config.get("level", 4))
    if config.d == 2:
        entry = lattice.grid_simplex_census(lattice.LatticeBox(2, config.q), 2,
                                            budget=config.get("budget", geometry.DEFAULT_BUDGET),
                                            processes=config.processes)
        summary["triangle_classes"] = entry.count
        summary["triangle_bound"] = lattice.triangle_volume_bound(config.q, config.s, entry.count)
    elif config.d == 3:
        summary["tetrahedron_bound"] = lattice.tetrahedron_volume_bound(config.q, config.s)
    artifacts.point_set("centers.csv", sharpness.centers)
    artifacts.json("sharpness.json", summary)
    return summary


def _spectral(config, artifacts):
    # Cantor measures carry their level cubes
    m = load_measure(config, cells=True)
    nodes = config.get("nodes", spectral.DEFAULT_SPHERE_NODES)
    curve = spectral.spherical_average_curve(m, config.ts, nodes)
    artifacts.curve("curve.csv", curve)
    summary = {"atoms": len(m), "cell_width": m.cell_width, "nodes": nodes, "points": len(curve)}

    if config.s is not None:
        summary["fit"] = spectral.decay_fit(curve, config.s, m.dim).as_dict()
        summary["energy"] = spectral.energy_integral(m, config.s,
                                                     config.get("budget", spectral.DEFAULT_BUDGET)).as_dict()
    if config.annulus is not None:
        resolution = config.get("resolution", 64)
        rows = [(r, spectral.annulus_energy(m, r, resolution)) for r in config.annulus]
        artifacts.csv("annulus.csv", ["r", "energy"], rows, ["resolution=%d" % resolution])

    artifacts.json("spectral.json", summary)
    return summary


def _mattila(config, artifacts):
    m = load_measure(config)
    nodes = config.get("nodes", spectral.DEFAULT_SPHERE_NODES)
    value = spectral.mattila_integral(m, config.tmin, config.tmax, nodes,
                                      budget=config.get("budget", spectral.DEFAULT_BUDGET))
    summary = {"value": value, "tmin": config.tmin, "tmax": config.tmax, "nodes": nodes, "atoms": len(m)}
    artifacts.json("mattila.json", summary)
    return summary


def _group_energy(config, artifacts):
    m = load_measure(config)
    samples = config.get("samples", DEFAULT_SAMPLES)
    seed = config.get("seed", DEFAULT_SEED)
    budget = config.get("budget", spectral.DEFAULT_BUDGET)
    if config.a_min is not None or config.a_max is not None:
        a_range = (config.get("a_min", 1.0), config.get("a_max", 2.0))
        estimate = spectral.group_energy_similarity(m, config.k, samples, config.grid_res, a_range, seed, budget)
    else:
        estimate = spectral.group_energy(m, config.k, samples, config.grid_res, seed, budget=budget)
    summary = estimate.as_dict()
    artifacts.json("group_energy.json", summary)
    return summary


def _frostman(config, artifacts):
    m = load_measure(config)
    check = spectral.frostman_check(m, config.radii, config.get("budget", spectral.DEFAULT_BUDGET))
    artifacts.csv("frostman.csv", ["delta", "mass"], check.rows())
    summary = {"exponent": check.exponent, "residual": check.residual, "atoms": len(m)}
    artifacts.json("frostman.json", summary)
    return summary


def _thresholds(config, artifacts):
    summary = thresholds(config.k, config.d).as_dict()
    artifacts.json("thresholds.json", summary)
    return summary


_EXPERIMENTS = {
    "census": _census,
    "growth": _growth,
    "spheres": _spheres,
    "three-spheres": _three_spheres,
    "sharpness": _sharpness,
    "spectral": _spectral,
    "mattila": _mattila,
    "group-energy": _group_energy,
    "frostman": _frostman,
    "thresholds": _thresholds,
}


def run(config, out_dir=None):
    """Run one experiment, write its artifacts and manifest, and return the summary payload."""
    directory = out_dir or config.out or falconer.output_dir()
    try:
        make_path(directory)
    except EnvironmentError as error:
        raise falconer.FileAccessError("unable to create output directory \"%s\" [%s]" % (directory, error),
                                       directory)

    logging.debug("running experiment %r into \"%s\"" % (config.kind, directory))
    artifacts = Artifacts(directory)
    summary = _EXPERIMENTS[config.kind](config, artifacts)
    artifacts.manifest(config)
    return summary
