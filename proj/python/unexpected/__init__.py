"""Python access to the exact interpolation and certificate engine.

Configurations are given by catalog name or as a record in JSON text.
Structured results come back as dicts.
"""

import json

from . import _core
from ._core import UnexpectedError, catalog_names, degree_of_F, ideal_dimension, square_size, weak_table

__version__ = _core.version


def record(config):
    return json.loads(_core.record(config))


def square_certificate(table, point_count, N, d, m):
    return json.loads(_core.square_certificate(table, point_count, N, d, m))


def plus_one_certificate(table, point_count, d):
    return json.loads(_core.plus_one_certificate(table, point_count, d))


def family_certificate(k):
    return json.loads(_core.family_certificate(k))


def verify_certificate(cert):
    """Recomputes a certificate dict; raises UnexpectedError on any mismatch."""
    return json.loads(_core.verify_certificate(json.dumps(cert)))


def unexpectedness(config, d, m, trials=20, seed=1):
    return json.loads(_core.unexpectedness(config, d, m, trials, seed))


def zero_locus_test(config, d, m, trials=20, seed=1, threads=1):
    return json.loads(_core.zero_locus_test(config, d, m, trials, seed, threads))


def symbolic_locus(config, d, m, budget=1_000_000, threads=1):
    return json.loads(_core.symbolic_locus(config, d, m, budget, threads))


def penrose_audit(remove=5, threads=1):
    return json.loads(_core.penrose_audit(remove, threads))
