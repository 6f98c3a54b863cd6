"""Exact vector coherent state realization of affine sl(2) highest weight modules."""

import json
from fractions import Fraction

from . import _affvcs

__all__ = ["character_table", "verify", "singular_vectors", "coherent_map", "realize", "z_poly"]


def _rational(c):
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def character_table(lambda_, c, degree, jobs=1, cap=2000):
    """{lambda, c, D, rows: [{weight, depth, dimW, rank}]}."""
    return json.loads(_affvcs.character_json(lambda_, _rational(c), degree, jobs, cap))


def verify(lambda_, c, degree, d0=0, jobs=1):
    return json.loads(_affvcs.verify_json(lambda_, _rational(c), degree, _rational(d0), jobs))


def singular_vectors(lambda_, c, degree):
    return json.loads(_affvcs.singular_json(lambda_, _rational(c), degree))["vectors"]


def coherent_map(lambda_, c, word, j=0):
    """Polynomial components of xi_w, one per basis vector w_j of V0."""
    return _affvcs.coherent_map(lambda_, _rational(c), word, j)


def realize(generator, lambda_=0, c=1, d0=0, degree=3):
    return _affvcs.realize_terms(generator, lambda_, _rational(c), _rational(d0), degree)


def z_poly(n, scale=1):
    return _affvcs.z_poly(n, _rational(scale))
