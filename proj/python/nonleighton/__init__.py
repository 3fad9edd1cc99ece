"""Python access to the nonleighton C++ core.

Presentations are given either by a built-in name ("bs35", "h_plus", ...)
or as text such as "< c, d | DcccdCCCCC >".  Structured results come back
as plain dicts and lists.
"""

import json

from . import _core
from ._core import (
    CapExceeded,
    InputError,
    abelianization,
    builtin_names,
    commutator_h,
    cyclic_reduce,
    free_reduce,
    normal_form,
    presentation,
)


def standard_complex(p):
    return json.loads(_core.standard_complex_json(p))


def low_index(p, n_max):
    return json.loads(_core.low_index_json(p, n_max))


def todd_coxeter(p, subgroup, max_cosets=100000):
    return json.loads(_core.todd_coxeter_json(p, list(subgroup), max_cosets))


def homs(p, degree):
    return json.loads(_core.homs_json(p, degree))


def cayley_ball(radius):
    return json.loads(_core.cayley_ball_json(radius))


def lemma_commutator(n_max, hom_degree_max):
    return json.loads(_core.lemma_commutator_json(n_max, hom_degree_max))


def lemma_bottle(n_max):
    return json.loads(_core.lemma_bottle_json(n_max))


def abelian_consistency():
    return json.loads(_core.abelian_consistency_json())


def partial_cover(epsilon, radius):
    return json.loads(_core.partial_cover_json(epsilon, radius))


def phi(radius):
    return json.loads(_core.phi_json(radius))


def torus_klein(radius=10):
    return json.loads(_core.torus_klein_json(radius))


def cover_ball(epsilon, radius):
    return json.loads(_core.cover_ball_json(epsilon, radius))


__all__ = [
    "CapExceeded",
    "InputError",
    "abelian_consistency",
    "abelianization",
    "builtin_names",
    "cayley_ball",
    "commutator_h",
    "cover_ball",
    "cyclic_reduce",
    "free_reduce",
    "homs",
    "lemma_bottle",
    "lemma_commutator",
    "low_index",
    "normal_form",
    "partial_cover",
    "phi",
    "presentation",
    "standard_complex",
    "todd_coxeter",
    "torus_klein",
]
