"""Laguerre and Meixner symmetric functions, z-measures and their jump dynamics.

Every function returns plain Python data decoded from the library's JSON output.
Parameters are exact rationals given as strings ("1/3", "0.5"). With no z
arguments the pair z = 1 + i, z' = 1 - i is used.
"""

import json

from . import _lmsf
from ._lmsf import DomainError, MathError

__all__ = [
    "DomainError",
    "MathError",
    "expand",
    "scaling",
    "simulate",
    "suites",
    "transition",
    "verify",
    "zm_pmf",
    "zm_sum",
]


def expand(family, shape, basis=""):
    """Expansion of L_nu ("laguerre"), M_nu ("meixner"), FS_nu ("fs") or S_nu ("schur")."""
    return json.loads(_lmsf.expand(family, shape, basis))


def suites():
    return json.loads(_lmsf.suites())


def verify(suite, max_size=-1):
    return json.loads(_lmsf.verify(suite, max_size))


def zm_pmf(shape, **params):
    return json.loads(_lmsf.zm_pmf(shape, **params))


def zm_sum(cutoff=40, **params):
    return json.loads(_lmsf.zm_sum(cutoff, **params))


def simulate(start="", t_max=10.0, seed=0, max_events=0, **params):
    return json.loads(_lmsf.simulate(start, t_max, seed, max_events, **params))


def transition(start, target, t=1.0, cutoff=8, **params):
    return json.loads(_lmsf.transition(start, target, t, cutoff, **params))


def scaling(xi, f_basis="p", f_shape="1,1", samples=100000, seed=0, **params):
    return json.loads(_lmsf.scaling(xi, f_basis, f_shape, samples, seed, **params))
