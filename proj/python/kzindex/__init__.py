"""Cylinder decompositions, multitwist monodromy and SL2(Z) indices of origamis."""

import json

from ._core import (
    DEFAULT_COSET_CAP,
    DEFAULT_ORBIT_CAP,
    BasisUnavailable,
    DegenerateConfiguration,
    IndexExceedsCap,
    IntegralityError,
    InvalidDirection,
    InvalidShape,
    KzError,
    NoBasisFound,
    Origami,
    OrbitTooLarge,
    ParseError,
    RankError,
    UnimodularityError,
    contains_minus_identity,
    h2_origamis,
    index_in_sl2,
    kz_generators,
    orbit,
    same_orbit,
)
from . import _core


def decompose(origami, direction):
    """Cylinders and saddle connections in direction (p, q)."""
    p, q = direction
    return json.loads(_core._decompose(origami, p, q))


def homology(origami, basis_cap=64):
    return json.loads(_core._homology(origami, basis_cap))


def monodromy(origami, directions, cap=DEFAULT_COSET_CAP):
    return json.loads(_core._monodromy(origami, list(directions), cap))


def census(degree, cap=DEFAULT_ORBIT_CAP):
    return json.loads(_core._census(degree, cap))


def verify(n_max=10):
    """Recompute the L(2,2n) and L(2,2n+1) data for n <= n_max."""
    return json.loads(_core._verify(n_max))


def conjecture(reps=((3, 3), (3, 5), (5, 5)), cap=DEFAULT_COSET_CAP):
    return json.loads(_core._conjecture([tuple(r) for r in reps], cap))


def record(origami):
    return json.loads(origami.record())


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
