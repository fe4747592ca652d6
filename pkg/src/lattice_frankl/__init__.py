"""Finite lattices, their irreducible elements, and the lattice form of the
union-closed sets conjecture."""

from .conditions import Caps, ConditionId, ConditionReport, Verdict, evaluate_all
from .enumeration import CanonicalCert, are_isomorphic, canonical_form, enumerate_lattices, oracle_enumerate
from .errors import LatticeToolError
from .fixtures import fixture
from .frankl import counterexample_sweep, frankl_witnesses, satisfies_conjecture
from .order import (
    IrreducibleProfile,
    Lattice,
    Poset,
    dual,
    induced_subposet,
    irreducible_profile,
    is_lattice,
    lattice_from_poset,
    length,
    poset_from_covers,
)

__version__ = "0.1.0"
