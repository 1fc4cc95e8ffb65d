"""Exact census of Cayley digraphs on dihedral DCI-groups."""
from .arith import divisors_of, euler_phi, geom_sum_mod, is_squarefree, mult_order
from .census import CensusResult, DciStatus, DciTag, burnside_count, census_table, dci_census, dci_status
from .cycles import CycleData, c_total, c_v_general, c_v_squarefree
from .d6p import d6p_count
from .dihedral import Aut, Element, Permutation, aut_order, compose, kappa, make_aut, power, to_permutation
from .oracle import powerset_orbit_count

__version__ = "0.1.0"
