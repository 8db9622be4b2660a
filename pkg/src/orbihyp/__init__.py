"""Hyperbolicity criteria for geometric orbifolds (X / Delta).

Exact rational arithmetic for the combinatorial criteria (curves, Nochka
degeneracy, plane-curve pairs, jet differentials) and controlled numerics
for the model Kobayashi metric and Nevanlinna functions of polynomial curves.
"""
from .core import INF, Report, ceil_div, ceil_ratio, fibration_multiplicity, weight
from .curves import OrbifoldCurve, canonical_degree, classify, hyperbolic_area
from .defect import ArrangementSpec, degeneracy_check, embedding_check
from .metric import ModelOrbifoldDisk, distance, geodesic_oracle_distance
from .nevanlinna import PolynomialCurve, ZeroDivisor, counting_function, defect_estimate, order_function
from .pullcurve import IntersectionData, algebraic_hyperbolicity_gap, minimal_structure
from .surfaces import PlaneArrangement, jet_criterion, plane_pair_criterion
from .jets import LocalOrbifoldChart, jet_generators, symmetric_generators

__version__ = "0.1.0"
