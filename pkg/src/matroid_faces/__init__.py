"""Exact face counts of Engström and Folkman-Lawrence representations of matroids."""

from .errors import AxiomError, BudgetExceeded, InputError, NonGeometricLatticeError, ValidationReport
from .formulas import (
    EDGE,
    POINT,
    S0,
    TRIANGLE_BOUNDARY,
    ComplexSummary,
    engstrom_fpoly,
    fl_fpoly,
    growth_analysis,
    rho,
    rho_limit,
    script_F,
    uniform_engstrom_fpoly,
    uniform_fl_total,
    uniform_total_s0,
)
from .fpoly import FPolynomial, disjoint_union, join, join_power, product, total
from .lattice import GeometricLattice, build_lattice_of_flats, check_geometric, moebius, open_star_fpoly
from .matroid import Matroid, fano_matroid, matroid_from_bases, uniform_matroid, validate_flat_axioms
from .oracle import enumerate_cells
from .signvectors import CovectorSet, SignVector, underlying_lattice, validate_covector_axioms

__version__ = "0.1.0"
