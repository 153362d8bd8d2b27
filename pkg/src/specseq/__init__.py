"""Exact spectral sequences of first-quadrant multicomplexes over the integers."""

from .assembly import FilteredComplex, Generator, assemble, extract_multicomplex, filtration_lattice
from .document import dumps, loads, parse
from .fixtures import get_fixture
from .homology import associated_graded, chain_homology, filtered_homology
from .linalg import (
    IntMatrix,
    Lattice,
    Subquotient,
    hnf,
    image_basis,
    induce,
    kernel_basis,
    lattice_sum,
    snf,
    subquotient,
)
from .multicomplex import Multicomplex, is_double_complex, random_instance, transpose_double, validate
from .spectral import (
    e_infinity,
    induced_map_on_page,
    page,
    stabilization_bound,
    turn_page,
    verify_convergence,
    verify_e1_columns,
    z_infinity,
    z_lattice,
)

__version__ = "0.1.0"
