"""Abstract simplicial complexes with exact integral homology."""

from .chain import (
    ChainComplex,
    ChainMap,
    boundary_matrix,
    identity_map,
    induced_chain_map,
    is_well_defined,
    reduced_simplicial_chain_complex,
    simplicial_chain_complex,
)
from .complex import (
    EMPTY_FACE,
    Face,
    SimplicialComplex,
    ambient,
    dimension,
    faces,
    facets,
    from_faces,
    irrelevant_complex,
    is_subcomplex,
    make_face,
    simplex,
    skeleton,
    void_complex,
)
from .errors import (
    InvalidInputError,
    ParseError,
    SimplicialError,
    UndefinedDimensionError,
    UnsupportedError,
)
from .homology import (
    HomologyGroup,
    all_homology,
    betti_numbers,
    euler_characteristic,
    homology,
    homology_mod,
    simplicial_homology,
)
from .matrix import IntegerMatrix, determinant
from .random_models import linial_meshulam, make_rng, random_complex, random_complex_bounded
from .smith import SmithDecomposition, invariant_factors, smith_normal_form
from .vietoris_rips import (
    DistanceMatrix,
    random_distance_matrix,
    read_distance_matrix,
    vietoris_rips,
)

__version__ = "0.1.0"
