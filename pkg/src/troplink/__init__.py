"""Exact homology of links of tropical fans, with combinatorial oracles."""

from .complex import (
    ChainComplex,
    DeltaComplex,
    FacePoset,
    SimplicialComplex,
    barycentric_subdivision,
    homology_of_chain_complex,
    is_top_concentrated,
    order_complex,
    reduced_betti,
    reduced_euler_characteristic,
)
from .cone import Cone
from .fan import Fan, crosscut_complex, link_poset, skeleton, support_contained_in, support_contains, validate_fan
from .generators import (
    Split,
    ci_skeleton_link,
    in_tropical_hypersurface,
    initial_form,
    projective_space_fan,
    tree_space_link,
    tropical_hypersurface_fan,
)
from .linalg import RationalMatrix, rank
from .matroid import Matroid, bergman_fan, flats_lattice, mobius_top, uniform_matroid
from .polyparse import parse_polynomial
from .polytope import LatticePolytope, LaurentPolynomial, newton_polytope, normal_fan
from .strata import StratificationIncidence, dual_complex, hat_link, weight_row_complex

__all__ = [
    "ChainComplex", "Cone", "DeltaComplex", "FacePoset", "Fan", "LatticePolytope", "LaurentPolynomial",
    "Matroid", "RationalMatrix", "SimplicialComplex", "Split", "StratificationIncidence",
    "barycentric_subdivision", "bergman_fan", "ci_skeleton_link", "crosscut_complex", "dual_complex",
    "flats_lattice", "hat_link", "homology_of_chain_complex", "in_tropical_hypersurface", "initial_form",
    "is_top_concentrated", "link_poset", "mobius_top", "newton_polytope", "normal_fan", "order_complex",
    "parse_polynomial", "projective_space_fan", "rank", "reduced_betti", "reduced_euler_characteristic",
    "skeleton", "support_contained_in", "support_contains", "tree_space_link", "tropical_hypersurface_fan",
    "uniform_matroid", "validate_fan", "weight_row_complex",
]
