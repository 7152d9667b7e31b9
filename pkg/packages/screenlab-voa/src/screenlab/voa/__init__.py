from .charges import yer, zemlja
from .checks import (
    RelationCheck,
    TrivialLevelReport,
    WeylCheck,
    apply_relation,
    basis_monomials,
    check_nichols_on_vector,
    triplet_w0,
    trivial_level_relations,
    weyl_vanishing_check,
)
from .element import DiffMonomial, VoaElement
from .hopf import Tensor, coproduct, diff_poly, pairing, pairing_coefficient
from .lattice import Lattice, LatticePoint
from .laurent import FracLaurent, make_window
from .screening import screening_params, screening_product_direct, screening_product_formula
from .vertex import DEFAULT_TRUNCATION, VertexExpansion, mode_op, res_y, translation_defect, vertex_op


__all__ = [
    # charges
    yer.__name__,
    zemlja.__name__,
    # checks
    RelationCheck.__name__,
    TrivialLevelReport.__name__,
    WeylCheck.__name__,
    apply_relation.__name__,
    basis_monomials.__name__,
    check_nichols_on_vector.__name__,
    triplet_w0.__name__,
    trivial_level_relations.__name__,
    weyl_vanishing_check.__name__,
    # element
    DiffMonomial.__name__,
    VoaElement.__name__,
    # hopf
    Tensor.__name__,
    coproduct.__name__,
    diff_poly.__name__,
    pairing.__name__,
    pairing_coefficient.__name__,
    # lattice
    Lattice.__name__,
    LatticePoint.__name__,
    # laurent
    FracLaurent.__name__,
    make_window.__name__,
    # screening
    screening_params.__name__,
    screening_product_direct.__name__,
    screening_product_formula.__name__,
    # vertex
    "DEFAULT_TRUNCATION",
    VertexExpansion.__name__,
    mode_op.__name__,
    res_y.__name__,
    translation_defect.__name__,
    vertex_op.__name__,
]
