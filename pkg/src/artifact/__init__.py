"""Exact mod-set and conjugacy computations for finite and affine Weyl groups."""
from .affconj import (
    AffineElement,
    CoconjReport,
    affine_element,
    are_conjugate,
    centralizer,
    class_window,
    coconjugation,
    component_count,
    conjugate_affine,
)
from .classreps import ClassParams, all_class_params, parse_class_params, representative
from .modset import ModSetReport, fills_move_set, mod_set, predicted_basis, predicted_snf
from .rootdata import RootDatum, parse_datum, root_datum
from .weyl import WeylElement, enumerate_group, from_word

__version__ = "0.1.0"
