from .xy import LForm, XYSystem, build_L_form, build_xy_system
from .kernel import Factor, residue_of_product, truncation_bound
from .quot_residue import quot_residue
from .moduli import chern_to_y, moduli_dimension, moduli_exp_pairing, moduli_pairing, pair_in_y
from .verlinde import ahat_class, verlinde_chi, verlinde_closed_form_rank2_genus2

__all__ = [
    "LForm",
    "XYSystem",
    "build_L_form",
    "build_xy_system",
    "Factor",
    "residue_of_product",
    "truncation_bound",
    "quot_residue",
    "chern_to_y",
    "moduli_dimension",
    "moduli_exp_pairing",
    "moduli_pairing",
    "pair_in_y",
    "ahat_class",
    "verlinde_chi",
    "verlinde_closed_form_rank2_genus2",
]
