"""Exact computations in descent algebras, type B descent algebras and
higher order peak algebras: idempotents, radicals, Loewy series,
q-Cartan matrices and quivers."""

from .combitypes import (Headed, b_partitions, compositions, order_index, partitions,
                         rpeak_compositions, rpeak_partitions)
from .exactmath import Cyclo, cyclo_gen
from .symcore import (Elem, S, coproduct, internal_product, ribbon, typeA_idempotents,
                      zassenhaus_zetas)
from .peakcore import level_zetas, peak_idempotents, solve_Y, t_element, theta
from .peakmodel import PeakAlgebraModel, build_peak_algebra
from .mrbsym import bsym_idempotents, bsym_model, epsilon_bridge, solve_bsym_zetas
from .reptheory import (CartanMatrix, TPoly, conjecture_cartan, loewy, peak_model, q_cartan,
                        quiver, radical, sym_model)

__version__ = "0.1.0"

__all__ = [
    "Headed", "b_partitions", "compositions", "order_index", "partitions",
    "rpeak_compositions", "rpeak_partitions", "Cyclo", "cyclo_gen", "Elem", "S",
    "coproduct", "internal_product", "ribbon", "typeA_idempotents", "zassenhaus_zetas",
    "level_zetas", "peak_idempotents", "solve_Y", "t_element", "theta",
    "PeakAlgebraModel", "build_peak_algebra", "bsym_idempotents", "bsym_model",
    "epsilon_bridge", "solve_bsym_zetas", "CartanMatrix", "TPoly", "conjecture_cartan",
    "loewy", "peak_model", "q_cartan", "quiver", "radical", "sym_model",
]
