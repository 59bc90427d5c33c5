"""Lusztig's algorithm and the objects derived from its output."""
from .algorithm import (FactorizationError, GreenTable, check_pattern, check_reconstruction, factorize,
                        omega_matrix, omega_matrix_exterior, xi_matrix, xi_numerators)
from .green import (GreenFunction, duality, duality_y, green_function, qg_scalar_product, qg_transport,
                    qtilde_gram, scalar_product_green, torus_order, x_to_y, ytilde_value)

__all__ = [
    "FactorizationError", "GreenTable", "check_pattern", "check_reconstruction", "factorize",
    "omega_matrix", "omega_matrix_exterior", "xi_matrix", "xi_numerators", "GreenFunction", "duality",
    "duality_y", "green_function", "qg_scalar_product", "qg_transport", "qtilde_gram",
    "scalar_product_green", "torus_order", "x_to_y", "ytilde_value",
]
