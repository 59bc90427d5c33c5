"""Gelfand-Graev expansions, their orthogonality, and order/sign bookkeeping."""
from .gelfand import (GGGExpansion, SignData, allorth_expected, allorth_sum, evaluate_y, gamma_tilde,
                      gamma_u_projection, ggg_gram, ggg_orthogonality_u)
from .orders import (GroupType, centralizer_order, centralizer_sign, order_polynomial,
                     order_star_identity, qprime_part, zfunction_star_holds)

__all__ = ["GGGExpansion", "GroupType", "SignData", "allorth_expected", "allorth_sum",
           "centralizer_order", "centralizer_sign", "evaluate_y", "gamma_tilde", "gamma_u_projection",
           "ggg_gram", "ggg_orthogonality_u", "order_polynomial", "order_star_identity", "qprime_part",
           "zfunction_star_holds"]
