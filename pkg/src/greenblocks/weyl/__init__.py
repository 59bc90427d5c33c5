"""Finite Coxeter groups of classical type, their products, and class functions."""
from .embedding import (SubgroupEmbedding, explicit_embedding, fusion_restrict, induce,
                        parabolic_embedding, young_embedding)
from .group import (ClassFunction, CoxeterDescriptor, UnsupportedRank, WeylGroupModel, build_group,
                    characteristic_polynomial, exterior_reflection_characters, inner_product,
                    torus_order_function)

__all__ = [
    "ClassFunction", "CoxeterDescriptor", "SubgroupEmbedding", "UnsupportedRank", "WeylGroupModel",
    "build_group", "characteristic_polynomial", "explicit_embedding", "exterior_reflection_characters",
    "fusion_restrict", "induce", "inner_product", "parabolic_embedding", "torus_order_function",
    "young_embedding",
]
