"""Lusztig restriction to split Levi subgroups, on the Weyl-group side."""
from .levi import (LeviEmbedding, RestrictionData, branching_matrix, explicit_levi_embedding,
                   gl_levi_embedding, r_matrix, restrict_ggg, restrict_green, restrict_green_via_r,
                   restrict_theta, sign_restriction_holds)

__all__ = ["LeviEmbedding", "RestrictionData", "branching_matrix", "explicit_levi_embedding",
           "gl_levi_embedding", "r_matrix", "restrict_ggg", "restrict_green", "restrict_green_via_r",
           "restrict_theta", "sign_restriction_holds"]
from .subregular import (gl_subregular_record, pipeline_subregular_row, subregular_pair,
                         subregular_qtilde, subregular_restriction, subregular_restriction_ggg)

__all__ += ["gl_subregular_record", "pipeline_subregular_row", "subregular_pair", "subregular_qtilde",
            "subregular_restriction", "subregular_restriction_ggg"]
