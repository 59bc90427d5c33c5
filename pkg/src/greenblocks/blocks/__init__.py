"""Block descriptors, built-in GL_n and SL_n generators, and the subregular dataset."""
from .descriptor import (SCHEMA, BlockDescriptor, BlockValidationError, PairDescriptor, YTable,
                         dump_block, load_block)
from .generators import (MAX_RANK, class_dimension_gl, gl_levi_block, gl_principal_block,
                         levi_support_map, sl_all_blocks, sl_block)
from .subregular import (SubregularRecord, SubregularSystem, UncoveredType, subregular_lookup,
                         subregular_records)

__all__ = [
    "SCHEMA", "BlockDescriptor", "BlockValidationError", "PairDescriptor", "YTable", "dump_block",
    "load_block", "MAX_RANK", "class_dimension_gl", "gl_levi_block", "gl_principal_block",
    "levi_support_map", "sl_all_blocks", "sl_block", "SubregularRecord", "SubregularSystem", "UncoveredType",
    "subregular_lookup", "subregular_records",
]
