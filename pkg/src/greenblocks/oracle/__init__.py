"""Brute-force verifiers sharing no code with the modules they check."""
from .branching import branching_bruteforce, cycle_type, sn_characters
from .cache import cache_dir, cache_enabled, cached, set_cache_enabled
from .gelfand import grading, induced_ggg
from .kostka import charge, kostka_foulkes, kostka_number, ssyt
from .matgroups import (FiniteMatrixGroup, SizeBoundExceeded, UnipotentClassData, enumerate_unipotent,
                        jordan_types)

__all__ = ["FiniteMatrixGroup", "SizeBoundExceeded", "UnipotentClassData", "branching_bruteforce",
           "cache_dir", "cache_enabled", "cached", "charge", "cycle_type", "enumerate_unipotent", "grading",
           "induced_ggg", "jordan_types", "kostka_foulkes", "kostka_number", "set_cache_enabled",
           "sn_characters", "ssyt"]
