"""Generalized Green functions of finite reductive groups, computed from
Weyl-group data by Lusztig's block factorization in exact arithmetic."""
__version__ = "0.1.0"
