"""Matchings in finite abelian groups and matched bases in field extensions."""

from .errors import LinmatchError
from .finite_field import (QQ, ExtensionContext, FieldElement, Polynomial, PrimeField,
                           find_irreducible, frobenius, poly_is_irreducible, subfield_basis,
                           subfield_degrees)
from .group_matching import (GroupMatching, GroupSpec, GroupSubset, exhaustive_matching_exists,
                             find_matching, is_matching)
from .linear_matching import (BasisTuple, Subspace, blocker, find_matched_basis,
                              has_proper_intermediate_subfield, is_matched_basis,
                              is_matched_subspace, linear_matching_property_by_search,
                              minimal_lmp_witness, relative_extension)
from .prime_degree import (DegreeSystem, has_root, prime_combination,
                           prime_degree_irreducible_witness)

__version__ = "0.1.0"

__all__ = [
    "LinmatchError",
    "QQ", "ExtensionContext", "FieldElement", "Polynomial", "PrimeField", "find_irreducible",
    "frobenius", "poly_is_irreducible", "subfield_basis", "subfield_degrees",
    "GroupMatching", "GroupSpec", "GroupSubset", "exhaustive_matching_exists", "find_matching",
    "is_matching",
    "BasisTuple", "Subspace", "blocker", "find_matched_basis", "has_proper_intermediate_subfield",
    "is_matched_basis", "is_matched_subspace", "linear_matching_property_by_search",
    "minimal_lmp_witness", "relative_extension",
    "DegreeSystem", "has_root", "prime_combination", "prime_degree_irreducible_witness",
]
