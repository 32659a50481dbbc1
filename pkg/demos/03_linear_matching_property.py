"""
The linear matching property and intermediate fields
=====================================================

For K-subspaces A, B of L with the same dimension and 1 not in B, an
ordered basis (a_i) of A is matched to a basis (b_i) of B when a_i * b in A
forces b into the span of the other b_j.  L/K has the linear matching
property when every such basis of every such A is matched to some basis of
B.  For finite fields the sweep agrees with the subfield lattice: the
property holds exactly when there is no field strictly between K and L.
"""

from linmatch.finite_field import QQ, ExtensionContext, Polynomial
from linmatch.linear_matching import (has_proper_intermediate_subfield,
                                      intermediate_subfield_degrees,
                                      linear_matching_property_by_search, minimal_lmp_witness,
                                      verify_lmp_witness)

cases = [(2, 2, 1), (2, 3, 1), (2, 4, 1), (2, 4, 2), (3, 2, 1), (2, 6, 3)]
for p, n, m0 in cases:
    L = ExtensionContext.galois(p, n)
    rep = linear_matching_property_by_search(L, m0)
    print(f"GF({p}^{n}) over GF({p}^{m0}): {rep.verdict:5s} "
          f"({rep.coverage}, {rep.pairs_checked} pairs)  "
          f"intermediate degrees: {intermediate_subfield_degrees(L, m0)}")
    assert (rep.verdict == "holds") == (not has_proper_intermediate_subfield(L, m0))

# A failing case comes with a witness that can be checked again later.
L = ExtensionContext.galois(2, 4)
rep = linear_matching_property_by_search(L, 1, [2])
print("witness:", rep.witness, "re-verified:", verify_lmp_witness(L, 1, rep.witness))

# Any prime-degree extension has the property; Q(2^(1/3)) is one of them.
ctx = minimal_lmp_witness(QQ, Polynomial.from_text("-2,0,0,1", QQ))
rep = linear_matching_property_by_search(ctx, None, [1, 2], samples=50, seed=3)
print(ctx.describe(), rep.verdict, rep.coverage, rep.pairs_checked)
