"""
Finite fields and their subfields
=================================

GF(p^n) is built as GF(p)[x]/(f) from the smallest monic irreducible f.
The subfield with p^m elements (m | n) is the fixed space of the m-th power
of the Frobenius map, a GF(p)-linear kernel computation.
"""

from linmatch.finite_field import (ExtensionContext, find_irreducible, frobenius,
                                   subfield_basis, subfield_degrees)

for p, n in [(2, 2), (3, 2), (5, 2), (2, 12)]:
    print(f"smallest irreducible of degree {n} over GF({p}):", find_irreducible(p, n))

# Arithmetic in GF(4): the generator a satisfies a^2 = a + 1.
k4 = ExtensionContext.galois(2, 2)
a = k4.generator
print("a*(a+1) =", (a * (a + 1)).to_text(), "  frob(a) =", frobenius(a, 1).to_text())

# The subfield lattice of GF(2^12): one subfield for every divisor of 12.
L = ExtensionContext.galois(2, 12)
for m in subfield_degrees(L):
    S = subfield_basis(L, m)
    line = f"m={m:2d}  size={S.order}"
    if S.order <= 16:
        elems = set(S.elements())
        closed = all(x * y in elems for x in elems for y in elems)
        line += f"  closed under products: {closed}"
    print(line)
