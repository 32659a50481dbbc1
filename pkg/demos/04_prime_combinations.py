"""
Prime-valued combinations of degrees
=====================================

If the gcd of some degrees is 1, a nonnegative combination of them is prime.
We find the smallest such prime with a coin-problem table.  Over a finite
field an irreducible quadratic has prime degree and no root, so finite
fields are not algebraically closed.
"""

from linmatch.finite_field import poly_is_irreducible
from linmatch.prime_degree import (brute_force_prime_combination, has_root, prime_combination,
                                   prime_degree_irreducible_witness)

for degrees in [(2, 3), (1, 4), (6, 10, 15), (9, 14)]:
    sol = prime_combination(degrees)
    print(degrees, "->", sol.coefficients, "total", sol.total,
          "| brute force:", brute_force_prime_combination(degrees, sol.total))

# With every degree used at least once:
print((2, 3), "->", prime_combination((2, 3), min_coefficient=1).coefficients)

for p in (2, 3, 5, 7):
    f = prime_degree_irreducible_witness(p)
    print(f"GF({p}): {f}  irreducible={poly_is_irreducible(f)}  has_root={has_root(f)}")
