"""
Tensor powers keep nonzero maps nonzero
=======================================

If f (x) 1_G is nonzero then so is f (x) 1 on every tensor power of G.
"""

import random

from graphprod.abelian import (
    Z,
    from_cyclic_orders,
    hom_from_rows,
    induced_tensor_hom,
    random_group,
    random_hom,
    tensor_power,
    tensor_power_check,
)

Z4 = from_cyclic_orders([4])[0]
Z2 = from_cyclic_orders([2])[0]
two = hom_from_rows(Z, Z, [[2]])
print("2 (x) Z/2 nonzero:", induced_tensor_hom(two, Z2).nontrivial)
print("2 (x) Z/4 nonzero:", induced_tensor_hom(two, Z4).nontrivial)
print("(Z + Z/4)^(x)2 =", tensor_power(from_cyclic_orders([0, 4])[0], 2))

rng = random.Random(0)
held = 0
for _ in range(200):
    A, B, G = random_group(rng), random_group(rng), random_group(rng)
    held += tensor_power_check(random_hom(rng, A, B), G, rng.randint(1, 3)).holds
print(f"{held}/200 random instances")
