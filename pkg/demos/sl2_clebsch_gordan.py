"""Clebsch-Gordan for sl(2,C), exactly.

Builds irreducibles in two models, conjugates one into the other with
the exact intertwiner, then splits tensor products by highest-weight
vector counting.
"""

from matrixlie import sl2_decompose, sl2_irrep, sl2_poly_irrep, tensor_product
from matrixlie.matcore import rational_inverse
from matrixlie.repsl2 import sl2_intertwiner, sl2_weights

m = 3
print(f"=== irreducible of highest weight {m} ===")
rep = sl2_irrep(m)
print("pi(H) diagonal:", [rep.generator("H")[k, k] for k in range(m + 1)])
print("pi(X):")
print(rep.generator("X"))

print()
print("=== polynomial model and the intertwiner ===")
poly = sl2_poly_irrep(m)
T = sl2_intertwiner(m)
Ti = rational_inverse(T)
same = all(
    all(x == 0 for x in (Ti @ gp @ T - ga).flat)
    for ga, gp in zip(rep.generators, poly.generators)
)
print("T^-1 (poly) T == abstract, exactly:", same)

print()
print("=== tensor product decompositions ===")
for a, b in ((1, 1), (2, 1), (3, 2)):
    t = tensor_product(sl2_irrep(a), sl2_irrep(b))
    print(f"V{a} (x) V{b}: weights {sl2_weights(t)}")
    print(f"          splits into highest weights {sl2_decompose(t)}")
