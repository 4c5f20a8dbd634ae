"""Colour sl2 and its discolouration.

The algebra is Z2xZ2-graded with brackets [[a1,a2]] = a3, [[a2,a3]] = a1,
[[a3,a1]] = a2 and a commutation factor that makes some of those
anticommutator-flavoured.  Deforming by the multiplier (-1)^(a2 b1) turns
it into an honest Lie algebra isomorphic to sl2; deforming back recovers
the colour algebra bit-exactly.

Run with:  python3 demos/02_discolouring_colour_sl2.py
"""

from liecolour import bracket, discolour, is_superalgebra, recolour
from liecolour.workbench import make_sl2c, discolouring_sigma

alg = make_sl2c()
print("colour sl2: basis and degrees")
for name, deg in alg.basis:
    print(f"  {name} in sector {deg}")

print()
print("brackets on basis pairs (note [[a2,a1]] = +a3: the factor flips the sign)")
for i, j in [(0, 1), (1, 0), (1, 2), (2, 0)]:
    out = bracket(alg, alg.basis_element(i), alg.basis_element(j))
    terms = [
        f"{c} * {alg.basis[k][0]}" for k, c in enumerate(out) if not c.is_zero()
    ]
    print(f"  [[{alg.basis[i][0]}, {alg.basis[j][0]}]] = {' + '.join(terms) or '0'}")

print()
sigma = discolouring_sigma()
lie = discolour(alg, sigma)
print("after discolouring by sigma = (-1)^(a2 b1):")
for (i, j) in [(0, 1), (1, 2), (2, 0)]:
    row = lie.bracket_basis(i, j)
    terms = [f"{c} * {lie.basis[k][0]}" for k, c in row.items()]
    print(f"  [{lie.basis[i][0]}, {lie.basis[j][0]}] = {' + '.join(terms)}")
print("discoloured algebra is a (super)algebra with trivial odd part:", is_superalgebra(lie))
print("recolouring restores the original exactly:", recolour(lie, sigma) == alg)
