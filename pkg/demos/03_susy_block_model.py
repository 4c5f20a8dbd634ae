"""A Z2xZ2-graded supersymmetry block model from a loop construction.

A two-dimensional seed module over the four-element colour algebra
(H, Q1, Q2, Z) carries only the even/odd grading; looping it along the
diagonal subgroup produces a four-dimensional fully graded module whose
matrices exhibit the characteristic block pattern: H and Q1 act
block-diagonally, Q2 and Z block-anti-diagonally, in sector order
(00, 01, 11, 10).

Run with:  python3 demos/03_susy_block_model.py
"""

from liecolour import is_graded_irreducible
from liecolour.workbench import make_bd_model

alg, seed, lm = make_bd_model()

print("algebra sectors:")
for name, deg in alg.basis:
    print(f"  {name} in sector {deg}")

print()
print("seed module (graded by the even/odd quotient):")
for k, (name, _) in enumerate(alg.basis):
    print(f"  {name} ->", [[str(x) for x in row] for row in seed.matrix(k)])

print()
print(f"loop module: dim {lm.module.dim}, sector order",
      [lm.bookkeeping[i][1] for i in range(4)])
for k, (name, _) in enumerate(alg.basis):
    mat = lm.module.matrix(k)
    rows = [[("." if x.is_zero() else str(x)) for x in row] for row in mat]
    print(f"  {name} ->")
    for row in rows:
        print("      ", row)

verdict = is_graded_irreducible(lm.module)
print()
print("loop module graded irreducible:", verdict.irreducible,
      f"(closure dimension {verdict.closure_dim})")
