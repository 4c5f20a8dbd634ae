"""Tour of the exact foundations: cyclotomic scalars, finite gradings,
characters and commutation factors.

Run with:  python3 demos/01_exact_scalars_and_gradings.py
"""

from liecolour import (
    dual_characters,
    field,
    h_perp,
    jordan_holder,
    make_group,
    parity_split,
    quotient,
    scheunert_multiplier,
    subgroup_from_generators,
    twist_reps,
)
from liecolour.workbench import sl2c_factor

print("== exact cyclotomic scalars ==")
f = field(4)
i = f.zeta(1)
print("working in Q(zeta_4); i^2 =", i * i)
x = f.one + i
print("(1 + i)^-1 =", x.inverse(), " check:", x * x.inverse())
f12 = field(12)
print("in Q(zeta_12): zeta^4 + zeta^8 =", f12.zeta(4) + f12.zeta(8), "(a cube-root pair)")

print()
print("== the grading group Z2 x Z2 ==")
g = make_group([2, 2])
h = subgroup_from_generators(g, [(1, 1)])
q = quotient(g, h)
print("diagonal subgroup:", list(h.elements))
print("coset representatives of the quotient:", list(q.coset_reps))
series = jordan_holder(g)
print("composition series subgroup orders:", [s.order() for s in series.chain])

print()
print("== characters ==")
print("all characters (by exponent tuples):", [c.exponents for c in dual_characters(g)])
print("characters trivial on the diagonal:", list(h_perp(g, h).elements))
print("twist representatives for the diagonal:", [c.exponents for c in twist_reps(g, h)])

print()
print("== commutation factors ==")
eps = sl2c_factor()
print("colour-sl2 factor values eps(a, b) on generators:")
for a in [(1, 0), (0, 1)]:
    for b in [(1, 0), (0, 1)]:
        print(f"  eps({a}, {b}) = {eps.eval(a, b)}")
split = parity_split(eps)
print("even part of the grading group:", split.gamma0, "(a purely even factor)")
sigma = scheunert_multiplier(eps)
print("a discolouring multiplier found automatically, sigma on generators:")
for a in [(1, 0), (0, 1)]:
    for b in [(1, 0), (0, 1)]:
        print(f"  sigma({a}, {b}) = {sigma.eval(a, b)}")
