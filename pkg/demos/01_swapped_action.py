"""Walk through one noncanonical action: sp(4) acting on C[x1..x4] with x1 swapped.

Run:  python3 demos/01_swapped_action.py
"""
from liepoly.lie import AlgebraSpec, E, bracket, cartan_and_positive
from liepoly.rep import RepresentationContext, bracket_fidelity
from liepoly.singular import find_all_singular
from liepoly.weyl import commutator

spec = AlgebraSpec("sp", 2)
ctx = RepresentationContext.build(spec, [1])
names = ctx.names()
print(f"context: {ctx.describe()}")

# Swapping index 1 trades multiplication by x1 for differentiation in every formula.
g = E(1, 4, 4) + E(2, 3, 4)
print(f"rho({g}) = {ctx.rho(g).format(names)}")
h = E(2, 1, 4) - E(3, 4, 4)
print(f"rho({h}) = {ctx.rho(h).format(names)}")

# The map is still a Lie homomorphism; check one bracket by hand, then all of them.
lhs = commutator(ctx.rho(g), ctx.rho(h))
rhs = ctx.rho(bracket(g, h))
print(f"[rho(g), rho(h)] == rho([g, h]): {lhs == rhs}")
print(f"bracket pairs failing over the whole basis: {len(bracket_fidelity(ctx))}")

_, pos = cartan_and_positive(spec)
print("positive root vectors act as:")
for e, op in zip(pos, ctx.positive_ops):
    print(f"  {str(e):14} -> {op.format(names)}")

# Singular vectors up to degree 4, with their weights in fundamental-weight coordinates.
print("singular vectors with terms of degree <= 4:")
for sv in find_all_singular(ctx, 4):
    w = ", ".join(sv.weight.as_list())
    print(f"  grade {sv.grade:3}  {ctx.fmt(sv.polynomial):8}  weight ({w})")
