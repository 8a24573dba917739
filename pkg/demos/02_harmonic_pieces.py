"""Split graded pieces of an orthogonal action into harmonic part plus image.

so(5) acts on C[x1..x5] with x2, x3 swapped.  Delta and eta commute with the
action, move the grade by -2 and +2, and every graded piece should split as
ker(Delta) + eta(piece two grades down).

Run:  python3 demos/02_harmonic_pieces.py
"""
from liepoly.decompose import check_decomposition, so_odd_commutator_identity
from liepoly.flag import thm_4_2, xu_solve
from liepoly.form import irreducibility_certificate
from liepoly.lie import AlgebraSpec
from liepoly.rep import RepresentationContext
from liepoly.slices import adapted_weights
from liepoly.weyl import apply, commutator

ctx = RepresentationContext.build(AlgebraSpec("so_odd", 2), [2, 3])
names = ctx.names()
print(f"context: {ctx.describe()}")
print(f"Delta = {ctx.delta.format(names)}")
print(f"eta   = {ctx.eta.format(names)}")
central = all(commutator(ctx.delta, op).is_zero() for _, op in ctx.basis_ops)
print(f"Delta commutes with the whole action: {central}")
print(f"[Delta, eta] = {so_odd_commutator_identity(2)['lhs']}")

# d1^2 lowers degree by 2 while x2*d4 keeps it, so degree is replaced by a weighted degree.
w = adapted_weights(ctx)
print(f"weights making Delta and eta homogeneous: {w}")

print("grade  weighted-degree  dim = kernel + image")
for k in (-1, 0, 2):
    for d in range(0, 9, 2):
        r = check_decomposition("thm_4_2", 2, k, d + (k % 2))
        dims = r.dims
        print(f"{k:5}  {r.params['degree']:15}  {dims['slice']:3} = {dims['kernel']} + {dims['image']}"
              f"   {r.verdict}")

# The series solver builds harmonic polynomials from a seed h*g.
cfg = thm_4_2(2)
f = xu_solve(cfg, ctx.poly("x1"), ctx.poly("x3*x4"))
print(f"series from x1*x3*x4: {ctx.fmt(f)}")
print(f"Delta of it: {ctx.fmt(apply(ctx.delta, f))}")

# One singular line with nonzero norm in a truncated harmonic piece.
cert = irreducibility_certificate(ctx, 1, 5, harmonic="delta", case="harmonic grade 1")
print(f"certificate: {cert.verdict}, witnesses {cert.witnesses}, norms {cert.norms}")
print(f"  ({cert.caveat})")
