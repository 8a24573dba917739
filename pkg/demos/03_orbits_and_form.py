"""Orbits of 1 and of a 2x2 minor under sp(4) with x1, x2 swapped, and the bilinear form.

The grade-0 part of C[x1..x4] has dimension (m+1)^2 in degree 2m.  It is the
direct sum of the two orbits, and each orbit has an explicit monomial-style basis.

Run:  python3 demos/03_orbits_and_form.py
"""
from liepoly.form import adjoint_check, contravariance_sweep, form
from liepoly.lie import AlgebraSpec, E
from liepoly.linalg import sum_and_intersection
from liepoly.orbit import orbit_span, sp4_orbit_bases
from liepoly.poly import Polynomial
from liepoly.rep import RepresentationContext
from liepoly.slices import SliceSpec, enumerate_slice

ctx = RepresentationContext.build(AlgebraSpec("sp", 2), [1, 2])
u = ctx.poly("x1*x4 - x2*x3")
o1 = orbit_span(ctx, Polynomial.constant(4), 10)
ou = orbit_span(ctx, u, 10)
print(f"orbit of 1: {o1.verdict} after {o1.layers} layers; orbit of u: {ou.verdict}")

print(" m  slice  orbit(1)  orbit(u)  overlap  closed-form sizes")
for m in range(6):
    piece = len(enumerate_slice(SliceSpec(ctx, 0, 2 * m)))
    a, b = o1.slice_basis(2 * m), ou.slice_basis(2 * m)
    _, overlap = sum_and_intersection([p.terms for p in a], [p.terms for p in b])
    plus, minus = sp4_orbit_bases(m)
    print(f"{m:2}  {piece:5}  {len(a):8}  {len(b):8}  {overlap:7}  {len(plus)} + {len(minus)}")

print("degree 4 basis of the orbit of u:")
for p in sp4_orbit_bases(2)[1]:
    print(f"  {ctx.fmt(p)}")

# The diagonal form makes rho(g) and rho(g^t) adjoint.
x = ctx.poly
print(f"(x1^2 x3 | x1^2 x3) = {form(ctx, x('x1^2*x3'), x('x1^2*x3'))}")
print(f"(u | u) = {form(ctx, u, u)}")
print(f"E13 adjoint check on (x3, x1): {adjoint_check(ctx, E(1, 3, 4), (0, 0, 1, 0), (1, 0, 0, 0))}")
r = contravariance_sweep(3, 3)
print(f"gl(3) sweep: {r.pairs} pairs over {r.partitions} partitions, {len(r.violations)} violations")
