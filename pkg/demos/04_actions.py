#!/usr/bin/env python3
"""The two actions agree: moving a point of H x H by M and M' is the same
as moving the corresponding point of the orthogonal half-space by the 4x4
image, after the base change (tau1, tau2) = G z.  Everything is exact in
Q(sqrt m)(i).
"""
import random

from hilbert_so22 import BasisCtx, make_field, mobius, ortho_action, phi_fast
from hilbert_so22.action import automorphy, automorphy_from_matrix, base_change, base_change_inverse, random_point
from hilbert_so22.modgroup import sample

ctx = make_field(13)
b = BasisCtx.standard(ctx)
rng = random.Random(2024)

M = sample("gamma", 5, ctx)
U = phi_fast(M, b)
z = random_point(b, rng)
tau1, tau2 = base_change(b, z)
print("M      =", M)
print("z      =", *z)
print("tau    =", tau1, "|", tau2)

w = ortho_action(U, z, b.S)
image = base_change_inverse(b, (mobius(M, tau1), mobius(M, tau2, "conjugate")))
print("U<z>   =", *w)
print("G^-1 (M<tau1>, M'<tau2>) matches:", tuple(w) == tuple(image))

j = automorphy(U, z, b.S)
print("automorphy factor", j)
print("equals (c tau1 + d)(c' tau2 + d'):", j == automorphy_from_matrix(M, b, z))
