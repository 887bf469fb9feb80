#!/usr/bin/env python3
"""Which matrices land in the discriminant kernel?

Elements of the Hilbert modular group always do.  Atkin-Lehner matrices give
integral matrices in the identity component, and they fall into the kernel
exactly when ell is 1 or m.  The same dichotomy is repeated for a
non-principal ideal, where the map is conjugated by diag(N, 1, 1, 1).
"""
from hilbert_so22 import _matrix as mx
from hilbert_so22 import BasisCtx, GammaICtx, atkin_lehner, atkin_lehner_ideal, make_field, phi_fast, psi
from hilbert_so22._arith import squarefree_divisors
from hilbert_so22.ideals import ideal_from_canonical
from hilbert_so22.isomap import dk_criterion_fm, block_congruence_holds
from hilbert_so22.modgroup import sample
from hilbert_so22.ortho4 import in_discriminant_kernel, in_SO0

ctx = make_field(15)
b = BasisCtx.standard(ctx)
print(f"m = 15, d_K = {ctx.disc}")
hits = sum(in_discriminant_kernel(phi_fast(sample("gamma", s, ctx), b), b.S) for s in range(50))
print(f"  {hits}/50 random elements of Gamma land in the kernel")
for ell in squarefree_divisors(ctx.disc):
    V = atkin_lehner(ell, ctx)
    U = phi_fast(V, b)
    print(
        f"  V_{ell:<2}: SO_0 {in_SO0(U, b.S)!s:5}  kernel {in_discriminant_kernel(U, b.S)!s:5}"
        f"  block test {block_congruence_holds(V, b)!s:5}  F_M test {dk_criterion_fm(V, b)}"
    )

ctx = make_field(6)
I = ideal_from_canonical(5, 0, ctx)
bi, g = BasisCtx.for_ideal(I), GammaICtx.of(I)
print(f"\nm = 6, ideal {I} with Z-basis {bi}, form T = S/{bi.N} = {mx.to_strings(bi.T.S)}")
for ell in squarefree_divisors(ctx.disc):
    U = psi(atkin_lehner_ideal(ell, g), bi)
    print(f"  ideal V_{ell}: SO_0 {in_SO0(U, bi.T)!s:5}  kernel {in_discriminant_kernel(U, bi.T)}")
