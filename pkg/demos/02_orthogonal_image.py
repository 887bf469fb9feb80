#!/usr/bin/env python3
"""The explicit map from 2x2 matrices over Q(sqrt m) to rational 4x4
matrices preserving the quadratic form (0, S, 0) built from a basis.

Shows the image of a translation, checks it against the slow route through
the complexified base change, and recovers the matrix from its image.
"""
from hilbert_so22 import _matrix as mx
from hilbert_so22 import BasisCtx, SigmaElem, base_change_oracle, make_field, phi_fast, phi_inverse
from hilbert_so22.modgroup import sample
from hilbert_so22.ortho4 import in_discriminant_kernel, in_SO0, is_orthogonal


def show(U):
    for row in U:
        print("   ", "  ".join(f"{str(x):>6}" for x in row))


ctx = make_field(5)
basis = BasisCtx.standard(ctx)
print("basis (1, w) of Z[(1+sqrt5)/2], Gram matrix S =", mx.to_strings(basis.S.S))

T = SigmaElem.upper(ctx.one)
U = phi_fast(T, basis)
print("\nimage of the translation [[1,1],[0,1]]:")
show(U)
print("  same via base change:", U == base_change_oracle(T, basis))
print("  orthogonal:", is_orthogonal(U, basis.S), " identity component:", in_SO0(U, basis.S))
print("  in the discriminant kernel:", in_discriminant_kernel(U, basis.S))

M = sample("sigma", 1, ctx)
U = phi_fast(M, basis)
# ell stays 9 here: dividing L by 3 would leave O_K
print(f"\na random element of Sigma: {M}")
show(U)
back = phi_inverse(U, basis)
print("  recovered from the image:", back)
print("  same projective class:", back == M)

# a basis that is not a Z-basis of the ring of integers still works over Q
half = BasisCtx.of(ctx.elem(1, 0) / 2, ctx.sqrt_m)
print(f"\nbasis {half} (role {half.role}): oracle agrees:", phi_fast(M, half) == base_change_oracle(M, half))
