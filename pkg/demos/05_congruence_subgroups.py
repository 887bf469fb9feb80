#!/usr/bin/env python3
"""Congruence subgroups on both sides.

Lower-left entry divisible by N corresponds to a conjugate of the
discriminant kernel of the extended form S_N; the principal congruence
subgroup maps into the kernel of N*S.  For N dividing d_K the basis (N, w)
gives the version with lower-left entry in the ideal generated by N and w.
"""
from hilbert_so22 import _matrix as mx
from hilbert_so22 import BasisCtx, make_field, phi_fast
from hilbert_so22.isomap import cor2a_rhs, cor2b_rhs, cor3_context, cor3_rhs
from hilbert_so22.modgroup import cor2a_lhs, cor2b_lhs, cor3_lhs, sample

ctx = make_field(6)
b = BasisCtx.standard(ctx)
for N in (2, 3, 5):
    agree = total = members = 0
    for s in range(60):
        M = sample("cor2a" if s % 2 else "gamma", s, ctx, N=N)
        lhs = cor2a_lhs(M, N)
        members += lhs
        agree += lhs == cor2a_rhs(phi_fast(M, b), N, b)
        total += 1
    P = sample("principal_congruence", 0, ctx, N=N)
    print(f"N={N}: {members}/{total} samples in Gamma_0(N); matrix and orthogonal side agree on {agree}")
    print(f"      principal congruence sample maps into D(N S): {cor2b_lhs(P, N) and cor2b_rhs(phi_fast(P, b), N, b)}")

for N in (2, 3):
    bN, T = cor3_context(N, ctx)
    ok = all(cor3_lhs(M, N) and cor3_rhs(phi_fast(M, bN), N, ctx) for M in (sample("cor3", s, ctx, N=N) for s in range(20)))
    print(f"basis {bN}, T_{N} = {mx.to_strings(T.S)}: 20 samples land in the conjugated kernel: {ok}")
