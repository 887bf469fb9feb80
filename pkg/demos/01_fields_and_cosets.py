#!/usr/bin/env python3
"""Walk through a few real quadratic fields: fundamental unit, the
Atkin-Lehner matrices and how they split into cosets of the Hilbert
modular group, and whether the normalizer is bigger than Gamma*.
"""
from hilbert_so22 import (
    atkin_lehner_set,
    fundamental_unit,
    index_gamma_star,
    make_field,
    normalizer_class,
)
from hilbert_so22.modgroup import coset_classes, format_matrix, khat_primes, nu_primes
from hilbert_so22.quadfield import format_quad


def describe(m):
    ctx = make_field(m)
    eps = fundamental_unit(ctx)
    print(f"Q(sqrt {m}): d_K = {ctx.disc}, omega = {format_quad(ctx.omega)}")
    print(f"  fundamental unit {format_quad(eps)} of norm {eps.norm()}")

    mats = atkin_lehner_set(ctx)
    for ell, V in mats.items():
        print(f"  V_{ell:<3} = {format_matrix(V)}")
    classes = coset_classes(mats)
    nu = nu_primes(ctx)
    print(f"  {nu} prime(s) divide d_K, so Gamma* / Gamma has {index_gamma_star(ctx)} element(s); cosets {classes}")

    cls = normalizer_class(ctx)
    if cls.kind == "equal":
        print("  the normalizer of Gamma coincides with Gamma*")
    else:
        print(f"  the normalizer is strictly larger; M_0 = {cls.m0} ({cls.source} construction)")
    print(f"  primes generating the genus field: {khat_primes(ctx)}")
    print()


if __name__ == "__main__":
    for m in (2, 5, 6, 13, 15):
        describe(m)
