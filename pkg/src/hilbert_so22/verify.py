"""Randomized property suites over a list of fields.

Each trial draws its samples from a seed string built from (seed, m, trial),
so any failure can be replayed from the counterexample record alone.  Work is
split into shards by trial index; shard results are merged in a fixed order,
so the summary does not depend on the number of workers.
"""
from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Optional

from . import _matrix as mx
from .action import automorphy, automorphy_from_matrix, check_compat, ortho_action, random_point
from .isomap import (
    BasisCtx,
    base_change_oracle,
    cor2a_rhs,
    cor2b_rhs,
    cor3_context,
    cor3_rhs,
    dk_criterion_fm,
    block_congruence_holds,
    phi_fast,
    phi_inverse,
)
from .modgroup import (
    atkin_lehner_set,
    cor2a_lhs,
    cor2b_lhs,
    cor3_lhs,
    format_matrix,
    coset_count,
    in_gamma_star,
    in_normalizer,
    index_gamma_star,
    m0_two_squares,
    m0_unit,
    normalizer_class,
    sample_with_word,
)
from .ortho4 import in_discriminant_kernel, in_SO0, is_orthogonal
from .errors import WrongCase
from .quadfield import fundamental_unit, make_field

SUITES = (
    "oracle",
    "homomorphism",
    "discriminant_kernel",
    "atkin_lehner",
    "kernel_criteria",
    "round_trip",
    "action",
    "cocycle",
    "congruence",
)

MAX_COUNTEREXAMPLES = 3
CONGRUENCE_LEVELS = (2, 3, 5)

Phi = Callable  # (SigmaElem, BasisCtx) -> 4x4 rational matrix


def _record(m, seed, trial, word, **extra):
    rec = {"m": m, "seed": seed, "trial": trial, "word": " ".join(word)}
    rec.update(extra)
    return rec


def _trial(m: int, seed: int, trial: int, phi: Phi) -> dict[str, list]:
    """Run every suite once; returns suite -> list of (ok, counterexample-or-None)."""
    ctx = make_field(m)
    bctx = BasisCtx.standard(ctx)
    tag = f"{seed}:{trial}"
    out: dict[str, list] = {s: [] for s in SUITES}

    def add(suite, ok, word, **extra):
        out[suite].append((ok, None if ok else _record(m, seed, trial, word, **extra)))

    # oracle: two independent computations of the image
    M, w = sample_with_word("sigma", tag, ctx)
    U = phi(M, bctx)
    add("oracle", U == base_change_oracle(M, bctx), w, matrix=format_matrix(M))

    # homomorphism on Gamma_K is exact (no sign ambiguity)
    M1, w1 = sample_with_word("gamma", tag + ":a", ctx)
    M2, w2 = sample_with_word("gamma", tag + ":b", ctx)
    ok = phi(M1 * M2, bctx) == mx.matmul(phi(M1, bctx), phi(M2, bctx))
    add("homomorphism", ok, w1 + ["*"] + w2)

    # Gamma_K lands in the discriminant kernel
    U1 = phi(M1, bctx)
    add("discriminant_kernel", in_discriminant_kernel(U1, bctx.S), w1)

    # Gamma*_K lands in SO_0(S_1; Z)
    Ms, ws = sample_with_word("gamma_star", tag, ctx)
    Us = phi(Ms, bctx)
    ok = mx.is_integral(Us) and is_orthogonal(Us, bctx.S) and in_SO0(Us, bctx.S)
    add("atkin_lehner", ok, ws)

    # block congruence of the middle block against the F_M criterion
    add("kernel_criteria", block_congruence_holds(Ms, bctx) == dk_criterion_fm(Ms, bctx), ws)

    # phi_inverse o phi = +-id
    try:
        ok = phi_inverse(U, bctx) == M
    except Exception as exc:  # noqa: BLE001 - any failure is a counterexample
        ok = False
        w = w + [f"[{type(exc).__name__}]"]
    add("round_trip", ok, w)

    # action compatibility and automorphy identity
    rng = random.Random(f"point:{m}:{tag}")
    z = random_point(bctx, rng)
    ok = check_compat(M, bctx, z, U=U) and automorphy(U, z, bctx.S) == automorphy_from_matrix(M, bctx, z)
    add("action", ok, w)

    # cocycle identity of the factor of automorphy
    V = phi(M2, bctx)
    lhs = automorphy(mx.matmul(U1, V), z, bctx.S)
    rhs = automorphy(U1, ortho_action(V, z, bctx.S, check=False), bctx.S) * automorphy(V, z, bctx.S)
    add("cocycle", lhs == rhs, w1 + ["*"] + w2)

    # congruence subgroups
    N = CONGRUENCE_LEVELS[trial % len(CONGRUENCE_LEVELS)]
    Mc, wc = sample_with_word("cor2a" if trial % 2 else "gamma", tag, ctx, N=N)
    ok = cor2a_lhs(Mc, N) == cor2a_rhs(phi(Mc, bctx), N, bctx)
    Mp, wp = sample_with_word("principal_congruence", tag, ctx, N=N)
    ok = ok and cor2b_lhs(Mp, N) and cor2b_rhs(phi(Mp, bctx), N, bctx)
    if ctx.disc % N == 0:
        M3, _ = sample_with_word("cor3", tag, ctx, N=N)
        b3, _ = cor3_context(N, ctx)
        ok = ok and cor3_lhs(M3, N) and cor3_rhs(phi(M3, b3), N, ctx)
    add("congruence", ok, wc, N=N)
    return out


def _field_checks(m: int) -> list[tuple[bool, Optional[dict]]]:
    """Deterministic per-field checks: index formula and every available M_0."""
    ctx = make_field(m)
    results = []

    def add(name, ok):
        results.append((ok, None if ok else {"m": m, "check": name}))

    add("index", coset_count(ctx) == index_gamma_star(ctx))
    add("atkin_lehner", all(in_gamma_star(V) for V in atkin_lehner_set(ctx).values()))
    cls = normalizer_class(ctx)
    add("normalizer_class", (cls.kind == "extended") == (cls.m0 is not None))
    if fundamental_unit(ctx).norm() == -1:
        M0 = m0_unit(ctx)
        add("m0_unit", in_normalizer(M0) and not in_gamma_star(M0))
    try:
        M0 = m0_two_squares(ctx)
    except WrongCase:
        pass
    else:
        add("m0_two_squares", in_normalizer(M0) and not in_gamma_star(M0))
    return results


def _run_shard(args) -> dict:
    m_list, seed, trials, shard, n_shards, phi = args
    phi = phi or phi_fast
    counts = {s: [0, 0] for s in SUITES + ("field",)}
    failures = {s: [] for s in SUITES + ("field",)}
    for m in m_list:
        if shard == 0:
            for ok, rec in _field_checks(m):
                counts["field"][0 if ok else 1] += 1
                if rec:
                    failures["field"].append(rec)
        for t in range(shard, trials, n_shards):
            for suite, results in _trial(m, seed, t, phi).items():
                for ok, rec in results:
                    counts[suite][0 if ok else 1] += 1
                    if rec:
                        failures[suite].append(rec)
    return {"counts": counts, "failures": failures}


def _minimize(records: list[dict]) -> list[dict]:
    """Keep the shortest-word failures (ties broken by m and trial)."""
    key = lambda r: (len(r.get("word", "").split()), r["m"], r.get("trial", -1))
    return sorted(records, key=key)[:MAX_COUNTEREXAMPLES]


def run_suites(
    m_list: Iterable[int],
    seed: int = 0,
    trials: int = 50,
    workers: int = 1,
    phi: Optional[Phi] = None,
) -> dict:
    """Run all suites; ``phi`` replaces phi_fast (negative controls run in-process)."""
    m_list = list(m_list)
    n_shards = max(1, workers)
    jobs = [(m_list, seed, trials, i, n_shards, phi) for i in range(n_shards)]
    if n_shards == 1 or phi is not None:
        shards = [_run_shard(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=n_shards) as pool:
            shards = list(pool.map(_run_shard, jobs))
    suites = {}
    for name in SUITES + ("field",):
        passed = sum(s["counts"][name][0] for s in shards)
        failed = sum(s["counts"][name][1] for s in shards)
        recs = [r for s in shards for r in s["failures"][name]]
        suites[name] = {
            "passed": passed,
            "failed": failed,
            "counterexamples": _minimize(recs),
        }
    return {
        "m_list": m_list,
        "seed": seed,
        "trials": trials,
        "suites": suites,
        "ok": all(v["failed"] == 0 for v in suites.values()),
    }
