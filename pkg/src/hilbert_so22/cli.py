"""Command-line front end.

    hilbert-so22 analyze M [--ideal N,t]
    hilbert-so22 map M BASIS MATRIX [--inverse]
    hilbert-so22 verify [--m-list 2,3,5] [--seed S] [--trials T] [--workers W] [--reproducible]
    hilbert-so22 cosets M [--ideal N,t]

Output is JSON with exact numbers written as "p/q" strings.  Exit status is
2 for invalid input and 1 when an internal check fails.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from datetime import datetime, timezone
from typing import Optional, Sequence

from . import _matrix as mx
from .errors import HilbertSOError, NotInImage
from .ideals import general_inverse, ideal_from_canonical
from .isomap import BasisCtx, phi_fast, phi_inverse, psi, psi_inverse
from .modgroup import (
    GammaICtx,
    SigmaElem,
    atkin_lehner,
    atkin_lehner_ideal,
    atkin_lehner_set,
    coset_classes,
    coset_eq_I,
    coset_count,
    format_matrix,
    in_gamma_star,
    in_gamma_star_I,
    in_normalizer,
    index_gamma_star,
    khat_primes,
    normalizer_class,
    nu_primes,
    parse_matrix,
)
from .ortho4 import in_discriminant_kernel, in_SO0, is_orthogonal
from .quadfield import format_quad, fundamental_unit, make_field, parse_quad
from .verify import run_suites

SCHEMA = 1


class InputError(Exception):
    """Bad command-line input (exit status 2)."""


def _frac(q) -> str:
    return mx.frac_str(q)


def _parse_ideal(text: str, ctx):
    try:
        N, t = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise InputError(f"--ideal expects 'N,t', got {text!r}") from exc
    return ideal_from_canonical(N, t, ctx)


def _parse_basis(text: str, ctx) -> BasisCtx:
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError(f"basis expects two elements 'u,v', got {text!r}")
    return BasisCtx.of(*(parse_quad(p, ctx.m) for p in parts))


def _parse_2x2(text: str, ctx) -> SigmaElem:
    s = text.strip()
    if s.lower() in ("identity", "i"):
        return SigmaElem.identity(ctx)
    named = re.fullmatch(r"[Vv]_?(\d+)", s)
    if named:
        return atkin_lehner(int(named.group(1)), ctx)
    return parse_matrix(s, ctx.m)


def _parse_4x4(text: str):
    try:
        # accepts bare numbers and the quoted "p/q" strings this tool emits
        rows = json.loads(re.sub(r"(-?\d+(?:/\d+)?)", r'"\1"', text.replace('"', "")))
        U = mx.from_strings(rows)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse 4x4 matrix {text!r}") from exc
    if len(U) != 4 or any(len(r) != 4 for r in U):
        raise InputError("matrix must be 4x4")
    return U


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_analyze(m: int, ideal: Optional[str] = None) -> dict:
    ctx = make_field(m)
    eps = fundamental_unit(ctx)
    mats = atkin_lehner_set(ctx)
    classes = coset_classes(mats)
    index = index_gamma_star(ctx)
    checks = {
        "index_matches_cosets": len(classes) == index,
        "atkin_lehner_in_gamma_star": all(in_gamma_star(V) for V in mats.values()),
    }
    cls = normalizer_class(ctx)
    normalizer = {"kind": cls.kind}
    if cls.m0 is not None:
        normalizer["m0"] = str(cls.m0)
        normalizer["source"] = cls.source
        checks["m0_in_normalizer"] = in_normalizer(cls.m0)
        checks["m0_outside_gamma_star"] = not in_gamma_star(cls.m0)
    coset_of = {ell: cl[0] for cl in classes for ell in cl}
    report = {
        "schema": SCHEMA,
        "m": m,
        "d_K": ctx.disc,
        "omega": format_quad(ctx.omega),
        "fundamental_unit": {"value": format_quad(eps), "norm": _frac(eps.norm())},
        "nu": nu_primes(ctx),
        "index_gamma_star": index,
        "atkin_lehner": [
            {"ell": ell, "matrix": format_matrix(V), "coset": coset_of[ell]}
            for ell, V in mats.items()
        ],
        "normalizer_class": normalizer,
        "khat_primes": khat_primes(ctx),
    }
    if ideal is not None:
        I = _parse_ideal(ideal, ctx)
        gctx = GammaICtx.of(I)
        vs = {ell: atkin_lehner_ideal(ell, gctx) for ell in mats}
        icl = coset_classes(vs, same=lambda a, b: coset_eq_I(a, b, gctx))
        checks["ideal_atkin_lehner_in_extension"] = all(in_gamma_star_I(V, gctx) for V in vs.values())
        checks["ideal_index_matches_cosets"] = len(icl) == index
        report["ideal"] = {
            "hnf": str(I),
            "N": I.norm,
            "inverse": str(general_inverse(I)),
            "atkin_lehner": [{"ell": ell, "matrix": format_matrix(V)} for ell, V in vs.items()],
            "cosets": icl,
        }
    report["checks"] = checks
    report["ok"] = all(checks.values())
    return report


def cmd_map(m: int, basis: str, matrix: str, inverse: bool = False) -> dict:
    ctx = make_field(m)
    bctx = _parse_basis(basis, ctx)
    form = bctx.T if bctx.role == "ideal_basis" else bctx.S
    out = {"schema": SCHEMA, "m": m, "basis": [format_quad(x) for x in bctx.basis], "role": bctx.role}
    if inverse:
        U = _parse_4x4(matrix)
        try:
            M = psi_inverse(U, bctx) if bctx.role == "ideal_basis" else phi_inverse(U, bctx)
            out["preimage"] = format_matrix(M)
        except NotInImage as exc:
            out["preimage"] = None
            out["error"] = f"NotInImage: {exc}"
        return out
    M = _parse_2x2(matrix, ctx)
    U = psi(M, bctx) if bctx.role == "ideal_basis" else phi_fast(M, bctx)
    orth = is_orthogonal(U, form)
    out["matrix"] = format_matrix(M)
    out["image"] = mx.to_strings(U)
    out["orthogonal"] = orth
    out["in_SO0"] = orth and in_SO0(U, form)
    out["in_DK"] = orth and in_discriminant_kernel(U, form)
    return out


def cmd_cosets(m: int, ideal: Optional[str] = None) -> dict:
    ctx = make_field(m)
    mats = atkin_lehner_set(ctx)
    out = {"schema": SCHEMA, "m": m, "index_gamma_star": index_gamma_star(ctx)}
    if ideal is None:
        classes = coset_classes(mats)
    else:
        gctx = GammaICtx.of(_parse_ideal(ideal, ctx))
        mats = {ell: atkin_lehner_ideal(ell, gctx) for ell in mats}
        classes = coset_classes(mats, same=lambda a, b: coset_eq_I(a, b, gctx))
        out["ideal"] = str(gctx.ideal)
    out["classes"] = [
        {"representative": cl[0], "members": cl, "matrix": format_matrix(mats[cl[0]])} for cl in classes
    ]
    out["coset_count"] = len(classes)
    out["ok"] = len(classes) == out["index_gamma_star"] and (ideal is not None or len(classes) == coset_count(ctx))
    return out


def cmd_verify(m_list: Sequence[int], seed: int, trials: int, workers: int = 1, reproducible: bool = False) -> dict:
    summary = run_suites(m_list, seed=seed, trials=trials, workers=workers)
    out = {"schema": SCHEMA}
    if not reproducible:
        out["timestamp"] = datetime.now(timezone.utc).isoformat(timespec="seconds")
    out.update(summary)
    return out


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hilbert-so22", description="Hilbert modular groups as orthogonal groups")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="field report: unit, Atkin-Lehner cosets, normalizer")
    a.add_argument("m", type=int)
    a.add_argument("--ideal", metavar="N,t", help="primitive ideal Z*N + Z*(t+w)")

    mp = sub.add_parser("map", help="image of a 2x2 matrix (or preimage with --inverse)")
    mp.add_argument("m", type=int)
    mp.add_argument("basis", help="two field elements 'u,v'; 'w' denotes omega")
    mp.add_argument("matrix", help="[[a,b],[c,d]][/sqrt(l)], 'identity', or V<l>; a 4x4 matrix with --inverse")
    mp.add_argument("--inverse", action="store_true")

    v = sub.add_parser("verify", help="run the randomized property suites")
    v.add_argument("--m-list", type=_int_list, default=[2, 3, 5, 6, 7, 13])
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--trials", type=int, default=50)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--reproducible", action="store_true", help="omit the timestamp")

    c = sub.add_parser("cosets", help="Atkin-Lehner coset classes")
    c.add_argument("m", type=int)
    c.add_argument("--ideal", metavar="N,t")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "analyze":
            out = cmd_analyze(args.m, args.ideal)
        elif args.command == "map":
            out = cmd_map(args.m, args.basis, args.matrix, args.inverse)
        elif args.command == "verify":
            out = cmd_verify(args.m_list, args.seed, args.trials, args.workers, args.reproducible)
        else:
            out = cmd_cosets(args.m, args.ideal)
    except AssertionError as exc:
        print(json.dumps({"schema": SCHEMA, "error": f"internal check failed: {exc}"}), file=sys.stderr)
        return 1
    except (InputError, HilbertSOError, ValueError) as exc:
        print(json.dumps({"schema": SCHEMA, "error": f"{type(exc).__name__}: {exc}"}), file=sys.stderr)
        return 2
    print(json.dumps(out, indent=2))
    return 0 if out.get("ok", True) else 1


if __name__ == "__main__":
    sys.exit(main())
