"""Command-line interface.

Subcommands
-----------
factor          factor x^(2n)-1 over F_{2^m}: factors, cosets, pairing, idempotents
count-ideals    number of ideals of a chain-ring component with residue field F_q
enum-ideals     stream those ideal labels as JSON lines
count-selfdual  number of self-dual cyclic codes of length 2n over F_{2^m}[u]/(u^k)
enum-selfdual   stream the self-dual codes as JSON descriptors
count-selforth  number of self-orthogonal cyclic codes of length 2n (k = 2)
enum-selforth   stream the self-orthogonal codes (k = 2)
hull            hull (code meet dual) of a described code (k = 2)
gray            Gray-image generator matrix, weight distribution, or min distance
verify          run the brute-force oracle suite for one (n, m, k)
tables          the published count tables and the L_k ideal-count list, as CSV

Code descriptors
----------------
``hull`` and ``gray`` take ``--code`` with a JSON object (inline, ``@file``,
or ``-`` for stdin)::

    {"n": 7, "m": 1, "k": 2, "modulus": "0x3",
     "components": [{"j": 0, "kind": "u_f", "s": 0},
                    {"j": 1, "kind": "mixed_one", "i": 1, "t": 0,
                     "omega": ["0x3"]},
                    {"j": 2, "kind": "u_pow", "i": 2}]}

``components`` carries one entry per irreducible factor of x^n - 1 (pair
partners included), in factor order.  Polynomials over F_{2^m} are hex-coded
with m bits per coefficient, least-significant bits the constant term, so for
m = 1 the poly x^3 + x + 1 is 0xb; ``omega`` lists one such polynomial per
u-power slot of the label's unit parameter.  ``modulus`` is the F_2[y]
modulus of the coefficient field in the same bit packing (m = 4 default:
0x13 = y^4 + y + 1); it may be omitted to use the per-m default.

Output conventions
------------------
Enumerations emit one JSON object per line and honour ``--limit``; tables are
CSV; everything else is a single JSON object.  Matrix rows are hex-packed in
the same m-bits-per-symbol convention.  All output is deterministic.

Exit codes: 0 success; 2 usage error or malformed descriptor; 3 verification
failure; 4 instance over a resource cap.  ``--threads`` (default from the
UCYCLIC_THREADS environment variable) caps worker threads where supported.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys

from . import duality as du
from . import gray as gr
from . import ideals as il
from . import oracle as orc
from . import selfdual as sd
from .cyclotomic import FactorData, cyclotomic_cosets, factor_xn_minus_1
from .errors import (BadDescriptor, MinDistOfTrivial, NotSelfDual, TooLarge,
                     UcyclicError, UnsupportedK)
from .gf import poly_from_key, poly_key

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY = 3
EXIT_TOOLARGE = 4

LABEL_KINDS = ("u_pow", "u_f", "mixed_one", "mixed_two",
               "two_gen", "two_gen_omega")


# ---------------------------------------------------------------------------
# wire format
# ---------------------------------------------------------------------------

def _hex(v: int) -> str:
    return hex(v)


def _int_from_hex(s, what: str) -> int:
    if not isinstance(s, str):
        raise BadDescriptor(f"{what} must be a hex string, got {s!r}")
    try:
        v = int(s, 16)
    except ValueError:
        raise BadDescriptor(f"{what} is not valid hex: {s!r}") from None
    if v < 0:
        raise BadDescriptor(f"{what} must be nonnegative")
    return v


def format_label(ctx, label: il.IdealLabel) -> dict:
    """JSON-ready form of an ideal label (omega polys hex-packed)."""
    out: dict = {"kind": label.kind}
    for name in ("i", "t", "s"):
        v = getattr(label, name)
        if v is not None:
            out[name] = v
    if label.omega is not None:
        out["omega"] = [_hex(poly_key(ctx, p)) for p in label.omega]
    return out


def parse_label(ctx, obj) -> il.IdealLabel:
    if not isinstance(obj, dict):
        raise BadDescriptor(f"component must be an object, got {obj!r}")
    kind = obj.get("kind")
    if kind not in LABEL_KINDS:
        raise BadDescriptor(f"unknown ideal kind {kind!r}")
    params = {}
    for name in ("i", "t", "s"):
        if obj.get(name) is not None:
            v = obj[name]
            if not isinstance(v, int) or isinstance(v, bool):
                raise BadDescriptor(f"parameter {name} must be an integer")
            params[name] = v
    omega = None
    if obj.get("omega") is not None:
        if not isinstance(obj["omega"], list):
            raise BadDescriptor("omega must be a list of hex polynomials")
        omega = tuple(poly_from_key(ctx, _int_from_hex(h, "omega entry"))
                      for h in obj["omega"])
    stray = set(obj) - {"j", "kind", "i", "t", "s", "omega"}
    if stray:
        raise BadDescriptor(f"unknown component fields {sorted(stray)}")
    return il.IdealLabel(kind, omega=omega, **params)


def format_code(code: sd.CyclicCode) -> dict:
    """CodeDescriptor for a code; parse_code inverts it losslessly."""
    ctx = code.fd.ctx
    return {
        "n": code.n,
        "m": code.m,
        "k": code.k,
        "modulus": _hex(ctx.modulus),
        "components": [{"j": j} | format_label(ctx, lab)
                       for j, lab in enumerate(code.components)],
    }


def parse_code(obj, fd: FactorData | None = None) -> sd.CyclicCode:
    """CyclicCode from a descriptor object; BadDescriptor on any defect."""
    if not isinstance(obj, dict):
        raise BadDescriptor("descriptor must be a JSON object")
    try:
        n, m, k = int(obj["n"]), int(obj["m"]), int(obj["k"])
    except (KeyError, TypeError, ValueError):
        raise BadDescriptor("descriptor needs integer fields n, m, k") from None
    modulus = None
    if obj.get("modulus") is not None:
        modulus = _int_from_hex(obj["modulus"], "modulus")
    if fd is None or fd.n != n or fd.m != m or (
            modulus is not None and fd.ctx.modulus != modulus):
        try:
            fd = factor_xn_minus_1(n, m, modulus)
        except ValueError as exc:
            raise BadDescriptor(str(exc)) from None
    comps = obj.get("components")
    if not isinstance(comps, list):
        raise BadDescriptor("descriptor needs a components list")
    labels: list[il.IdealLabel | None] = [None] * fd.r
    for entry in comps:
        lab = parse_label(fd.ctx, entry)
        j = entry.get("j") if isinstance(entry, dict) else None
        if not isinstance(j, int) or not 0 <= j < fd.r:
            raise BadDescriptor(f"component index j={j!r} out of range "
                                f"(need 0..{fd.r - 1})")
        if labels[j] is not None:
            raise BadDescriptor(f"duplicate component j={j}")
        labels[j] = lab
    if any(lab is None for lab in labels):
        missing = [j for j, lab in enumerate(labels) if lab is None]
        raise BadDescriptor(f"missing components {missing}")
    try:
        return sd.CyclicCode(fd, k, tuple(labels))
    except (ValueError, BadDescriptor) as exc:
        raise BadDescriptor(str(exc)) from None


def _read_code_arg(text: str) -> sd.CyclicCode:
    if text == "-":
        text = sys.stdin.read()
    elif text.startswith("@"):
        with open(text[1:], "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadDescriptor(f"--code is not valid JSON: {exc}") from None
    return parse_code(obj)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, separators=(", ", ": "))
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_factor(args) -> int:
    fd = factor_xn_minus_1(args.n, args.m, args.modulus)
    ctx = fd.ctx
    _emit({
        "n": fd.n,
        "m": fd.m,
        "modulus": _hex(ctx.modulus),
        "cosets": [list(c) for c in cyclotomic_cosets(fd.n, ctx.order)],
        "factors": [_hex(poly_key(ctx, f)) for f in fd.factors],
        "degrees": [fd.degree(j) for j in range(fd.r)],
        "num_selfrec": fd.num_selfrec,
        "num_pairs": fd.num_pairs,
        "pairing": [fd.mate(j) for j in range(fd.r)],
        "delta": [_hex(dj) for dj in fd.delta],
        "idempotents": [_hex(poly_key(ctx, e)) for e in fd.idempotents],
    })
    return EXIT_OK


def _q_to_field(q: int) -> int:
    if q < 2 or q & (q - 1):
        raise ValueError(f"q must be a power of two >= 2, got {q}")
    return q.bit_length() - 1


def _cmd_count_ideals(args) -> int:
    _q_to_field(args.q)
    print(il.count_ideals(args.q, args.k))
    return EXIT_OK


def _cmd_enum_ideals(args) -> int:
    # realize F_q as the residue field of the (unique, degree-1) component
    # at n = 1 over F_q itself
    e = _q_to_field(args.q)
    fd = factor_xn_minus_1(1, e)
    for idx, lab in enumerate(il.enumerate_ideals(fd, 0, args.k)):
        if args.limit is not None and idx >= args.limit:
            break
        line = format_label(fd.ctx, lab)
        line["size_log2"] = il.ideal_size_log2(lab, e, 1, args.k)
        _emit(line)
    return EXIT_OK


def _cmd_count_selfdual(args) -> int:
    print(sd.count_selfdual(args.n, args.m, args.k, modulus=args.modulus))
    return EXIT_OK


def _cmd_enum_selfdual(args) -> int:
    gen = sd.enumerate_selfdual(args.n, args.m, args.k, modulus=args.modulus)
    for idx, code in enumerate(gen):
        if args.limit is not None and idx >= args.limit:
            break
        _emit(format_code(code))
    return EXIT_OK


def _cmd_count_selforth(args) -> int:
    print(du.count_selforthogonal(args.n, args.m, modulus=args.modulus))
    return EXIT_OK


def _cmd_enum_selforth(args) -> int:
    gen = du.enumerate_selforthogonal(args.n, args.m, modulus=args.modulus)
    for idx, code in enumerate(gen):
        if args.limit is not None and idx >= args.limit:
            break
        _emit(format_code(code))
    return EXIT_OK


def _cmd_hull(args) -> int:
    code = _read_code_arg(args.code)
    _emit(format_code(du.hull(code)))
    return EXIT_OK


def _pack_row(row, m: int) -> str:
    v = 0
    for i, c in enumerate(row):
        v |= c << (m * i)
    return _hex(v)


def _gray_matrix(code: sd.CyclicCode) -> gr.GenMatrix:
    """Structured matrix for self-dual codes, row reduction otherwise."""
    if code.k == 2 and sd.is_self_dual(code):
        return gr.generator_matrix(code)
    return gr.gray_image_matrix(code)


def _cmd_gray(args) -> int:
    code = _read_code_arg(args.code)
    gm = _gray_matrix(code)
    if args.weights or args.mindist:
        dist = gr.weight_distribution(gm, threads=args.threads)
        if args.mindist:
            nz = [w for w in dist if w]
            if not nz:
                raise MinDistOfTrivial(
                    "minimum distance of the zero code is undefined")
            _emit({"min_distance": min(nz)})
        else:
            _emit({"distribution": {str(w): dist[w] for w in sorted(dist)}})
        return EXIT_OK
    if args.grid:
        for row in gm.rows:
            if code.m == 1:
                sys.stdout.write("".join(str(c) for c in row) + "\n")
            else:
                sys.stdout.write(" ".join(f"{c:x}" for c in row) + "\n")
        return EXIT_OK
    _emit({
        "length": gm.cols,
        "m": code.m,
        "rank": gm.rank(),
        "rows": [_pack_row(row, code.m) for row in gm.rows],
    })
    return EXIT_OK


def _cmd_tables(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    if args.lk:
        for k in range(2, 10):
            writer.writerow([k, il.count_ideals(2, k)])
        return EXIT_OK
    if args.paper_section == 4:
        for n in range(3, 50, 2):
            writer.writerow([2 * n, sd.count_selfdual(n, 1, 2)])
        return EXIT_OK
    for n in range(3, 50, 2):
        writer.writerow([2 * n, du.count_selforthogonal(n, 1)])
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify: the oracle suite as a report
# ---------------------------------------------------------------------------

class _Report:
    def __init__(self) -> None:
        self.failed = 0

    def check(self, ok: bool, name: str, detail: str = "") -> None:
        print(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({detail})" if detail else ""))
        if not ok:
            self.failed += 1

    def skip(self, name: str, why: str) -> None:
        print(f"SKIP  {name}  ({why})")


def _descriptor_gens(code: sd.CyclicCode):
    return sd.to_ambient_generators(code)


def _verify_ideal_census(rep, fd, k):
    for j in fd.component_indices():
        d = fd.degree(j)
        name = f"ideal-census j={j}"
        if 2 * d * fd.m * k > 14:
            rep.skip(name, "component ring too large for exhaustion")
            continue
        got = len(orc.brute_component_ideals(fd, j, k))
        want = il.count_ideals(1 << (fd.m * d), k)
        rep.check(got == want, name, f"{got} ideals, closed form {want}")


def _verify_selfdual(rep, fd, k):
    n, m = fd.n, fd.m
    codes = list(sd.enumerate_selfdual(n, m, k, fd))
    want = sd.count_selfdual(n, m, k, fd)
    rep.check(len(codes) == len(set(codes)) == want, "selfdual-count",
              f"{len(codes)} codes, mass formula {want}")
    if 2 * n * m * k > 32:
        rep.skip("selfdual-membership", "ambient space too large")
        return
    ok = all(
        orc.brute_is_selfdual(
            orc.span_code(n, m, k, _descriptor_gens(c), fd.ctx.modulus),
            fd.ctx.modulus)
        for c in codes)
    rep.check(ok, "selfdual-membership", f"{len(codes)} codes brute-checked")
    if 2 * n * m * k > 14:
        rep.skip("selfdual-filter", "full ideal exhaustion too large")
        return
    brute = sum(orc.brute_is_selfdual(c, fd.ctx.modulus)
                for c in orc.brute_all_ideals(n, m, k, fd.ctx.modulus))
    rep.check(brute == want, "selfdual-filter",
              f"oracle finds {brute} self-dual ideals")


def _verify_hull(rep, fd, k):
    n, m = fd.n, fd.m
    if k != 2:
        rep.skip("hull-oracle", "duality layer is k = 2 only")
        return
    if 2 * n * m * k > 32:
        rep.skip("hull-oracle", "ambient space too large")
        return
    total = sd.count_cyclic(n, m, k, fd)
    codes = sd.enumerate_cyclic(n, m, k, fd)
    if total > 500:
        pool = list(codes)
        codes = random.Random(0).sample(pool, 500)
    checked = 0
    ok = True
    for c in codes:
        dense = orc.span_code(n, m, k, _descriptor_gens(c), fd.ctx.modulus)
        brute = orc.brute_intersect(dense, orc.brute_dual(dense, fd.ctx.modulus))
        mine = orc.span_code(n, m, k, _descriptor_gens(du.hull(c)),
                             fd.ctx.modulus)
        if sorted(mine.basis) != sorted(brute.basis):
            ok = False
            break
        checked += 1
    rep.check(ok, "hull-oracle", f"{checked} codes checked")


def _verify_theta(rep, fd, k):
    for j in range(1, fd.num_selfrec):
        for s in range(1, max(2, k // 2 + 1)):
            name = f"theta j={j} s={s}"
            if fd.degree(j) * fd.m * s > 16:
                rep.skip(name, "unit group too large for exhaustion")
                continue
            mine = sorted(sd.theta_set(fd, j, s).members)
            brute = sorted(orc.theta_congruence_filter(fd, j, s))
            rep.check(mine == brute, name, f"{len(mine)} units")


def _verify_selforth(rep, fd, k):
    if k != 2:
        rep.skip("selforth-count", "duality layer is k = 2 only")
        return
    n, m = fd.n, fd.m
    codes = list(du.enumerate_selforthogonal(n, m, fd))
    want = du.count_selforthogonal(n, m, fd)
    rep.check(len(codes) == len(set(codes)) == want, "selforth-count",
              f"{len(codes)} codes, closed form {want}")
    if 2 * n * m * k > 32:
        rep.skip("selforth-membership", "ambient space too large")
        return
    ok = all(
        orc.brute_is_selforthogonal(
            orc.span_code(n, m, k, _descriptor_gens(c), fd.ctx.modulus),
            fd.ctx.modulus)
        for c in codes)
    rep.check(ok, "selforth-membership", f"{len(codes)} codes brute-checked")


def _verify_gray(rep, fd, k):
    if k != 2:
        rep.skip("gray-genmatrix", "Gray layer is k = 2 only")
        return
    n, m = fd.n, fd.m
    codes = list(sd.enumerate_selfdual(n, m, 2, fd))
    if len(codes) > 32:
        codes = random.Random(0).sample(codes, 32)
    ok = True
    for c in codes:
        gm = gr.generator_matrix(c)
        alt = gr.gray_image_matrix(c)
        if not (gm.rank() == 2 * n and gr.gram_is_zero(gm)
                and gr.is_2_quasi_cyclic(gm)
                and tuple(gr.rref_fq(gm.ctx, gm.rows)[0]) == tuple(alt.rows)):
            ok = False
            break
    rep.check(ok, "gray-genmatrix",
              f"{len(codes)} codes: rank 2n, G.G^T = 0, 2-quasi-cyclic")


def _cmd_verify(args) -> int:
    fd = factor_xn_minus_1(args.n, args.m, args.modulus)
    rep = _Report()
    print(f"oracle suite for n={args.n} m={args.m} k={args.k} "
          f"modulus={_hex(fd.ctx.modulus)}")
    _verify_ideal_census(rep, fd, args.k)
    _verify_theta(rep, fd, args.k)
    _verify_selfdual(rep, fd, args.k)
    _verify_hull(rep, fd, args.k)
    _verify_selforth(rep, fd, args.k)
    _verify_gray(rep, fd, args.k)
    if rep.failed:
        print(f"{rep.failed} check(s) FAILED")
        return EXIT_VERIFY
    print("all checks passed")
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _hex_int(s: str) -> int:
    return int(s, 16)


def _default_threads() -> int:
    try:
        return max(1, int(os.environ.get("UCYCLIC_THREADS", "1")))
    except ValueError:
        return 1


def _add_nmk(p, k: bool = True) -> None:
    p.add_argument("--n", type=int, required=True, help="half the code length")
    p.add_argument("--m", type=int, required=True, help="field is F_{2^m}")
    if k:
        p.add_argument("--k", type=int, required=True,
                       help="nilpotency index of u")
    p.add_argument("--modulus", type=_hex_int, default=None,
                   help="field modulus as hex bits (default per m)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ucyclic",
        description="self-dual cyclic codes over F_{2^m}[u]/(u^k) "
                    "and their binary Gray images")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("factor", help="factor x^(2n)-1 over F_{2^m}")
    _add_nmk(p, k=False)
    p.set_defaults(func=_cmd_factor)

    p = sub.add_parser("count-ideals", help="ideal count for one component")
    p.add_argument("--q", type=int, required=True,
                   help="residue field size (power of two)")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_count_ideals)

    p = sub.add_parser("enum-ideals", help="stream component ideal labels")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=_cmd_enum_ideals)

    p = sub.add_parser("count-selfdual", help="count self-dual cyclic codes")
    _add_nmk(p)
    p.set_defaults(func=_cmd_count_selfdual)

    p = sub.add_parser("enum-selfdual", help="stream self-dual cyclic codes")
    _add_nmk(p)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=_cmd_enum_selfdual)

    p = sub.add_parser("count-selforth",
                       help="count self-orthogonal cyclic codes (k = 2)")
    _add_nmk(p, k=False)
    p.set_defaults(func=_cmd_count_selforth)

    p = sub.add_parser("enum-selforth",
                       help="stream self-orthogonal cyclic codes (k = 2)")
    _add_nmk(p, k=False)
    p.add_argument("--limit", type=int, default=None)
    p.set_defaults(func=_cmd_enum_selforth)

    p = sub.add_parser("hull", help="hull of a described code (k = 2)")
    p.add_argument("--code", required=True,
                   help="JSON descriptor (inline, @file, or - for stdin)")
    p.set_defaults(func=_cmd_hull)

    p = sub.add_parser("gray", help="binary Gray image of a described code")
    p.add_argument("--code", required=True,
                   help="JSON descriptor (inline, @file, or - for stdin)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--genmatrix", action="store_true",
                   help="generator matrix (default)")
    g.add_argument("--weights", action="store_true",
                   help="full weight distribution")
    g.add_argument("--mindist", action="store_true", help="minimum distance")
    p.add_argument("--grid", action="store_true",
                   help="plain-text matrix grid instead of JSON")
    p.add_argument("--threads", type=int, default=_default_threads())
    p.set_defaults(func=_cmd_gray)

    p = sub.add_parser("verify", help="run the brute-force oracle suite")
    _add_nmk(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("tables", help="published count tables as CSV")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--paper-section", type=int, choices=(4, 5),
                   help="4: self-dual counts; 5: self-orthogonal counts")
    g.add_argument("--lk", action="store_true",
                   help="L_k ideal counts over F_2, k = 2..9")
    p.set_defaults(func=_cmd_tables)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOOLARGE
    except NotSelfDual as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (BadDescriptor, UnsupportedK, MinDistOfTrivial) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UcyclicError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
