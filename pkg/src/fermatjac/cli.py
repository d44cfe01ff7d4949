"""Command-line front end: orbit census, decompositions, verification, sweeps.

Exit codes are a stable contract: 0 success, 2 usage or invalid input,
3 decomposition audit failure, 4 verification failure.

No configuration files and no environment variables; every behavior is a
flag, so runs are reproducible from the command line alone.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import certificates as cert
from . import decompose as dec
from . import genus as gen
from . import groups as grp
from . import monomial as mono
from . import report as rep
from .curves import MoebiusLabel, moebius_transport, normalize
from .errors import (
    AuditFailError,
    FermatJacError,
    NotPrimeError,
    OutOfRangeError,
    TooLargeError,
    TooSmallError,
)
from .orbits import OrbitKind, is_prime, make_context, orbit_partition, s3_apply

FULL_DEPTH_DEFAULT_CAP = 31


# -- verification checks -------------------------------------------------------
#
# Each check returns a detail string and raises AssertionError (or any
# package error) on failure.  cmd_verify runs them in order and stops at
# the first failure, naming the check.


def check_orbit_partition_laws(ctx, cache):
    part = orbit_partition(ctx)
    sizes = [o.size for o in part.orbits]
    assert sum(sizes) == ctx.p - 2
    assert all(s in (2, 3, 6) for s in sizes)
    assert sum(1 for o in part.orbits if o.kind is OrbitKind.SPECIAL_ONE) == 1
    gamma_orbits = [o for o in part.orbits if o.kind is OrbitKind.GAMMA]
    assert len(gamma_orbits) == (1 if ctx.has_gamma else 0)
    if ctx.has_gamma:
        for g in gamma_orbits[0].elements:
            assert (g * g + g + 1) % ctx.p == 0
    expected_generic = (ctx.p - 7) // 6 if ctx.has_gamma else (ctx.p - 5) // 6
    assert part.generic_count == expected_generic
    for o in part.orbits:
        for a in o.elements:
            assert s3_apply("U", a, ctx) in o.elements
            assert s3_apply("V", a, ctx) in o.elements
    return f"{len(part.orbits)} orbits, {expected_generic} generic"


def check_s3_relations(ctx, cache):
    for a in range(1, ctx.p - 1):
        u1 = s3_apply("U", a, ctx)
        u2 = s3_apply("U", u1, ctx)
        assert s3_apply("U", u2, ctx) == a
        assert s3_apply("V", s3_apply("V", a, ctx), ctx) == a
        uv = s3_apply("U", s3_apply("V", a, ctx), ctx)
        assert s3_apply("U", s3_apply("V", uv, ctx), ctx) == a
    return f"U^3 = V^2 = (UV)^2 = id on all {ctx.p - 2} points"


def check_moebius_transport(ctx, cache):
    from collections import Counter

    from .orbits import orbit

    labels = list(MoebiusLabel)
    for a in range(1, ctx.p - 1):
        o = orbit(a, ctx)
        images = Counter(moebius_transport(a, lab, ctx) for lab in labels)
        assert set(images) == set(o.elements)
        mult = 6 // o.size
        assert all(c == mult for c in images.values())
    for f in labels:
        for g in labels:
            fg = f.compose(g)
            for a in (1, 2, ctx.p - 2):
                lhs = moebius_transport(a, fg, ctx)
                rhs = moebius_transport(moebius_transport(a, f, ctx), g, ctx)
                assert lhs == rhs
    return "six images enumerate each orbit; composition consistent"


def check_normalization(ctx, cache):
    p = ctx.p
    for a in range(1, p - 1):
        assert normalize(a, 1, ctx).alpha == a
        assert normalize(1, a, ctx).alpha == ctx.inv(a)
    deltas = range(1, p) if p <= 31 else (2, 3, p - 1)
    for delta in deltas:
        for a in (1, 2, p - 2):
            for b in (1, 2):
                da, db = delta * a % p, delta * b % p
                if (a + b) % p == 0 or da == 0 or db == 0:
                    continue
                assert normalize(da, db, ctx).alpha == normalize(a, b, ctx).alpha
    return "unit rescaling invariance holds"


def check_deck_quotient_audit(ctx, cache):
    d = dec.decompose_coarse(ctx)
    assert d.audit.all_pass
    return f"{d.audit.subgroup_count} deck subgroups, all hypotheses pass"


def check_fine_decomposition(ctx, cache):
    d = dec.decompose_fine(ctx)
    assert d.audit.all_pass
    if d.gamma_refinement is not None:
        assert d.gamma_refinement.all_pass
        return "gamma factor refined; quotient-genus identities pass"
    return "no gamma root; fine = coarse"


def check_dimension_audit(ctx, cache):
    d = dec.decompose_fine(ctx)
    info = dec.dimension_audit(d)
    shape = dec.match_group_algebra_shape(d)
    return f"sum mult*dim = {info['total_dimension']}, shape N = {shape['N']}"


def check_monomial_relations(ctx, cache):
    p = ctx.p
    jmap = mono.build_J(ctx)
    assert mono.verify_curve_automorphism(jmap)
    assert mono.compose(jmap, jmap) == mono.identity_map(p, 1)
    t1 = mono.build_T(ctx, gamma=1)
    assert mono.map_power(t1, p) == mono.identity_map(p, 1)
    block = {
        "J": jmap.render(),
        "relations": {"J^2 = id": True, "J preserves the curve": True, "T^p = id": True},
    }
    cache["monomial"] = block
    if not ctx.has_gamma:
        block["T"] = t1.render()
        return "J and T certified on the hyperelliptic curve; no gamma root"
    g = ctx.gamma
    parity = mono.epsilon_parity_report(ctx)
    assert parity["rule_matches"]
    assert mono.verify_relation([("R", 3)], [], ctx)
    assert mono.verify_relation([("R", 1), ("T", 1)], [("T", g * g), ("R", 1)], ctx)
    for l in range(p):
        assert mono.verify_relation(
            [("T", -l), ("R", 1), ("T", l)],
            [("T", l * (g * g - 1)), ("R", 1)],
            ctx,
        )
    tg = mono.build_T(ctx)
    assert mono.map_power(tg, p) == mono.identity_map(p, g)
    block["T"] = tg.render()
    block["R"] = mono.build_R(ctx).render()
    block["epsilon"] = parity
    block["relations"].update(
        {
            "R^3 = id": True,
            "R T = T^(gamma^2) R": True,
            f"T^(-l) R T^l = T^(l (gamma^2 - 1)) R for l = 0..{p - 1}": True,
            "R preserves the curve": True,
        }
    )
    return f"R^3, R T = T^(g^2) R, conjugation sweep (l = 0..{p - 1}), epsilon rule"


def check_generating_triple(ctx, cache):
    triple = gen.find_generating_triple(ctx, limit=ctx.p)
    evidence = gen.validate_triple(triple, ctx)
    cache["triple"] = triple
    return f"orders {tuple(evidence['orders'])}, fix(a1) = {evidence['fix_a1']}"


def check_dual_oracle_genus(ctx, cache):
    p = ctx.p
    triple = cache["triple"]
    fix = gen.fermat_full_fix_table(ctx, triple)
    g_top = gen.fermat_genus(p)
    subgroups = grp.all_cyclic_subgroups(grp.FLAVOR_FERMAT, ctx)
    subgroups.append(grp.fermat_H(p))
    hj = [grp.fermat_Hj(p, j) for j in range(1, p - 1)]
    subgroups.extend(hj)
    seen = set()
    joins = []
    for i in range(len(hj)):
        for j in range(i + 1, len(hj)):
            joined = grp.joined_subgroup(hj[i], hj[j])
            if joined.elements not in seen:
                seen.add(joined.elements)
                joins.append(joined)
    subgroups.extend(joins)
    checked = 0
    for k in subgroups:
        assert gen.rh_genus(g_top, k, fix) == gen.coset_genus(k, triple), f"oracles disagree on {k!r}"
        checked += 1
    cache["full_fix"] = fix
    return f"{checked} subgroups, both oracles agree"


def check_fix_table_consistency(ctx, cache):
    p = ctx.p
    triple = cache["triple"]
    fix = cache.get("full_fix") or gen.fermat_full_fix_table(ctx, triple)
    axis = gen.fermat_axis_fix_table(ctx)
    for h in grp.fermat_H(p):
        if h.is_identity:
            continue
        assert fix.count(h) == axis.count(h)
    bound = 2 + 2 * gen.fermat_genus(p)
    classes = grp.conjugacy_classes(grp.FLAVOR_FERMAT, ctx)
    for cls in classes:
        rep = cls[0]
        if rep.is_identity:
            continue
        c = fix.count(rep)
        assert 0 <= c <= bound
        assert all(fix.count(g) == c for g in cls[1: min(len(cls), 4)])
    return "axis table matches, Lefschetz bound holds, class-constant"


def check_certificates(ctx, cache):
    p = ctx.p
    triple = cache["triple"]
    data = cert.ClassData(grp.FLAVOR_FERMAT, ctx)
    rat = cert.chi_rat(ctx, triple, data)
    triv = cert.chi_trivial(data)
    assert rat.at_identity == (p - 1) * (p - 2)
    assert rat(grp.fermat_a1(p)) == 2 - p
    assert cert.inner_product(triv, rat) == 0
    assert cert.inner_product(triv, triv) == 1
    for j in range(1, p - 1):
        chi = cert.induced_perm_character(grp.fermat_Hj(p, j), data)
        value = cert.inner_product(chi, rat)
        assert value == p - 1 and value.denominator == 1
        assert cert.inner_product_by_classes(chi, rat) == value
    norm = cert.inner_product(rat, rat)
    assert norm.denominator == 1 and norm > 0
    cache["certificates"] = {
        "pairing_trivial_vs_homology": 0,
        "pairing_deck_vs_homology": p - 1,
        "homology_self_pairing": int(norm),
        "chi_homology_at_scaling_generator": 2 - p,
        "conjugacy_class_count": len(data.classes),
    }
    return f"<triv,hom> = 0, <G/H_j,hom> = {p - 1} for all j, <hom,hom> = {norm}"


BASIC_CHECKS = [
    ("orbit-partition-laws", check_orbit_partition_laws),
    ("s3-relations", check_s3_relations),
    ("moebius-transport", check_moebius_transport),
    ("curve-normalization", check_normalization),
    ("deck-quotient-audit", check_deck_quotient_audit),
    ("fine-decomposition", check_fine_decomposition),
    ("dimension-audit", check_dimension_audit),
    ("monomial-relations", check_monomial_relations),
]

FULL_CHECKS = [
    ("generating-triple", check_generating_triple),
    ("dual-oracle-genus", check_dual_oracle_genus),
    ("fix-table-consistency", check_fix_table_consistency),
    ("certificates", check_certificates),
]


# -- commands -------------------------------------------------------------------


def _emit(report: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(rep.serialize(report))
    else:
        print(text)


def cmd_orbits(args) -> int:
    ctx = make_context(args.p)
    report = rep.orbits_report(ctx)
    _emit(report, rep.render_orbits_text(report), args.format)
    return 0


def cmd_decompose(args) -> int:
    ctx = make_context(args.p)
    report = rep.decompose_report(ctx, level=args.level)
    _emit(report, rep.render_decompose_text(report), args.format)
    return 0


def cmd_verify(args) -> int:
    ctx = make_context(args.p)
    checks = list(BASIC_CHECKS)
    if args.depth == "full":
        if ctx.p > args.full_cap:
            print(
                f"error: depth=full is capped at p <= {args.full_cap}"
                f" (override with --full-cap)",
                file=sys.stderr,
            )
            return 2
        checks += FULL_CHECKS
    cache: dict = {}
    results = []
    failed = None
    for name, fn in checks:
        try:
            detail = fn(ctx, cache)
            results.append({"name": name, "status": "PASS", "detail": detail})
            if args.format == "text":
                print(f"PASS {name}: {detail}")
        except (AssertionError, FermatJacError) as exc:
            results.append({"name": name, "status": "FAIL", "detail": str(exc)})
            if args.format == "text":
                print(f"FAIL {name}: {exc}")
            failed = name
            break
    report = {
        "schema_version": rep.SCHEMA_VERSION,
        "command": "verify",
        "p": ctx.p,
        "depth": args.depth,
        "checks": results,
        "all_pass": failed is None,
    }
    if "monomial" in cache:
        report["monomial_maps"] = cache["monomial"]
    if "certificates" in cache:
        report["certificates"] = cache["certificates"]
    if "triple" in cache:
        report["provenance"] = {"triple": cache["triple"].as_dict()}
    if args.format == "json":
        sys.stdout.write(rep.serialize(report))
    elif failed is None:
        print(f"all {len(results)} checks passed (p={ctx.p}, depth={args.depth})")
    if failed is not None:
        print(f"verification failed at check: {failed}", file=sys.stderr)
        return 4
    return 0


def _sweep_one(p: int) -> dict:
    ctx = make_context(p)
    row = {"p": p, "residue_mod_3": ctx.residue_class_mod_3}
    try:
        part = orbit_partition(ctx)
        check_orbit_partition_laws(ctx, {})
        coarse = dec.decompose_coarse(ctx)
        fine = dec.decompose_fine(ctx, coarse)
        dec.dimension_audit(fine)
        dec.match_group_algebra_shape(fine)
        row.update(
            {
                "orbits": len(part.orbits),
                "coarse": coarse.render(),
                "fine": fine.render(),
                "status": "PASS",
            }
        )
    except (AssertionError, FermatJacError) as exc:
        row.update({"status": "FAIL", "detail": str(exc)})
    return row


def cmd_sweep(args) -> int:
    lo, hi = args.from_, args.to
    if lo < 5 or hi < lo:
        print(f"error: bad sweep range [{lo}, {hi}]", file=sys.stderr)
        return 2
    if hi > 100_000:
        print(f"error: sweep bound {hi} is above the supported range", file=sys.stderr)
        return 2
    primes = [p for p in range(lo, hi + 1) if is_prime(p)]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_sweep_one, primes))
    else:
        rows = [_sweep_one(p) for p in primes]
    passed = sum(1 for r in rows if r["status"] == "PASS")
    report = {
        "schema_version": rep.SCHEMA_VERSION,
        "command": "sweep",
        "from": lo,
        "to": hi,
        "rows": rows,
        "pass_count": passed,
        "total": len(rows),
    }
    if args.format == "json":
        sys.stdout.write(rep.serialize(report))
    else:
        for r in rows:
            if r["status"] == "PASS":
                print(
                    f"p={r['p']:>4} mod3={r['residue_mod_3']} orbits={r['orbits']:>3} "
                    f"{r['status']}  {r['fine']}"
                )
            else:
                print(f"p={r['p']:>4} FAIL  {r.get('detail', '')}")
        print(f"swept {len(rows)} primes: {passed} PASS, {len(rows) - passed} FAIL")
    return 0 if passed == len(rows) else 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fermatjac",
        description=(
            "Exact verification of the isogeny decomposition of Fermat-curve "
            "Jacobians into Jacobians of cyclic p-gonal curves."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_orbits = sub.add_parser("orbits", help="orbit census of X_p")
    p_orbits.add_argument("--p", type=int, required=True, help="prime >= 5")
    p_orbits.add_argument("--format", choices=("text", "json"), default="text")
    p_orbits.set_defaults(fn=cmd_orbits)

    p_dec = sub.add_parser("decompose", help="emit the verified decomposition")
    p_dec.add_argument("--p", type=int, required=True, help="prime >= 5")
    p_dec.add_argument("--level", choices=("coarse", "fine", "both"), default="both")
    p_dec.add_argument("--format", choices=("text", "json"), default="text")
    p_dec.set_defaults(fn=cmd_decompose)

    p_ver = sub.add_parser("verify", help="run the self-verification suite")
    p_ver.add_argument("--p", type=int, required=True, help="prime >= 5")
    p_ver.add_argument("--depth", choices=("basic", "full"), default="basic")
    p_ver.add_argument(
        "--full-cap",
        type=int,
        default=FULL_DEPTH_DEFAULT_CAP,
        help="largest p allowed at depth=full (full-group enumeration)",
    )
    p_ver.add_argument("--format", choices=("text", "json"), default="text")
    p_ver.set_defaults(fn=cmd_verify)

    p_sweep = sub.add_parser("sweep", help="per-prime summaries over a range")
    p_sweep.add_argument("--from", dest="from_", type=int, required=True)
    p_sweep.add_argument("--to", type=int, required=True)
    p_sweep.add_argument("--jobs", type=int, default=1)
    p_sweep.add_argument("--format", choices=("text", "json"), default="text")
    p_sweep.set_defaults(fn=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except AuditFailError as exc:
        print(f"audit failure: {exc}", file=sys.stderr)
        return 3
    except (NotPrimeError, TooSmallError, TooLargeError, OutOfRangeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FermatJacError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
