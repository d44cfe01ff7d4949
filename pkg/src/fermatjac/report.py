"""Report assembly and rendering.

Reports are plain dicts with a pinned schema version, serialized with
sorted keys so the JSON bytes are stable for fixed inputs; golden-file
tests rely on that.  Text rendering puts each decomposition product on
its own labelled line in the factor grammar

    JF(<p>) ~ JC(<alpha>)^<mult> x JE(<gamma>)^<mult> x ...
"""

from __future__ import annotations

import json

from .curves import CurveFamily
from .decompose import (
    DecompositionLevel,
    IsogenyDecomposition,
    decompose_coarse,
    decompose_fine,
    dimension_audit,
    match_group_algebra_shape,
)
from .orbits import OrbitPartition, PrimeContext, orbit_partition

SCHEMA_VERSION = "1"


def serialize(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def parse(text: str) -> dict:
    return json.loads(text)


def _orbit_entries(partition: OrbitPartition) -> list[dict]:
    return [
        {
            "representative": o.representative,
            "kind": o.kind.value,
            "size": o.size,
            "elements": list(o.elements),
        }
        for o in partition.orbits
    ]


def _factor_entry(f) -> dict:
    entry = {
        "symbol": f.symbol(),
        "curve": f.curve.describe(),
        "equation": f.curve.equation(),
        "family": f.curve.family.value,
        "alpha": f.curve.alpha,
        "multiplicity": f.multiplicity,
        "dimension": f.dimension,
    }
    if f.curve.family is CurveFamily.P_GONAL and f.curve.alpha == 1:
        # descriptive metadata only; never a computational object
        entry["hyperelliptic_model"] = f"w^2 = u^{f.curve.context.p} - 1"
    return entry


def _decomposition_entry(d: IsogenyDecomposition) -> dict:
    entry = {
        "level": d.level.value,
        "product": d.render(),
        "factors": [_factor_entry(f) for f in d.factors],
        "total_dimension": d.total_dimension,
        "audit": d.audit.summary(),
        "dimension_audit": dimension_audit(d),
    }
    if d.gamma_refinement is not None:
        entry["gamma_refinement"] = d.gamma_refinement.summary()
    if d.level is DecompositionLevel.FINE:
        entry["group_algebra_shape"] = match_group_algebra_shape(d)
    return entry


def base_report(ctx: PrimeContext) -> dict:
    partition = orbit_partition(ctx)
    gamma = None
    if ctx.has_gamma:
        gamma = {"root": ctx.gamma_pair[0], "inverse_root": ctx.gamma_pair[1]}
    return {
        "schema_version": SCHEMA_VERSION,
        "p": ctx.p,
        "residue_mod_3": ctx.residue_class_mod_3,
        "gamma": gamma,
        "fermat_genus": (ctx.p - 1) * (ctx.p - 2) // 2,
        "orbits": _orbit_entries(partition),
        "orbit_counts": {
            "special_one": sum(1 for o in partition.orbits if o.kind.value == "special_one"),
            "gamma": sum(1 for o in partition.orbits if o.kind.value == "gamma"),
            "generic": sum(1 for o in partition.orbits if o.kind.value == "generic"),
        },
    }


def orbits_report(ctx: PrimeContext) -> dict:
    report = base_report(ctx)
    report["command"] = "orbits"
    return report


def decompose_report(ctx: PrimeContext, level: str = "both") -> dict:
    report = base_report(ctx)
    report["command"] = "decompose"
    decompositions = {}
    coarse = decompose_coarse(ctx)
    if level in ("coarse", "both"):
        decompositions["coarse"] = _decomposition_entry(coarse)
    if level in ("fine", "both"):
        decompositions["fine"] = _decomposition_entry(decompose_fine(ctx, coarse))
    report["decompositions"] = decompositions
    return report


def _orbit_line(o: dict) -> str:
    elements = ",".join(str(e) for e in o["elements"])
    return f"{{{elements}}} size={o['size']} {o['kind']}"


def render_orbits_text(report: dict) -> str:
    lines = [f"p = {report['p']} ({report['residue_mod_3']} mod 3)"]
    if report["gamma"]:
        lines.append(
            f"gamma pair: ({report['gamma']['root']}, {report['gamma']['inverse_root']})"
        )
    else:
        lines.append("gamma pair: none")
    lines.append(f"orbit census: {len(report['orbits'])} orbits on X_p = {{1..{report['p'] - 2}}}")
    for o in report["orbits"]:
        lines.append("  " + _orbit_line(o))
    counts = report["orbit_counts"]
    lines.append(
        f"counts: special_one={counts['special_one']} gamma={counts['gamma']} generic={counts['generic']}"
    )
    return "\n".join(lines)


def render_decompose_text(report: dict) -> str:
    lines = [f"p = {report['p']} ({report['residue_mod_3']} mod 3)"]
    if report["gamma"]:
        lines.append(
            f"gamma pair: ({report['gamma']['root']}, {report['gamma']['inverse_root']})"
        )
    else:
        lines.append("gamma pair: none")
    orbit_bits = "; ".join(_orbit_line(o) for o in report["orbits"])
    lines.append(f"orbits ({len(report['orbits'])}): {orbit_bits}")
    for level in ("coarse", "fine"):
        if level in report["decompositions"]:
            lines.append(f"{level}: {report['decompositions'][level]['product']}")
    for level in ("coarse", "fine"):
        if level in report["decompositions"]:
            entry = report["decompositions"][level]
            verdict = "PASS" if entry["audit"]["all_pass"] else "FAIL"
            if "gamma_refinement" in entry and not entry["gamma_refinement"]["all_pass"]:
                verdict = "FAIL"
            lines.append(f"audit {level}: {verdict}")
    return "\n".join(lines)
