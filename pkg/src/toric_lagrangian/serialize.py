"""Plain-dict views of the result types, for JSON output.

Exact values are written as rational strings; field names are stable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .construction import ConstructionReport, SystemCheck
from .delzant import DelzantVerdict
from .documents import format_rational
from .gale import Polyhedron
from .quadrics import ValidationVerdict
from .sampler import BatchSummary


def _q(v):
    if v is None:
        return None
    if isinstance(v, Fraction):
        return format_rational(v)
    return str(v)


def _vec(v):
    return None if v is None else [_q(x) for x in v]


def validation_to_dict(v: ValidationVerdict) -> dict:
    c = v.cond_c
    cond_c = {"passed": c.passed, "rank": c.rank}
    if c.lattice is not None:
        L = c.lattice.lattice_L
        cond_c.update(
            lattice_basis=[_vec(r) for r in L.rational_basis()],
            lattice_covolume=_q(L.covolume),
            dual_basis=[_vec(r) for r in c.lattice.dual_basis],
            torus_rank=c.lattice.torus_rank,
            two_group_order=c.lattice.two_group_order,
        )
    return {
        "cond_a": {"passed": v.cond_a.passed, "witness": _vec(v.cond_a.witness)},
        "cond_b": {"passed": v.cond_b.passed, "violating_subset": None if v.cond_b.subset is None else list(v.cond_b.subset)},
        "cond_c": cond_c,
        "smooth_dim_Z": v.smooth_dim_Z,
    }


def polyhedron_to_dict(P: Polyhedron) -> dict:
    return {
        "n": P.n,
        "a_vectors": [list(a) for a in P.gale.a_vectors],
        "b_offsets": _vec(P.gale.b_offsets),
        "vertices": [{"point": _vec(v.point), "active_set": list(v.active_set)} for v in P.vertices],
        "is_simple": P.is_simple,
        "is_bounded": P.is_bounded,
    }


def delzant_to_dict(d: DelzantVerdict) -> dict:
    return {
        "is_delzant": d.is_delzant,
        "lambda_covolume": d.lambda_covolume,
        "failures": [
            {
                "vertex": _vec(f.point),
                "active_set": list(f.active_set),
                "normals": [list(a) for a in f.normals],
                "kind": f.kind,
                "abs_det": _q(f.abs_det),
                "ratio": _q(f.ratio),
            }
            for f in d.failures
        ],
    }


def check_to_dict(chk: SystemCheck) -> dict:
    return {
        "validation": validation_to_dict(chk.validation),
        "polyhedron": None if chk.polyhedron is None else polyhedron_to_dict(chk.polyhedron),
        "delzant": None if chk.delzant is None else delzant_to_dict(chk.delzant),
    }


def report_to_dict(rep: ConstructionReport) -> dict:
    return {
        "m": rep.m,
        "n": rep.n,
        "ell": rep.ell,
        "valid": rep.valid,
        "special_case": rep.special_case,
        "failures": [{"system": s, "condition": c} for s, c in rep.failures],
        "verdicts": {role: check_to_dict(chk) for role, chk in rep.verdicts.items()},
        "dims": rep.dims,
        "torus_data": rep.torus_data,
    }


def summary_to_dict(s: BatchSummary) -> dict:
    return {
        "count": s.count,
        "passed": s.passed,
        "pass_fraction": s.pass_fraction,
        "worst_pairing": s.worst_pairing,
        "worst_rank_ratio": s.worst_rank_ratio,
    }


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
