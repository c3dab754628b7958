"""Two-system construction: a toric manifold ``V`` and a Lagrangian ``N`` in it.

``gamma`` (``m - n`` quadrics) produces ``V = Z_gamma / T_gamma`` by
symplectic reduction; ``delta`` (``m - ell`` quadrics) cuts the real locus of
``V`` down to ``S`` and spreads it by ``T_delta`` to ``N``. The construction is
admissible when gamma, delta and their stack satisfy conditions (a)-(c) and
all three associated polyhedra are Delzant.

Dimensions (real)::

    Z_gamma  m + n          V      2n          N      n
    S        n + ell - m    V_hat  2(n+ell-m)  N_hat  n + ell - m
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .delzant import DelzantVerdict, check_delzant
from .gale import Polyhedron, build_polyhedron, gale_dual
from .quadrics import QuadricSystem, ValidationVerdict, stack, validate

__all__ = [
    "AMBIENT_CM",
    "REAL_POINTS",
    "PROJECTIVE",
    "GENERAL",
    "SystemCheck",
    "ConstructionReport",
    "build_construction",
    "classify",
    "report_text",
]

AMBIENT_CM = "ambient_Cm"
REAL_POINTS = "real_points"
PROJECTIVE = "projective"
GENERAL = "general"

ROLES = ("gamma", "delta", "stacked")


@dataclass(frozen=True)
class SystemCheck:
    system: QuadricSystem
    validation: ValidationVerdict | None
    delzant: DelzantVerdict | None
    polyhedron: Polyhedron | None = None

    @property
    def passed(self) -> bool:
        return bool(self.validation) and bool(self.delzant)


@dataclass(frozen=True)
class ConstructionReport:
    m: int
    n: int
    ell: int
    verdicts: dict[str, SystemCheck]
    dims: dict[str, int] | None
    torus_data: dict[str, int]
    special_case: str
    failures: tuple[tuple[str, str], ...] = field(default=())

    @property
    def valid(self) -> bool:
        return not self.failures


def classify(gamma: QuadricSystem, delta: QuadricSystem) -> str:
    """Name the special family a pair belongs to.

    Roles follow the construction: an empty gamma leaves ``V = C^m``, an empty
    delta makes ``N`` the real points of ``V``, and a single gamma quadric
    ``t(|z_1|^2 + ... + |z_m|^2) = c`` with ``t > 0`` gives ``V = CP^{m-1}``.
    """
    if gamma.num_quadrics == 0:
        return AMBIENT_CM
    if delta.num_quadrics == 0:
        return REAL_POINTS
    if gamma.num_quadrics == 1:
        row = gamma.coeffs.row(0)
        if row[0] > 0 and all(v == row[0] for v in row):
            return PROJECTIVE
    return GENERAL


def _check(sys: QuadricSystem, role: str, failures: list) -> SystemCheck:
    verdict = validate(sys)
    for cond in verdict.failed_conditions():
        failures.append((role, cond))
    if not verdict:
        return SystemCheck(sys, verdict, None)
    P = build_polyhedron(gale_dual(sys))
    dz = check_delzant(P)
    if not dz:
        failures.append((role, "delzant"))
    return SystemCheck(sys, verdict, dz, P)


def build_construction(gamma: QuadricSystem, delta: QuadricSystem) -> ConstructionReport:
    """Validate a gamma/delta pair and compute every dimension of the construction.

    Failures are collected rather than raised; each is a ``(system,
    condition)`` pair with condition one of ``a``, ``b``, ``c``, ``delzant``
    or ``dim_S``. A negative ``dim S`` is reported before any polyhedral work.
    """
    if gamma.m != delta.m:
        raise ValueError(f"gamma lives in C^{gamma.m} but delta in C^{delta.m}")
    m = gamma.m
    n, ell = gamma.n, delta.n
    torus = {
        "T_gamma": m - n,
        "T_delta": m - ell,
        "D_gamma": 2 ** (m - n),
        "D_delta": 2 ** (m - ell),
    }
    special = classify(gamma, delta)
    failures: list[tuple[str, str]] = []
    if n + ell - m < 0:
        failures.append(("stacked", "dim_S"))
        return ConstructionReport(m, n, ell, {}, None, torus, special, tuple(failures))

    verdicts = {
        "gamma": _check(gamma, "gamma", failures),
        "delta": _check(delta, "delta", failures),
        "stacked": _check(stack(gamma, delta), "stacked", failures),
    }
    dims = None
    if not failures:
        s = n + ell - m
        dims = {"Z_gamma": m + n, "V": 2 * n, "S": s, "N": n, "V_hat": 2 * s, "N_hat": s}
    return ConstructionReport(m, n, ell, verdicts, dims, torus, special, tuple(failures))


_CASE_TEXT = {
    AMBIENT_CM: "V = C^{m} (gamma empty); N is a Lagrangian in complex space",
    REAL_POINTS: "N is the real locus of V (delta empty), totally geodesic",
    PROJECTIVE: "V = CP^{m1} (single gamma quadric with equal positive weights)",
    GENERAL: "general toric pair",
}


def _fmt_condition(role: str, cond: str) -> str:
    if cond == "dim_S":
        return f"{role}: dim S = n + ell - m is negative"
    if cond == "delzant":
        return f"{role}: associated polyhedron is not Delzant"
    return f"{role}: condition ({cond}) fails"


def report_text(rep: ConstructionReport) -> str:
    """Deterministic multi-line summary of a report."""
    lines = [f"m = {rep.m}, n = {rep.n}, ell = {rep.ell}"]
    lines.append("special case: " + rep.special_case + " -- " + _CASE_TEXT[rep.special_case].format(m=rep.m, m1=rep.m - 1))
    for role in ROLES:
        chk = rep.verdicts.get(role)
        if chk is None:
            lines.append(f"{role}: not checked")
            continue
        v = chk.validation
        flags = " ".join(f"({c})={'pass' if getattr(v, 'cond_' + c).passed else 'FAIL'}" for c in "abc")
        if chk.delzant is None:
            dz = "n/a"
        else:
            dz = "pass" if chk.delzant else f"FAIL ({len(chk.delzant.failures)} vertices)"
        lines.append(f"{role}: {flags} delzant={dz}")
    if rep.valid:
        d = rep.dims
        lines += [
            f"dim Z_gamma = m + n = {d['Z_gamma']}",
            f"dim V = 2n = {d['V']}",
            f"dim S = n + ell - m = {rep.n} + {rep.ell} - {rep.m} = {d['S']}",
            f"dim N = n = {d['N']}",
            f"dim V_hat = 2(n + ell - m) = {d['V_hat']}",
            f"dim N_hat = n + ell - m = {d['N_hat']}",
        ]
    lines.append(
        f"T_gamma rank m - n = {rep.torus_data['T_gamma']}, T_delta rank m - ell = {rep.torus_data['T_delta']}, "
        f"|D_gamma| = {rep.torus_data['D_gamma']}, |D_delta| = {rep.torus_data['D_delta']}"
    )
    if rep.valid:
        lines.append("verdict: VALID")
    else:
        lines.append("verdict: REJECTED")
        lines += ["  " + _fmt_condition(role, cond) for role, cond in rep.failures]
    return "\n".join(lines) + "\n"
