"""JSON input documents and the built-in example catalog.

A document looks like::

    {"m": 3,
     "gamma": {"rows": [["1", "1", "1"]], "rhs": ["1"]},
     "delta": {"rows": [["1", "1", "0"]], "rhs": ["1/2"]}}

Rationals are strings (``"p"``, ``"-p"`` or ``"p/q"`` with ``q > 0``); plain
JSON integers are also accepted. A missing system means the empty system.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .quadrics import QuadricSystem, stack

__all__ = [
    "DocumentError",
    "InputDocument",
    "parse_rational",
    "format_rational",
    "parse_document",
    "load_document",
    "EXAMPLE_NAMES",
    "example_document",
]

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


class DocumentError(ValueError):
    """Malformed input document."""


def parse_rational(value) -> Fraction:
    if isinstance(value, bool):
        raise DocumentError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str) or not _RATIONAL.match(value.strip()):
        raise DocumentError(f"not a rational string: {value!r}")
    text = value.strip()
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise DocumentError(f"zero denominator in {value!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class InputDocument:
    m: int
    gamma: QuadricSystem | None = None
    delta: QuadricSystem | None = None

    @property
    def gamma_system(self) -> QuadricSystem:
        return self.gamma if self.gamma is not None else QuadricSystem.empty(self.m)

    @property
    def delta_system(self) -> QuadricSystem:
        return self.delta if self.delta is not None else QuadricSystem.empty(self.m)

    def stacked_system(self) -> QuadricSystem:
        return stack(self.gamma_system, self.delta_system)

    def system(self, which: str) -> QuadricSystem:
        if which == "gamma":
            return self.gamma_system
        if which == "delta":
            return self.delta_system
        if which == "stacked":
            return self.stacked_system()
        raise ValueError(f"unknown system {which!r}")

    def to_dict(self) -> dict:
        out: dict = {"m": self.m}
        for name, sys in (("gamma", self.gamma), ("delta", self.delta)):
            if sys is not None:
                out[name] = {
                    "rows": [[format_rational(v) for v in r] for r in sys.coeffs.rows],
                    "rhs": [format_rational(v) for v in sys.rhs],
                }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _parse_system(raw, m: int, name: str) -> QuadricSystem:
    if not isinstance(raw, dict) or set(raw) - {"rows", "rhs"}:
        raise DocumentError(f"{name} must be an object with keys 'rows' and 'rhs'")
    rows = raw.get("rows", [])
    rhs = raw.get("rhs", [])
    if not isinstance(rows, list) or not isinstance(rhs, list):
        raise DocumentError(f"{name}.rows and {name}.rhs must be lists")
    if len(rows) != len(rhs):
        raise DocumentError(f"{name} has {len(rows)} rows but {len(rhs)} right-hand sides")
    if len(rows) > m:
        raise DocumentError(f"{name} has more quadrics than m = {m}")
    parsed = []
    for r in rows:
        if not isinstance(r, list) or len(r) != m:
            raise DocumentError(f"every row of {name} must have length m = {m}")
        parsed.append([parse_rational(v) for v in r])
    return QuadricSystem.from_rows(parsed, [parse_rational(v) for v in rhs], m)


def parse_document(data) -> InputDocument:
    """Build an :class:`InputDocument` from a JSON string or decoded object."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object")
    unknown = set(data) - {"m", "gamma", "delta"}
    if unknown:
        raise DocumentError(f"unknown keys: {sorted(unknown)}")
    m = data.get("m")
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise DocumentError("m must be a positive integer")
    gamma = _parse_system(data["gamma"], m, "gamma") if data.get("gamma") is not None else None
    delta = _parse_system(data["delta"], m, "delta") if data.get("delta") is not None else None
    return InputDocument(m, gamma, delta)


def load_document(path) -> InputDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise DocumentError(str(exc)) from exc
    return parse_document(text)


EXAMPLE_NAMES = ("cm", "real", "projective")


def example_document(name: str, m: int) -> InputDocument:
    """Canonical document for one of the three special families.

    ``cm``: no gamma, delta the unit sphere (V = C^m).
    ``real``: gamma the unit sphere, no delta (N = real points of CP^{m-1}).
    ``projective``: gamma the unit sphere (V = CP^{m-1}) and delta
    ``|z_1|^2 + ... + |z_{m-1}|^2 = 1/2``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    ones = [1] * m
    sphere = QuadricSystem.from_rows([ones], [1], m)
    if name == "cm":
        return InputDocument(m, None, sphere)
    if name == "real":
        return InputDocument(m, sphere, None)
    if name == "projective":
        if m < 2:
            raise ValueError("the projective example needs m >= 2")
        return InputDocument(m, sphere, QuadricSystem.from_rows([[1] * (m - 1) + [0]], [Fraction(1, 2)], m))
    raise ValueError(f"unknown example {name!r}; choose from {', '.join(EXAMPLE_NAMES)}")
