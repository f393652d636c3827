"""JSON algebra-spec files and verification reports.

Spec files carry a sparse triplet list of structure constants:

    {"dim": 4,
     "name": "exotic",
     "pairing_weight": 1,
     "constants": [{"j": 0, "k": 0, "l": 0, "re": 1, "im": 0}, ...]}

Indices are 0-based and must be unique per (j, k, l).  Reports serialize all
pipeline residuals plus the dual-scheme constants.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .algebra import StructureConstants


class SpecFileError(ValueError):
    """Malformed algebra-spec input, with a field diagnostic."""


def _require(cond, msg):
    if not cond:
        raise SpecFileError(msg)


def parse_spec(text: str) -> tuple[StructureConstants, float]:
    """Parse spec-file text into (constants, pairing_weight)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    _require(isinstance(doc, dict), "top level must be a JSON object")
    _require("dim" in doc, "missing field 'dim'")
    dim = doc["dim"]
    _require(isinstance(dim, int) and dim >= 1, f"'dim' must be a positive integer, got {dim!r}")
    entries = doc.get("constants", [])
    _require(isinstance(entries, list), "'constants' must be a list of triplets")
    weight = doc.get("pairing_weight", 1)
    _require(isinstance(weight, (int, float)) and weight > 0,
             f"'pairing_weight' must be a positive number, got {weight!r}")
    name = doc.get("name", "")
    _require(isinstance(name, str), "'name' must be a string")

    c = np.zeros((dim, dim, dim), dtype=complex)
    seen = set()
    for pos, ent in enumerate(entries):
        _require(isinstance(ent, dict), f"constants[{pos}] is not an object")
        for key in ("j", "k", "l"):
            _require(key in ent, f"constants[{pos}] is missing index '{key}'")
            idx = ent[key]
            _require(isinstance(idx, int) and 0 <= idx < dim,
                     f"constants[{pos}]: index {key}={idx!r} outside 0..{dim - 1}")
        j, k, l = ent["j"], ent["k"], ent["l"]
        _require((j, k, l) not in seen, f"constants[{pos}]: duplicate triplet ({j},{k},{l})")
        seen.add((j, k, l))
        re = ent.get("re", 0.0)
        im = ent.get("im", 0.0)
        _require(isinstance(re, (int, float)) and isinstance(im, (int, float)),
                 f"constants[{pos}]: re/im must be numbers")
        c[j, k, l] = complex(re, im)
    return StructureConstants(c, name=name), float(weight)


def serialize_spec(sc: StructureConstants, pairing_weight: float = 1.0,
                   zero_tol: float = 0.0) -> str:
    """Serialize constants to spec-file JSON (sparse triplets, 17 digits)."""
    triplets = []
    for j in range(sc.dim):
        for k in range(sc.dim):
            for l in range(sc.dim):
                v = sc.c[j, k, l]
                if abs(v) > zero_tol:
                    triplets.append({"j": j, "k": k, "l": l,
                                     "re": v.real, "im": v.imag})
    doc = {"dim": sc.dim, "constants": triplets}
    if sc.name:
        doc["name"] = sc.name
    if pairing_weight != 1.0:
        doc["pairing_weight"] = pairing_weight
    return json.dumps(doc, indent=2)


@dataclass
class VerificationReport:
    """All residuals of one realization run, JSON-serializable."""

    scheme: str
    associativity_residual: float
    quantizer_closure_residual: float
    duality_residual: float
    kernel_recovery_residual: float
    dual_constants: list = field(default_factory=list)
    warnings: list = field(default_factory=list)
    passed: bool = False
    tolerance: float = 1e-10

    def to_dict(self) -> dict:
        return {
            "scheme": self.scheme,
            "associativity_residual": self.associativity_residual,
            "quantizer_closure_residual": self.quantizer_closure_residual,
            "duality_residual": self.duality_residual,
            "kernel_recovery_residual": self.kernel_recovery_residual,
            "dual_constants": self.dual_constants,
            "warnings": self.warnings,
            "passed": self.passed,
            "tolerance": self.tolerance,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def constants_to_triplets(sc: StructureConstants, zero_tol: float = 1e-14) -> list:
    """Dense tensor to the sparse triplet list used in reports."""
    out = []
    for j in range(sc.dim):
        for k in range(sc.dim):
            for l in range(sc.dim):
                v = sc.c[j, k, l]
                if abs(v) > zero_tol:
                    out.append({"j": j, "k": k, "l": l, "re": v.real, "im": v.imag})
    return out


def build_report(result: dict, tolerance: float = 1e-10,
                 warnings_seen=()) -> VerificationReport:
    """Assemble a VerificationReport from realize_and_verify output."""
    residuals = (result["associativity"].max_residual,
                 result["closure_residual"],
                 result["duality_residual"],
                 result["kernel_recovery_residual"])
    return VerificationReport(
        scheme=result["scheme"].name,
        associativity_residual=float(residuals[0]),
        quantizer_closure_residual=float(residuals[1]),
        duality_residual=float(residuals[2]),
        kernel_recovery_residual=float(residuals[3]),
        dual_constants=constants_to_triplets(result["dual_constants"]),
        warnings=[str(w) for w in warnings_seen],
        passed=bool(max(residuals) <= tolerance),
        tolerance=tolerance,
    )
