"""JSON field files and analysis reports.

Arbitrary-size integers (coefficients, discriminants, indices, F(p)) are
written as decimal strings; readers accept either strings or JSON numbers.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .criteria import AnalysisReport
from .errors import FieldFileError, InvalidFieldData
from .number_field import Order, order_from_power_basis
from .periods import period_basis_in_power_basis
from .supplementary import SupplementaryReport, Verification

SCHEMA_VERSION = 1

__all__ = [
    "FieldFile",
    "SCHEMA_VERSION",
    "bundled_field_names",
    "load_bundled",
    "load_field_file",
    "report_from_dict",
    "report_to_dict",
    "supplementary_from_dict",
    "supplementary_to_dict",
]


def _int(value, where):
    if isinstance(value, bool):
        raise FieldFileError(f"{where}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip())
        except ValueError:
            pass
    raise FieldFileError(f"{where}: expected an integer, got {value!r}")


def _s(x):
    return str(x)


@dataclass
class FieldFile:
    label: str
    degree: int
    min_poly: list[int]
    basis_numerators: list[list[int]]
    denominator: int
    disc: int | None = None

    @classmethod
    def from_dict(cls, data) -> "FieldFile":
        if not isinstance(data, dict):
            raise FieldFileError("top level: expected a JSON object")
        for key in ("degree", "min_poly", "basis_numerators", "denominator"):
            if key not in data:
                raise FieldFileError(f"missing field {key!r}")
        version = data.get("schema_version", SCHEMA_VERSION)
        if _int(version, "schema_version") != SCHEMA_VERSION:
            raise FieldFileError(f"schema_version: unsupported version {version!r}")
        n = _int(data["degree"], "degree")
        if n < 1:
            raise FieldFileError("degree: must be >= 1")
        mp = data["min_poly"]
        if not isinstance(mp, list) or len(mp) != n + 1:
            raise FieldFileError(f"min_poly: expected {n + 1} coefficients c_0..c_{n}")
        min_poly = [_int(c, f"min_poly[{i}]") for i, c in enumerate(mp)]
        if min_poly[-1] != 1:
            raise FieldFileError("min_poly: leading coefficient must be 1")
        rows = data["basis_numerators"]
        if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
            raise FieldFileError(f"basis_numerators: expected a {n} x {n} matrix")
        basis = [[_int(x, f"basis_numerators[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)]
        den = _int(data["denominator"], "denominator")
        if den <= 0:
            raise FieldFileError("denominator: must be positive")
        if basis[0] != [den] + [0] * (n - 1):
            raise FieldFileError("basis_numerators[0]: first basis element must be 1 (row (denominator, 0, ..., 0))")
        disc = data.get("disc")
        return cls(
            label=str(data.get("label", "")),
            degree=n,
            min_poly=min_poly,
            basis_numerators=basis,
            denominator=den,
            disc=None if disc is None else _int(disc, "disc"),
        )

    def to_dict(self):
        out = {
            "schema_version": SCHEMA_VERSION,
            "label": self.label,
            "degree": self.degree,
            "min_poly": [_s(c) for c in self.min_poly],
            "basis_numerators": [[_s(x) for x in r] for r in self.basis_numerators],
            "denominator": _s(self.denominator),
        }
        if self.disc is not None:
            out["disc"] = _s(self.disc)
        return out

    def to_order(self) -> Order:
        O = order_from_power_basis(self.min_poly, self.basis_numerators, self.denominator, self.label)
        if self.disc is not None and self.disc != O.disc:
            raise FieldFileError(f"disc: file says {self.disc}, computed {O.disc}")
        return O

    @classmethod
    def from_order(cls, O: Order) -> "FieldFile":
        """Power-basis presentation of an order (generated by its second basis element)."""
        min_poly, nums, den = period_basis_in_power_basis(O)
        return cls(O.label, O.n, min_poly, nums, den, O.disc)

    def dump(self, path):
        Path(path).write_text(json.dumps(self.to_dict(), indent=2) + "\n")


def load_field_file(path) -> FieldFile:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InvalidFieldData(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FieldFileError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    try:
        return FieldFile.from_dict(data)
    except FieldFileError as exc:
        raise FieldFileError(f"{path}: {exc}") from exc


def _data_dir():
    return resources.files("indexdiv") / "data"


def bundled_field_names() -> list[str]:
    return sorted(p.name[:-5] for p in _data_dir().iterdir() if p.name.endswith(".json"))


def load_bundled(name: str) -> FieldFile:
    if name.endswith(".json"):
        name = name[:-5]
    with resources.as_file(_data_dir() / f"{name}.json") as path:
        return load_field_file(path)


def _verification_to_dict(v: Verification | None):
    if v is None:
        return None
    return {
        "status": v.status,
        "residue_degree": v.residue_degree,
        "point": v.point,
        "modulus": v.modulus,
        "value": v.value,
    }


def _verification_from_dict(d):
    if d is None:
        return None
    return Verification(d["status"], d["residue_degree"], d.get("point"), d.get("modulus"), d.get("value"))


def supplementary_to_dict(s: SupplementaryReport):
    return {
        "membership_ks": list(s.membership_ks),
        "minimal_ks": list(s.minimal_ks),
        "F_p": _s(s.F_p),
        "nu": s.nu,
        "mu": s.mu,
        "lambda": s.lam,
        "description": s.description,
        "defining_poly": None if s.defining_poly is None else [_s(c) for c in s.defining_poly],
        "verification": _verification_to_dict(s.verification),
    }


def supplementary_from_dict(d) -> SupplementaryReport:
    return SupplementaryReport(
        membership_ks=list(d["membership_ks"]),
        minimal_ks=list(d["minimal_ks"]),
        F_p=int(d["F_p"]),
        nu=d["nu"],
        mu=d["mu"],
        lam=d["lambda"],
        description=d["description"],
        defining_poly=None if d["defining_poly"] is None else [int(c) for c in d["defining_poly"]],
        verification=_verification_from_dict(d.get("verification")),
    )


def report_to_dict(r: AnalysisReport):
    return {
        "schema_version": SCHEMA_VERSION,
        "field": {"label": r.label, "degree": r.degree, "disc": _s(r.disc)},
        "p": r.p,
        "lambda_profile": list(r.lambda_profile),
        "gbar_table": [_s(g) for g in r.gbar_table],
        "verdict_counts": r.verdict_counts,
        "verdict_form": r.verdict_form,
        "common_index_divisor": r.verdict,
        "failing_degrees": list(r.failing_degrees),
        "witness": None
        if r.witness is None
        else {"coords": [_s(c) for c in r.witness[0]], "index": _s(r.witness[1])},
        "factor_shape_of_witness": None
        if r.factor_shape_of_witness is None
        else [[d, e] for d, e in r.factor_shape_of_witness],
        "supplementary": None if r.supplementary is None else supplementary_to_dict(r.supplementary),
    }


def report_from_dict(d) -> AnalysisReport:
    if d.get("schema_version") != SCHEMA_VERSION:
        raise FieldFileError(f"unsupported report schema_version {d.get('schema_version')!r}")
    w = d["witness"]
    shape = d["factor_shape_of_witness"]
    return AnalysisReport(
        label=d["field"]["label"],
        p=d["p"],
        degree=d["field"]["degree"],
        disc=int(d["field"]["disc"]),
        lambda_profile=tuple(d["lambda_profile"]),
        gbar_table=tuple(int(g) for g in d["gbar_table"]),
        verdict_counts=d["verdict_counts"],
        verdict_form=d["verdict_form"],
        failing_degrees=list(d["failing_degrees"]),
        witness=None if w is None else (tuple(int(c) for c in w["coords"]), int(w["index"])),
        factor_shape_of_witness=None if shape is None else [tuple(x) for x in shape],
        supplementary=None if d["supplementary"] is None else supplementary_from_dict(d["supplementary"]),
    )
