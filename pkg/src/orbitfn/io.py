"""CSV and JSON readers/writers for samples, spectra, grids and point lists.

Sample files: ``s1,s2,s3,re,im`` rows in canonical grid order (the s columns
are informational; order and count are validated against the grid). Spectrum
files: ``t1,t2,t3,re,im,norm``. Point lists: ``x1,x2,x3`` in omegacheck
coordinates. Each format has a JSON twin with the same field names.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Sequence

import numpy as np

from .algebras import cartan
from .lattice import GridPoint, WeightSet, grid_points, lambda_set, validate_spec
from .transforms import SampledField, Spectrum, grid_values

__all__ = [
    "DataFileError",
    "write_samples_csv",
    "read_samples_csv",
    "write_samples_json",
    "read_samples_json",
    "write_spectrum_csv",
    "read_spectrum_csv",
    "write_spectrum_json",
    "read_spectrum_json",
    "write_grid_csv",
    "grid_as_dicts",
    "write_lambda_csv",
    "read_points",
    "write_values_csv",
]


class DataFileError(ValueError):
    """Malformed or inconsistent data file."""


def _require(cond: bool, msg: str):
    if not cond:
        raise DataFileError(msg)


# -- samples --------------------------------------------------------------------


def write_samples_csv(path, field: SampledField) -> None:
    grid = grid_points(field.algebra, field.spec, field.family)
    _require(
        len(field.values) == len(grid),
        f"value count {len(field.values)} does not match grid size {len(grid)}",
    )
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["s1", "s2", "s3", "re", "im"])
        for p, v in zip(grid, field.values):
            v = complex(v)
            w.writerow([*p.indices, repr(v.real), repr(v.imag)])


def read_samples_csv(path, algebra, spec, family) -> SampledField:
    alg = cartan(algebra)
    spec = validate_spec(alg, spec)
    grid = grid_points(alg, spec, family)
    rows = _read_csv(path, ["s1", "s2", "s3", "re", "im"])
    _require(
        len(rows) == len(grid),
        f"{path}: {len(rows)} rows, expected {len(grid)} grid samples",
    )
    values = np.empty(len(rows), dtype=complex)
    for k, (row, p) in enumerate(zip(rows, grid)):
        try:
            s = (int(row["s1"]), int(row["s2"]), int(row["s3"]))
            values[k] = complex(float(row["re"]), float(row["im"]))
        except ValueError as exc:
            raise DataFileError(f"{path}: bad row {k + 2}: {exc}") from exc
        _require(
            s == p.indices,
            f"{path}: row {k + 2} has indices {s}, expected {p.indices} "
            "(canonical grid order)",
        )
    return SampledField(alg.name, spec, family.upper(), values)


def write_samples_json(path, field: SampledField) -> None:
    doc = {
        "algebra": field.algebra,
        "M": list(field.spec),
        "family": field.family,
        "values": [[complex(v).real, complex(v).imag] for v in field.values],
    }
    Path(path).write_text(json.dumps(doc))


def read_samples_json(path, algebra=None, spec=None, family=None) -> SampledField:
    doc = json.loads(Path(path).read_text())
    alg = cartan(algebra if algebra is not None else doc["algebra"])
    spec = validate_spec(alg, spec if spec is not None else doc["M"])
    family = (family or doc["family"]).upper()
    grid = grid_points(alg, spec, family)
    vals = doc["values"]
    _require(len(vals) == len(grid), f"{path}: {len(vals)} values, expected {len(grid)}")
    values = np.array([complex(re, im) for re, im in vals])
    return SampledField(alg.name, spec, family, values)


# -- spectra ---------------------------------------------------------------------


def write_spectrum_csv(path, sp: Spectrum) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t1", "t2", "t3", "re", "im", "norm"])
        for t, b, nm in zip(sp.weights, sp.coeffs, sp.norms):
            b = complex(b)
            w.writerow([*t, repr(b.real), repr(b.imag), repr(float(nm))])


def read_spectrum_csv(path, algebra, spec, family) -> Spectrum:
    alg = cartan(algebra)
    spec = validate_spec(alg, spec)
    rows = _read_csv(path, ["t1", "t2", "t3", "re", "im", "norm"])
    weights, coeffs, norms = [], [], []
    for k, row in enumerate(rows):
        try:
            weights.append((int(row["t1"]), int(row["t2"]), int(row["t3"])))
            coeffs.append(complex(float(row["re"]), float(row["im"])))
            norms.append(float(row["norm"]))
        except ValueError as exc:
            raise DataFileError(f"{path}: bad row {k + 2}: {exc}") from exc
    return Spectrum(
        alg.name, spec, family.upper(), tuple(weights),
        np.array(coeffs, dtype=complex), np.array(norms),
    )


def write_spectrum_json(path, sp: Spectrum) -> None:
    doc = {
        "algebra": sp.algebra,
        "M": list(sp.spec),
        "family": sp.family,
        "weights": [list(t) for t in sp.weights],
        "coeffs": [[complex(b).real, complex(b).imag] for b in sp.coeffs],
        "norms": [float(v) for v in sp.norms],
    }
    Path(path).write_text(json.dumps(doc))


def read_spectrum_json(path) -> Spectrum:
    doc = json.loads(Path(path).read_text())
    alg = cartan(doc["algebra"])
    spec = validate_spec(alg, doc["M"])
    return Spectrum(
        alg.name,
        spec,
        doc["family"].upper(),
        tuple(tuple(t) for t in doc["weights"]),
        np.array([complex(re, im) for re, im in doc["coeffs"]]),
        np.array(doc["norms"]),
    )


# -- grids, weight sets, point lists ----------------------------------------------


def grid_as_dicts(grid: Sequence[GridPoint]) -> list[dict]:
    return [
        {
            "s": list(p.indices),
            "denominators": list(p.denominators),
            "reflected": p.reflected,
            "coords": [float(c) for c in p.coords],
            "epsilon": p.eps,
        }
        for p in grid
    ]


def write_grid_csv(path, grid: Sequence[GridPoint]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["s1", "s2", "s3", "reflected", "x1", "x2", "x3", "epsilon"])
        for p in grid:
            w.writerow(
                [*p.indices, int(p.reflected), *(repr(float(c)) for c in p.coords), p.eps]
            )


def write_lambda_csv(path, ws: WeightSet) -> None:
    norms = ws.norms if ws.norms is not None else [float("nan")] * len(ws)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["t1", "t2", "t3", "norm"])
        for t, nm in zip(ws.weights, norms):
            w.writerow([*t, repr(float(nm))])


def read_points(path) -> np.ndarray:
    """Evaluation points from CSV (x1,x2,x3) or a JSON list of triples."""
    text = Path(path).read_text()
    if text.lstrip().startswith(("[", "{")):
        doc = json.loads(text)
        pts = doc["points"] if isinstance(doc, dict) else doc
        arr = np.array(pts, dtype=float)
    else:
        rows = _read_csv(path, ["x1", "x2", "x3"])
        arr = np.array(
            [[float(r["x1"]), float(r["x2"]), float(r["x3"])] for r in rows]
        )
    _require(arr.ndim == 2 and arr.shape[1] == 3, f"{path}: expected triples")
    return arr


def write_values_csv(path, points: np.ndarray, values: np.ndarray) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["x1", "x2", "x3", "re", "im"])
        for x, v in zip(points, values):
            v = complex(v)
            w.writerow([*(repr(float(c)) for c in x), repr(v.real), repr(v.imag)])


def _read_csv(path, expected_header: list[str]) -> list[dict]:
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh)
            _require(
                reader.fieldnames is not None
                and [h.strip() for h in reader.fieldnames] == expected_header,
                f"{path}: expected header {','.join(expected_header)}",
            )
            return list(reader)
    except OSError as exc:
        raise DataFileError(f"cannot read {path}: {exc}") from exc
