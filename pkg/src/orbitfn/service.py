"""HTTP service exposing tables, grids, orbits, evaluation and transforms.

A long-running process amortizes the per-(algebra, densities, family)
transform matrices across requests; the CLI is a thin client of this app,
normally over an in-process ASGI transport. Payloads are plain JSON; complex
vectors travel as [re, im] pairs.

Error contract: unknown algebra names in a path give 404, invalid request
shapes 422 (pydantic), and data-level problems (size mismatch, empty S set,
demo center outside F) 400.
"""

from __future__ import annotations

from typing import Literal

import numpy as np
from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import __version__
from .algebras import ALGEBRAS, AlgebraKeyError, cartan, tables_as_dict
from .demo import run_gauss_demo
from .functions import evaluate, laplace_eigenvalue, orbit_function
from .io import grid_as_dicts
from .lattice import FoldError, fold_to_fundamental, grid_points, validate_spec
from .transforms import SampledField, Spectrum, forward, synthesize
from .weyl import even_orbit, orbit

Family = Literal["C", "S", "E"]

app = FastAPI(title="orbitfn", version=__version__)


def _algebra_or_404(name: str):
    try:
        return cartan(name)
    except AlgebraKeyError as exc:
        raise HTTPException(status_code=404, detail=str(exc)) from exc


def _data_error(msg: str) -> HTTPException:
    return HTTPException(status_code=400, detail=msg)


def _validated_spec(alg, m: list[int]) -> tuple[int, ...]:
    """Spec arity/positivity problems are request-shape errors (422)."""
    try:
        return validate_spec(alg, tuple(m))
    except ValueError as exc:
        raise HTTPException(status_code=422, detail=str(exc)) from exc


def _pairs(values) -> list[list[float]]:
    return [[complex(v).real, complex(v).imag] for v in values]


def _unpairs(pairs) -> np.ndarray:
    return np.array([complex(re, im) for re, im in pairs])


# -- models ----------------------------------------------------------------------


class GridRequest(BaseModel):
    algebra: str
    M: list[int] = Field(min_length=1, max_length=3)
    family: Family = "C"


class GridResponse(BaseModel):
    algebra: str
    M: list[int]
    family: Family
    count: int
    a_m: int | None = None
    points: list[dict]


class OrbitRequest(BaseModel):
    algebra: str
    weight: tuple[int, int, int]
    even: bool = False


class OrbitResponse(BaseModel):
    algebra: str
    weight: tuple[int, int, int]
    even: bool
    size: int
    points: list[dict]


class EvalRequest(BaseModel):
    algebra: str
    family: Family
    weight: tuple[int, int, int]
    points: list[tuple[float, float, float]]
    ortho: bool = False


class EvalResponse(BaseModel):
    values: list[list[float]]
    laplace_eigenvalue: float


class SpectrumModel(BaseModel):
    algebra: str
    M: list[int]
    family: Family
    weights: list[tuple[int, int, int]]
    coeffs: list[list[float]]
    norms: list[float]

    @classmethod
    def from_spectrum(cls, sp: Spectrum) -> "SpectrumModel":
        return cls(
            algebra=sp.algebra,
            M=list(sp.spec),
            family=sp.family,
            weights=[tuple(t) for t in sp.weights],
            coeffs=_pairs(sp.coeffs),
            norms=[float(v) for v in sp.norms],
        )

    def to_spectrum(self) -> Spectrum:
        return Spectrum(
            cartan(self.algebra).name,
            tuple(self.M),
            self.family,
            tuple(tuple(t) for t in self.weights),
            _unpairs(self.coeffs),
            np.array(self.norms),
        )


class TransformRequest(BaseModel):
    algebra: str
    M: list[int]
    family: Family = "C"
    values: list[list[float]]


class SynthRequest(BaseModel):
    spectrum: SpectrumModel
    points: list[tuple[float, float, float]]
    ortho: bool = False


class ValuesResponse(BaseModel):
    values: list[list[float]]


class FoldRequest(BaseModel):
    algebra: str
    point: tuple[float, float, float]


class FoldResponse(BaseModel):
    point: tuple[float, float, float]
    sign: int
    length: int


class DemoGaussRequest(BaseModel):
    M: list[int] = [4, 6, 8, 10]
    p: tuple[float, float, float] | None = None
    seed: int = 0
    mc_samples: int = Field(default=10000, ge=1000)
    shift: tuple[int, int, int] | None = None


class DemoGaussResponse(BaseModel):
    algebra: str
    p: tuple[float, float, float]
    errors: list[dict]
    line_cuts: dict[int, dict]
    surface_cuts: dict[int, dict]
    shifted: list[dict]


# -- endpoints --------------------------------------------------------------------


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/algebras")
def list_algebras() -> list[str]:
    return list(ALGEBRAS)


@app.get("/algebras/{name}")
def algebra_info(name: str) -> dict:
    alg = _algebra_or_404(name)
    return tables_as_dict(alg)


@app.get("/algebras/{name}/tables")
def algebra_tables(name: str) -> dict:
    return tables_as_dict(_algebra_or_404(name))


@app.post("/grid")
def grid(req: GridRequest) -> GridResponse:
    alg = _algebra_or_404(req.algebra)
    spec = _validated_spec(alg, req.M)
    try:
        pts = grid_points(alg, spec, req.family)
        am = None
        if req.family == "C":
            am = int(sum(p.eps for p in pts))
    except ValueError as exc:
        raise _data_error(str(exc)) from exc
    return GridResponse(
        algebra=alg.name,
        M=list(req.M),
        family=req.family,
        count=len(pts),
        a_m=am,
        points=grid_as_dicts(pts),
    )


@app.post("/orbit")
def orbit_endpoint(req: OrbitRequest) -> OrbitResponse:
    alg = _algebra_or_404(req.algebra)
    orb = even_orbit(alg, req.weight) if req.even else orbit(alg, req.weight)
    return OrbitResponse(
        algebra=alg.name,
        weight=req.weight,
        even=req.even,
        size=len(orb),
        points=[{"coords": list(p.coords), "parity": p.parity} for p in orb.points],
    )


@app.post("/eval")
def eval_endpoint(req: EvalRequest) -> EvalResponse:
    alg = _algebra_or_404(req.algebra)
    try:
        f = orbit_function(alg, req.family, req.weight)
    except ValueError as exc:
        raise _data_error(str(exc)) from exc
    pts = np.array(req.points, dtype=float).reshape(-1, 3)
    vals = evaluate(f, pts, ortho=req.ortho)
    return EvalResponse(
        values=_pairs(np.atleast_1d(vals)),
        laplace_eigenvalue=laplace_eigenvalue(alg, req.weight),
    )


@app.post("/transform")
def transform(req: TransformRequest) -> SpectrumModel:
    alg = _algebra_or_404(req.algebra)
    spec = _validated_spec(alg, req.M)
    field = SampledField(alg.name, spec, req.family, _unpairs(req.values))
    try:
        sp = forward(field)
    except ValueError as exc:
        raise _data_error(str(exc)) from exc
    return SpectrumModel.from_spectrum(sp)


@app.post("/synth")
def synth(req: SynthRequest) -> ValuesResponse:
    try:
        sp = req.spectrum.to_spectrum()
        pts = np.array(req.points, dtype=float).reshape(-1, 3)
        vals = synthesize(sp, pts, ortho=req.ortho)
    except (ValueError, AlgebraKeyError) as exc:
        raise _data_error(str(exc)) from exc
    return ValuesResponse(values=_pairs(np.atleast_1d(vals)))


@app.post("/fold")
def fold(req: FoldRequest) -> FoldResponse:
    alg = _algebra_or_404(req.algebra)
    try:
        pt, sign, length = fold_to_fundamental(alg, req.point)
    except FoldError as exc:
        raise _data_error(str(exc)) from exc
    return FoldResponse(point=tuple(pt), sign=sign, length=length)


@app.post("/demo/gauss")
def demo_gauss(req: DemoGaussRequest) -> DemoGaussResponse:
    try:
        res = run_gauss_demo(
            m_list=req.M,
            p=req.p,
            seed=req.seed,
            n_mc=req.mc_samples,
            shift=req.shift,
        )
    except ValueError as exc:
        raise _data_error(str(exc)) from exc
    return DemoGaussResponse(
        algebra=res.algebra,
        p=res.p,
        errors=res.errors,
        line_cuts=res.line_cuts,
        surface_cuts=res.surface_cuts,
        shifted=res.shifted,
    )
