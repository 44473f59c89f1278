"""Command-line client for the orbit-function service.

Every subcommand talks to the FastAPI app through HTTP; by default an
in-process ASGI transport is used (no server needed), `--url` targets a
running instance, and `orbitfn serve` starts one. File I/O stays on the
client side: samples, spectra and point lists are CSV or JSON.

Exit codes: 0 success, 2 usage errors, 3 data errors.
"""

from __future__ import annotations

import csv
import json
import sys
from pathlib import Path

import click
import httpx
import numpy as np


class DataError(click.ClickException):
    exit_code = 3


class Client:
    """Thin HTTP client; in-process ASGI when no base URL is given."""

    def __init__(self, url: str | None):
        self._url = url

    def _request(self, method: str, path: str, **kwargs) -> httpx.Response:
        if self._url:
            with httpx.Client(base_url=self._url, timeout=600.0) as client:
                return client.request(method, path, **kwargs)

        import asyncio

        from .service import app

        async def go():
            transport = httpx.ASGITransport(app=app)
            async with httpx.AsyncClient(
                transport=transport, base_url="http://orbitfn.local", timeout=None
            ) as client:
                return await client.request(method, path, **kwargs)

        return asyncio.run(go())

    def call(self, method: str, path: str, **kwargs):
        try:
            resp = self._request(method, path, **kwargs)
        except httpx.HTTPError as exc:
            raise DataError(f"service unreachable: {exc}") from exc
        if resp.status_code in (404, 422):
            raise click.UsageError(_detail(resp))
        if resp.status_code >= 400:
            raise DataError(_detail(resp))
        return resp.json()


def _detail(resp: httpx.Response) -> str:
    try:
        detail = resp.json().get("detail")
    except Exception:
        detail = None
    if isinstance(detail, list):  # pydantic validation report
        detail = "; ".join(
            f"{'.'.join(str(p) for p in e.get('loc', []))}: {e.get('msg')}" for e in detail
        )
    return str(detail or resp.text)


def _parse_m(_ctx, _param, value):
    if value is None:
        return None
    try:
        return [int(v) for v in str(value).split(",")]
    except ValueError:
        raise click.BadParameter(f"expected comma-separated integers, got {value!r}")


def _parse_triple(_ctx, _param, value):
    if value is None:
        return None
    parts = str(value).split(",")
    if len(parts) != 3:
        raise click.BadParameter(f"expected three comma-separated numbers, got {value!r}")
    try:
        return [float(v) for v in parts]
    except ValueError:
        raise click.BadParameter(f"expected numbers, got {value!r}")


def _parse_int_triple(_ctx, _param, value):
    if value is None:
        return None
    triple = _parse_triple(_ctx, _param, value)
    return [int(v) for v in triple]


url_option = click.option("--url", default=None, help="Base URL of a running service.")
algebra_option = click.option("--algebra", "-a", required=True, help="One of A1xA1xA1, A2xA1, C2xA1, G2xA1, A3, B3, C3.")
family_option = click.option("--family", "-f", default="C", show_default=True, type=click.Choice(["C", "S", "E"], case_sensitive=False))
m_option = click.option("--M", "-M", "m_spec", required=True, callback=_parse_m, help="Grid densities, one integer per simple factor, e.g. 4 or 2,3 or 1,1,3.")


@click.group()
def main():
    """Orbit-function toolkit for the rank-3 compact semisimple Lie groups."""


@main.command()
@algebra_option
@url_option
def info(algebra, url):
    """Print Cartan data, marks, the fundamental region and orbit sizes."""
    doc = Client(url).call("GET", f"/algebras/{algebra}")
    click.echo(f"algebra      {doc['algebra']}")
    click.echo(f"factors      {' x '.join(f['name'] for f in doc['factors'])}")
    click.echo(f"cartan       {doc['cartan']}")
    click.echo(f"cartan_inv   {doc['cartan_inv']}")
    click.echo(f"root_len2    {doc['root_len2']}")
    click.echo(f"marks        {doc['marks']}")
    click.echo(f"comarks      {doc['comarks']}")
    click.echo(f"dual_marks   {doc['dual_marks']}")
    click.echo(f"weyl_order   {doc['weyl_order']}")
    click.echo(f"|F|          {doc['volume']!r}")
    click.echo("F vertices (orthonormal coordinates):")
    for v in doc["vertices_ortho"]:
        click.echo(f"  ({v[0]:+.6f}, {v[1]:+.6f}, {v[2]:+.6f})")
    click.echo("orbit sizes by zero pattern:")
    for pat, n in doc["orbit_sizes"].items():
        click.echo(f"  ({pat[0]},{pat[1]},{pat[2]}) -> {n}")


@main.command("dump-tables")
@algebra_option
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write JSON here instead of stdout.")
@url_option
def dump_tables(algebra, out, url):
    """Emit all static tables for an algebra as JSON."""
    doc = Client(url).call("GET", f"/algebras/{algebra}/tables")
    text = json.dumps(doc, indent=2)
    if out:
        Path(out).write_text(text)
    else:
        click.echo(text)


@main.command()
@algebra_option
@m_option
@family_option
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write grid CSV here.")
@url_option
def grid(algebra, m_spec, family, out, url):
    """List the grid points of the family on F_M."""
    doc = Client(url).call(
        "POST", "/grid", json={"algebra": algebra, "M": m_spec, "family": family.upper()}
    )
    rows = [
        [*p["s"], int(p["reflected"]), *(repr(c) for c in p["coords"]), p["epsilon"]]
        for p in doc["points"]
    ]
    header = ["s1", "s2", "s3", "reflected", "x1", "x2", "x3", "epsilon"]
    if out:
        with open(out, "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(header)
            w.writerows(rows)
        click.echo(f"{doc['count']} points -> {out}")
    else:
        click.echo(",".join(header))
        for r in rows:
            click.echo(",".join(str(v) for v in r))


@main.command()
@algebra_option
@click.option("--weight", "-w", required=True, callback=_parse_int_triple, help="Weight t1,t2,t3 in the omega basis.")
@click.option("--even", is_flag=True, help="Orbit of the even subgroup.")
@url_option
def orbit(algebra, weight, even, url):
    """Print a Weyl orbit with parities."""
    doc = Client(url).call(
        "POST", "/orbit", json={"algebra": algebra, "weight": weight, "even": even}
    )
    click.echo("mu1,mu2,mu3,parity")
    for p in doc["points"]:
        click.echo(",".join(str(c) for c in p["coords"]) + f",{p['parity']}")
    click.echo(f"# size {doc['size']}", err=True)


@main.command("eval")
@algebra_option
@family_option
@click.option("--weight", "-w", required=True, callback=_parse_int_triple)
@click.option("--points", "points_path", type=click.Path(exists=False), default=None, help="CSV/JSON point list (omegacheck coordinates).")
@click.option("--at", callback=_parse_triple, default=None, help="Single point x1,x2,x3.")
@click.option("--ortho", is_flag=True, help="Interpret points as orthonormal coordinates.")
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@url_option
def eval_cmd(algebra, family, weight, points_path, at, ortho, out, url):
    """Evaluate one orbit function at points."""
    from .io import DataFileError, read_points, write_values_csv

    if (points_path is None) == (at is None):
        raise click.UsageError("give exactly one of --points or --at")
    if points_path:
        try:
            pts = read_points(points_path)
        except (DataFileError, OSError) as exc:
            raise DataError(str(exc))
    else:
        pts = np.array([at])
    doc = Client(url).call(
        "POST",
        "/eval",
        json={
            "algebra": algebra,
            "family": family.upper(),
            "weight": weight,
            "points": [list(map(float, p)) for p in pts],
            "ortho": ortho,
        },
    )
    vals = np.array([complex(re, im) for re, im in doc["values"]])
    if out:
        write_values_csv(out, pts, vals)
        click.echo(f"{len(vals)} values -> {out}")
    else:
        click.echo("x1,x2,x3,re,im")
        for x, v in zip(pts, vals):
            row = [float(x[0]), float(x[1]), float(x[2]), float(v.real), float(v.imag)]
            click.echo(",".join(repr(c) for c in row))


@main.command()
@algebra_option
@m_option
@family_option
@click.option("--in", "in_path", required=True, type=click.Path(), help="Sample file (CSV s1,s2,s3,re,im or JSON).")
@click.option("--out", required=True, type=click.Path(dir_okay=False), help="Spectrum file to write (CSV or .json).")
@url_option
def transform(algebra, m_spec, family, in_path, out, url):
    """Forward discrete transform of grid samples."""
    from .io import (
        DataFileError,
        read_samples_csv,
        read_samples_json,
        write_spectrum_csv,
        write_spectrum_json,
    )

    try:
        if str(in_path).endswith(".json"):
            field = read_samples_json(in_path, algebra, m_spec, family.upper())
        else:
            field = read_samples_csv(in_path, algebra, m_spec, family.upper())
    except (DataFileError, OSError) as exc:
        raise DataError(str(exc))
    doc = Client(url).call(
        "POST",
        "/transform",
        json={
            "algebra": algebra,
            "M": m_spec,
            "family": family.upper(),
            "values": [[complex(v).real, complex(v).imag] for v in field.values],
        },
    )
    from .service import SpectrumModel

    sp = SpectrumModel(**doc).to_spectrum()
    if str(out).endswith(".json"):
        write_spectrum_json(out, sp)
    else:
        write_spectrum_csv(out, sp)
    click.echo(f"{len(sp)} coefficients -> {out}")


@main.command()
@click.option("--spectrum", "spectrum_path", required=True, type=click.Path(), help="Spectrum file (CSV or JSON).")
@algebra_option
@m_option
@family_option
@click.option("--points", "points_path", required=True, type=click.Path(), help="Point list (CSV x1,x2,x3 or JSON).")
@click.option("--ortho", is_flag=True)
@click.option("--out", required=True, type=click.Path(dir_okay=False))
@url_option
def synth(spectrum_path, algebra, m_spec, family, points_path, ortho, out, url):
    """Evaluate a spectrum at arbitrary points (continuous extension)."""
    from .io import (
        DataFileError,
        read_points,
        read_spectrum_csv,
        read_spectrum_json,
        write_values_csv,
    )
    from .service import SpectrumModel

    try:
        if str(spectrum_path).endswith(".json"):
            sp = read_spectrum_json(spectrum_path)
        else:
            sp = read_spectrum_csv(spectrum_path, algebra, m_spec, family.upper())
        pts = read_points(points_path)
    except (DataFileError, OSError) as exc:
        raise DataError(str(exc))
    doc = Client(url).call(
        "POST",
        "/synth",
        json={
            "spectrum": SpectrumModel.from_spectrum(sp).model_dump(),
            "points": [list(map(float, p)) for p in pts],
            "ortho": ortho,
        },
    )
    vals = np.array([complex(re, im) for re, im in doc["values"]])
    write_values_csv(out, pts, vals)
    click.echo(f"{len(vals)} values -> {out}")


@main.command("demo-gauss")
@click.option("--M", "-M", "m_spec", default="4,6,8,10", callback=_parse_m, show_default=True, help="Densities to sweep.")
@click.option("--p", callback=_parse_triple, default=None, help="Gaussian center in omegacheck coordinates (default: barycenter of F).")
@click.option("--seed", default=0, show_default=True, type=int)
@click.option("--mc-samples", default=10000, show_default=True, type=int)
@click.option("--shift", callback=_parse_int_triple, default=None, help="Also run the system shifted by t1,t2,t3 where the densities allow it.")
@click.option("--out-dir", type=click.Path(file_okay=False), default="gauss-demo", show_default=True)
@url_option
def demo_gauss(m_spec, p, seed, mc_samples, shift, out_dir, url):
    """Gaussian interpolation demo on A1xA1xA1 (CSV bundle)."""
    payload = {"M": m_spec, "seed": seed, "mc_samples": mc_samples}
    if p is not None:
        payload["p"] = p
    if shift is not None:
        payload["shift"] = shift
    doc = Client(url).call("POST", "/demo/gauss", json=payload)
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)

    with open(out / "error_table.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["M", "error", "stderr"])
        for row in doc["errors"]:
            w.writerow([row["M"], repr(row["error"]), repr(row["stderr"])])
    for m, cut in doc["line_cuts"].items():
        with open(out / f"line_cut_M{m}.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["k", "interp_re", "interp_im", "exact"])
            for row in zip(cut["k"], cut["interp_re"], cut["interp_im"], cut["exact"]):
                w.writerow([repr(v) for v in row])
    for m, cut in doc["surface_cuts"].items():
        with open(out / f"surface_cut_M{m}.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["k", "l", "interp_re", "interp_im", "exact"])
            for row in zip(cut["k"], cut["l"], cut["interp_re"], cut["interp_im"], cut["exact"]):
                w.writerow([repr(v) for v in row])
    if doc["shifted"]:
        with open(out / "shifted_comparison.csv", "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["M", "shift", "error", "stderr", "error_ratio"])
            for row in doc["shifted"]:
                w.writerow(
                    [
                        row["M"],
                        " ".join(str(v) for v in row["shift"]),
                        repr(row["error"]),
                        repr(row["stderr"]),
                        repr(row["error_ratio"]),
                    ]
                )
    for row in doc["errors"]:
        click.echo(f"M={row['M']}: error {row['error']:.6g} +- {row['stderr']:.2g}")
    for row in doc["shifted"]:
        click.echo(
            f"M={row['M']} shifted {tuple(row['shift'])}: error {row['error']:.6g} "
            f"({row['error_ratio']:.1f}x unshifted)"
        )
    click.echo(f"CSV bundle -> {out}")


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8000, show_default=True, type=int)
def serve(host, port):
    """Run the HTTP service."""
    import uvicorn

    from .service import app

    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main()
