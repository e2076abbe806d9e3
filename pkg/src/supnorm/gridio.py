"""Array files for grid functions and spectral fields.

A file is one header line followed by the data. The header is a JSON
object on a single line:

    {"format": "supnorm-grid", "version": 1, "domain": "physical",
     "n": 2, "N": 64, "L": 40.0, "layout": "row-major",
     "encoding": "f64le-interleaved"}

``domain`` is "physical" (GridFunction samples at x_j = -L/2 + j L/N) or
"spectral" (SpectralField coefficients at xi_k = 2 pi k / L, centred order
k = -N/2 .. N/2-1). Values are complex, N^n of them, last axis fastest.

encoding "f64le-interleaved": after the newline, 2 * N^n little-endian
float64 numbers re0 im0 re1 im1 ...

encoding "text": the header line is prefixed with "# " and each following
line holds "re im" for one value, written with 17 significant digits.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .spectral import GridFunction, GridSpec, SpectralField

__all__ = ["save_grid", "load_grid", "FORMAT_NAME"]

FORMAT_NAME = "supnorm-grid"
_ENCODINGS = {"binary": "f64le-interleaved", "text": "text"}


def _header(obj, encoding: str) -> dict:
    domain = "physical" if isinstance(obj, GridFunction) else "spectral"
    spec = obj.spec
    return {
        "format": FORMAT_NAME,
        "version": 1,
        "domain": domain,
        "n": spec.n,
        "N": spec.N,
        "L": spec.L,
        "layout": "row-major",
        "encoding": encoding,
    }


def save_grid(obj: GridFunction | SpectralField, path, fmt: str = "binary") -> None:
    if fmt not in _ENCODINGS:
        raise ValueError(f"fmt must be 'binary' or 'text', got {fmt!r}")
    values = obj.samples if isinstance(obj, GridFunction) else obj.coefficients
    flat = np.ascontiguousarray(values).reshape(-1)
    header = json.dumps(_header(obj, _ENCODINGS[fmt]), sort_keys=True)
    path = Path(path)
    if fmt == "binary":
        with path.open("wb") as fh:
            fh.write(header.encode("ascii") + b"\n")
            fh.write(flat.view(np.float64).astype("<f8").tobytes())
    else:
        with path.open("w") as fh:
            fh.write("# " + header + "\n")
            for v in flat:
                fh.write(f"{v.real:.17g} {v.imag:.17g}\n")


def load_grid(path) -> GridFunction | SpectralField:
    path = Path(path)
    with path.open("rb") as fh:
        first = fh.readline().decode("ascii").strip()
        rest = fh.read()
    if first.startswith("#"):
        first = first[1:].strip()
    header = json.loads(first)
    if header.get("format") != FORMAT_NAME or header.get("version") != 1:
        raise ValueError(f"{path}: not a {FORMAT_NAME} v1 file")
    if header.get("layout") != "row-major":
        raise ValueError(f"{path}: unsupported layout {header.get('layout')!r}")
    spec = GridSpec(header["n"], header["N"], header["L"])
    count = spec.N**spec.n
    if header["encoding"] == "f64le-interleaved":
        raw = np.frombuffer(rest, dtype="<f8")
    elif header["encoding"] == "text":
        raw = np.array(rest.decode("ascii").split(), dtype=np.float64)
    else:
        raise ValueError(f"{path}: unknown encoding {header['encoding']!r}")
    if raw.size != 2 * count:
        raise ValueError(f"{path}: expected {2 * count} numbers, found {raw.size}")
    values = (raw[0::2] + 1j * raw[1::2]).reshape(spec.shape)
    if header["domain"] == "physical":
        return GridFunction(spec, values)
    if header["domain"] == "spectral":
        return SpectralField(spec, values)
    raise ValueError(f"{path}: unknown domain {header['domain']!r}")
