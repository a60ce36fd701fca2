"""JSON state files read and written by the CLI.

Pure states:    {"kind": "pure", "n": 3, "amplitudes": [[re, im], ...]}
Density input:  {"kind": "density", "n": 3, "entries": [[re, im], ...]}
                with 4^n entries in row-major order ("mixed" is accepted
                as an alias of "density" on input).

``n`` may be omitted for density files; when present it is checked
against the data length.
"""

from __future__ import annotations

import json

import numpy as np

from .qstate import DensityMatrix, PureState, projector


class StateFileError(ValueError):
    """The file is not valid JSON or does not follow the schema."""


def _pairs_to_complex(pairs, what: str) -> np.ndarray:
    try:
        arr = np.asarray(pairs, dtype=float)
    except (TypeError, ValueError):
        raise StateFileError(f"{what} must be a list of [re, im] pairs") from None
    if arr.ndim != 2 or arr.shape[1] != 2:
        raise StateFileError(f"{what} must be a list of [re, im] pairs")
    return arr[:, 0] + 1j * arr[:, 1]


def _infer_n(count: int, declared, what: str) -> int:
    n = int(round(np.log2(count)))
    if 2**n != count:
        raise StateFileError(f"{what} length {count} is not a power of two")
    if declared is not None and int(declared) != n:
        raise StateFileError(f"declared n={declared} does not match {what} length {count}")
    return n


def load_state(path) -> DensityMatrix:
    """Read a state file and return a density matrix.

    Schema violations raise StateFileError; physically invalid data
    (bad norm, trace, hermiticity, positivity) raises InvariantViolation
    from the constructors.
    """
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise StateFileError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise StateFileError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise StateFileError("top-level JSON value must be an object")
    kind = doc.get("kind")
    if kind == "pure":
        if "amplitudes" not in doc:
            raise StateFileError('pure state files need an "amplitudes" field')
        amps = _pairs_to_complex(doc["amplitudes"], "amplitudes")
        n = _infer_n(amps.size, doc.get("n"), "amplitudes")
        return projector(PureState(n, amps))
    if kind in ("density", "mixed"):
        if "entries" not in doc:
            raise StateFileError('density files need an "entries" field')
        flat = _pairs_to_complex(doc["entries"], "entries")
        count = flat.size
        dim = int(round(np.sqrt(count)))
        if dim * dim != count:
            raise StateFileError(f"entry count {count} is not a perfect square")
        n = _infer_n(dim, doc.get("n"), "matrix dimension")
        return DensityMatrix(n, flat.reshape(dim, dim))
    raise StateFileError(f'unknown kind {kind!r}; expected "pure" or "density"')


def dump_pure_state(state: PureState, path) -> None:
    doc = {
        "kind": "pure",
        "n": state.n,
        "amplitudes": [[float(a.real), float(a.imag)] for a in state.amplitudes],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")


def dump_density(rho: DensityMatrix, path) -> None:
    flat = rho.mat.reshape(-1)
    doc = {
        "kind": "density",
        "n": rho.n,
        "entries": [[float(x.real), float(x.imag)] for x in flat],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh)
        fh.write("\n")
