"""Density-matrix file format and run manifests.

A density matrix is stored as a JSON object::

    {
      "dimA": <int>,              subsystem A dimension
      "dimB": <int>,              subsystem B dimension
      "re": [[...], ...],         real parts, (dimA*dimB) x (dimA*dimB), row-major
      "im": [[...], ...]          imaginary parts, same shape
    }

The row/column index of |i,k> is i*dimB + k (A-index major).
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .errors import StateValidationError
from .linalg import DEFAULT_TOL, DensityMatrix, Tolerances, validate_density


def load_density(path: str | Path, tol: Tolerances = DEFAULT_TOL) -> DensityMatrix:
    """Parse and validate a density-matrix JSON file."""
    try:
        payload = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise StateValidationError(f"not valid JSON: {exc}") from exc
    for key in ("dimA", "dimB", "re", "im"):
        if key not in payload:
            raise StateValidationError(f"missing required key {key!r}")
    dimA, dimB = int(payload["dimA"]), int(payload["dimB"])
    if dimA < 1 or dimB < 1:
        raise StateValidationError(f"dims must be positive, got ({dimA},{dimB})")
    re = np.asarray(payload["re"], dtype=float)
    im = np.asarray(payload["im"], dtype=float)
    if re.shape != im.shape:
        raise StateValidationError(
            f"re/im shapes differ: {re.shape} vs {im.shape}"
        )
    return validate_density(re + 1j * im, dimA, dimB, tol)


def save_density(q: DensityMatrix, path: str | Path) -> None:
    """Write a density matrix in the JSON file format."""
    payload = {
        "dimA": q.dimA,
        "dimB": q.dimB,
        "re": q.mat.real.tolist(),
        "im": q.mat.imag.tolist(),
    }
    Path(path).write_text(json.dumps(payload))


def save_unitaries(uA: np.ndarray, uB: np.ndarray, path: str | Path) -> None:
    """Write a local-unitary pair as JSON (same re/im layout as density files)."""
    payload = {
        "uA": {"re": uA.real.tolist(), "im": uA.imag.tolist()},
        "uB": {"re": uB.real.tolist(), "im": uB.imag.tolist()},
    }
    Path(path).write_text(json.dumps(payload))


@dataclass(frozen=True)
class RunManifest:
    """Provenance record accompanying generated output files."""

    command: str
    input_hash: str
    seed: int
    tolerances: dict
    version: str
    timestamp: str


def make_manifest(command: str, input_hash: str, seed: int,
                  tol: Tolerances = DEFAULT_TOL) -> RunManifest:
    return RunManifest(
        command=command,
        input_hash=input_hash,
        seed=seed,
        tolerances=asdict(tol),
        version=__version__,
        timestamp=datetime.now(timezone.utc).isoformat(),
    )


def write_manifest(manifest: RunManifest, out_path: str | Path) -> Path:
    """Write the sidecar manifest for an output file and return its path."""
    path = Path(str(out_path) + ".manifest.json")
    path.write_text(json.dumps(asdict(manifest), indent=2, sort_keys=True))
    return path


def hash_file(path: str | Path) -> str:
    return "sha256:" + hashlib.sha256(Path(path).read_bytes()).hexdigest()


def hash_text(text: str) -> str:
    return "sha256:" + hashlib.sha256(text.encode()).hexdigest()
