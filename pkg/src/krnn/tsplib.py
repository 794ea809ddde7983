"""TSPLIB 95 instance parsing.

Supports the subset of the format needed for the benchmark corpus: explicit
weight matrices (FULL_MATRIX and the row-wise triangular variants) and the
coordinate distance functions EUC_2D, CEIL_2D, GEO and ATT. All weights are
rounded to integers per the TSPLIB definitions and stored as a full int64
matrix; tour arithmetic downstream is exact integer arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import MalformedFile, SelfLoop, UnsupportedFormat, VertexOutOfRange

SUPPORTED_TYPES = ("TSP", "ATSP")
SUPPORTED_WEIGHT_TYPES = ("EXPLICIT", "EUC_2D", "CEIL_2D", "GEO", "ATT")
SUPPORTED_WEIGHT_FORMATS = (
    "FULL_MATRIX",
    "UPPER_ROW",
    "LOWER_ROW",
    "UPPER_DIAG_ROW",
    "LOWER_DIAG_ROW",
)

_HEADER_KEYS = {
    "NAME",
    "TYPE",
    "COMMENT",
    "DIMENSION",
    "EDGE_WEIGHT_TYPE",
    "EDGE_WEIGHT_FORMAT",
    "EDGE_DATA_FORMAT",
    "DISPLAY_DATA_TYPE",
    "NODE_COORD_TYPE",
    "CAPACITY",
}
_SECTION_KEYS = {
    "NODE_COORD_SECTION",
    "EDGE_WEIGHT_SECTION",
    "DISPLAY_DATA_SECTION",
    "DEPOT_SECTION",
    "TOUR_SECTION",
    "EOF",
}


@dataclass(frozen=True, eq=False)
class Instance:
    """A complete weighted graph parsed from a TSPLIB file.

    The cost matrix is fully materialized; diagonal entries are whatever the
    file contained (often 0 or a 9999-style sentinel) and are never consulted
    by any solver. The matrix is marked read-only so instances can be shared
    freely across workers.
    """

    name: str
    dimension: int
    symmetric: bool
    matrix: np.ndarray
    comment: str | None = None
    edge_weight_type: str = "EXPLICIT"
    edge_weight_format: str | None = None
    coords: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        m = np.ascontiguousarray(self.matrix, dtype=np.int64)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        if self.coords is not None:
            c = np.ascontiguousarray(self.coords, dtype=np.float64)
            c.setflags(write=False)
            object.__setattr__(self, "coords", c)

    @property
    def n(self) -> int:
        return self.dimension

    def cost(self, i: int, j: int) -> int:
        """Cost of the directed edge i -> j. Self-loops are rejected."""
        n = self.dimension
        if not (0 <= i < n):
            raise VertexOutOfRange(i, n)
        if not (0 <= j < n):
            raise VertexOutOfRange(j, n)
        if i == j:
            raise SelfLoop(i)
        return int(self.matrix[i, j])


def nint(x: float) -> int:
    """TSPLIB nearest-integer rounding: half away from zero."""
    return int(math.floor(x + 0.5)) if x >= 0 else -int(math.floor(-x + 0.5))


def _euc_2d_matrix(coords: np.ndarray) -> np.ndarray:
    d = np.hypot(
        coords[:, None, 0] - coords[None, :, 0],
        coords[:, None, 1] - coords[None, :, 1],
    )
    return np.floor(d + 0.5).astype(np.int64)


def _ceil_2d_matrix(coords: np.ndarray) -> np.ndarray:
    d = np.hypot(
        coords[:, None, 0] - coords[None, :, 0],
        coords[:, None, 1] - coords[None, :, 1],
    )
    return np.ceil(d).astype(np.int64)


def _att_matrix(coords: np.ndarray) -> np.ndarray:
    # Pseudo-Euclidean: round sqrt((xd^2+yd^2)/10) up whenever rounding down.
    xd = coords[:, None, 0] - coords[None, :, 0]
    yd = coords[:, None, 1] - coords[None, :, 1]
    r = np.sqrt((xd * xd + yd * yd) / 10.0)
    t = np.floor(r + 0.5)
    return (t + (t < r)).astype(np.int64)


def _geo_matrix(coords: np.ndarray) -> np.ndarray:
    # Coordinates are DDD.MM (degrees and minutes); the integer part is taken
    # by truncation toward zero, matching the reference C code's (int) cast.
    pi = 3.141592
    rrr = 6378.388
    deg = np.trunc(coords)
    minutes = coords - deg
    rad = pi * (deg + 5.0 * minutes / 3.0) / 180.0
    lat, lon = rad[:, 0], rad[:, 1]
    q1 = np.cos(lon[:, None] - lon[None, :])
    q2 = np.cos(lat[:, None] - lat[None, :])
    q3 = np.cos(lat[:, None] + lat[None, :])
    arg = np.clip(0.5 * ((1.0 + q1) * q2 - (1.0 - q1) * q3), -1.0, 1.0)
    d = rrr * np.arccos(arg) + 1.0
    m = d.astype(np.int64)
    np.fill_diagonal(m, 0)
    return m


_COORD_MATRIX = {
    "EUC_2D": _euc_2d_matrix,
    "CEIL_2D": _ceil_2d_matrix,
    "GEO": _geo_matrix,
    "ATT": _att_matrix,
}


def parse_instance(text: str) -> Instance:
    """Parse a complete TSPLIB instance file into an Instance.

    Header lines are `KEY : VALUE`; data sections follow and may wrap rows
    at arbitrary whitespace. Unknown-but-harmless header keys are ignored.
    Raises UnsupportedFormat for types outside the supported subset and
    MalformedFile for structural problems.
    """
    header: dict[str, str] = {}
    sections: dict[str, list[str]] = {}
    current_section: str | None = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        first = line.split(None, 1)[0].rstrip(":")
        if first in _SECTION_KEYS:
            if first == "EOF":
                break
            current_section = first
            sections[current_section] = []
            continue
        if current_section is None:
            if ":" in line:
                key, value = line.split(":", 1)
                key = key.strip().upper()
                header[key] = value.strip()
            else:
                raise MalformedFile(f"expected 'KEY : VALUE' header, got {line!r}", lineno)
        else:
            sections[current_section].append(line)

    name = header.get("NAME", "unnamed")
    comment = header.get("COMMENT")

    problem_type = header.get("TYPE", "TSP").split()[0].upper()
    if problem_type not in SUPPORTED_TYPES:
        raise UnsupportedFormat("TYPE", header.get("TYPE", ""))
    symmetric = problem_type == "TSP"

    if "DIMENSION" not in header:
        raise MalformedFile("missing DIMENSION header")
    try:
        dimension = int(header["DIMENSION"])
    except ValueError:
        raise MalformedFile(f"non-integer DIMENSION: {header['DIMENSION']!r}") from None
    if dimension < 2:
        raise MalformedFile(f"DIMENSION must be >= 2, got {dimension}")

    ewt = header.get("EDGE_WEIGHT_TYPE", "").upper()
    if ewt not in SUPPORTED_WEIGHT_TYPES:
        raise UnsupportedFormat("EDGE_WEIGHT_TYPE", header.get("EDGE_WEIGHT_TYPE", ""))

    coords = None
    if ewt == "EXPLICIT":
        fmt = header.get("EDGE_WEIGHT_FORMAT", "").upper()
        if fmt not in SUPPORTED_WEIGHT_FORMATS:
            raise UnsupportedFormat("EDGE_WEIGHT_FORMAT", header.get("EDGE_WEIGHT_FORMAT", ""))
        if "EDGE_WEIGHT_SECTION" not in sections:
            raise MalformedFile("EXPLICIT instance without EDGE_WEIGHT_SECTION")
        weights = _parse_int_tokens(sections["EDGE_WEIGHT_SECTION"])
        matrix = _expand_explicit(weights, dimension, fmt)
        if symmetric and fmt == "FULL_MATRIX" and not np.array_equal(matrix, matrix.T):
            raise MalformedFile("TYPE TSP declared but FULL_MATRIX data is asymmetric")
    else:
        fmt = header.get("EDGE_WEIGHT_FORMAT", "FUNCTION").upper() or "FUNCTION"
        if "NODE_COORD_SECTION" not in sections:
            raise MalformedFile(f"{ewt} instance without NODE_COORD_SECTION")
        coords = _parse_coords(sections["NODE_COORD_SECTION"], dimension)
        matrix = _COORD_MATRIX[ewt](coords)

    return Instance(
        name=name,
        dimension=dimension,
        symmetric=symmetric,
        matrix=matrix,
        comment=comment,
        edge_weight_type=ewt,
        edge_weight_format=fmt if ewt == "EXPLICIT" else None,
        coords=coords,
    )


def load_instance(path: str | Path) -> Instance:
    """Read and parse a TSPLIB file from disk."""
    return parse_instance(Path(path).read_text())


def _parse_int_tokens(lines: list[str]) -> list[int]:
    out = []
    for line in lines:
        for tok in line.split():
            try:
                out.append(int(tok))
            except ValueError:
                raise MalformedFile(f"non-integer weight token {tok!r}") from None
    return out


def _parse_coords(lines: list[str], dimension: int) -> np.ndarray:
    coords = np.full((dimension, 2), np.nan)
    seen = set()
    for line in lines:
        parts = line.split()
        if len(parts) != 3:
            raise MalformedFile(f"coordinate line needs 'index x y', got {line!r}")
        try:
            idx = int(parts[0])
            x, y = float(parts[1]), float(parts[2])
        except ValueError:
            raise MalformedFile(f"non-numeric coordinate line {line!r}") from None
        if not 1 <= idx <= dimension:
            raise MalformedFile(f"coordinate index {idx} outside 1..{dimension}")
        if idx in seen:
            raise MalformedFile(f"duplicate coordinate index {idx}")
        seen.add(idx)
        coords[idx - 1] = (x, y)
    if len(seen) != dimension:
        raise MalformedFile(f"expected {dimension} coordinates, got {len(seen)}")
    return coords


def _expand_explicit(weights: list[int], n: int, fmt: str) -> np.ndarray:
    """Expand an explicit weight list into a full n-by-n matrix."""
    counts = {
        "FULL_MATRIX": n * n,
        "UPPER_ROW": n * (n - 1) // 2,
        "LOWER_ROW": n * (n - 1) // 2,
        "UPPER_DIAG_ROW": n * (n + 1) // 2,
        "LOWER_DIAG_ROW": n * (n + 1) // 2,
    }
    expected = counts[fmt]
    if len(weights) != expected:
        raise MalformedFile(
            f"{fmt} with DIMENSION {n} needs {expected} weights, got {len(weights)}"
        )
    w = np.asarray(weights, dtype=np.int64)
    m = np.zeros((n, n), dtype=np.int64)
    if fmt == "FULL_MATRIX":
        return w.reshape(n, n)
    if fmt == "UPPER_ROW":
        iu = np.triu_indices(n, k=1)
    elif fmt == "LOWER_ROW":
        iu = np.tril_indices(n, k=-1)
    elif fmt == "UPPER_DIAG_ROW":
        iu = np.triu_indices(n, k=0)
    else:  # LOWER_DIAG_ROW
        iu = np.tril_indices(n, k=0)
    m[iu] = w
    off_diag = m * (1 - np.eye(n, dtype=np.int64))
    return off_diag + off_diag.T + np.diag(np.diag(m))


def extract_triangle(instance: Instance, fmt: str) -> list[int]:
    """Re-extract a triangular weight list from the expanded matrix."""
    m = instance.matrix
    n = instance.dimension
    if fmt == "UPPER_ROW":
        idx = np.triu_indices(n, k=1)
    elif fmt == "LOWER_ROW":
        idx = np.tril_indices(n, k=-1)
    elif fmt == "UPPER_DIAG_ROW":
        idx = np.triu_indices(n, k=0)
    elif fmt == "LOWER_DIAG_ROW":
        idx = np.tril_indices(n, k=0)
    else:
        raise ValueError(f"not a triangular format: {fmt}")
    return [int(v) for v in m[idx]]


def format_full_matrix(instance: Instance) -> str:
    """Render an Instance as an EXPLICIT FULL_MATRIX file.

    Used for the parse -> serialize -> parse round-trip; not a general
    TSPLIB writer.
    """
    lines = [
        f"NAME: {instance.name}",
        f"TYPE: {'TSP' if instance.symmetric else 'ATSP'}",
        f"DIMENSION: {instance.dimension}",
        "EDGE_WEIGHT_TYPE: EXPLICIT",
        "EDGE_WEIGHT_FORMAT: FULL_MATRIX",
        "EDGE_WEIGHT_SECTION",
    ]
    for row in instance.matrix:
        lines.append(" " + " ".join(str(int(v)) for v in row))
    lines.append("EOF")
    return "\n".join(lines) + "\n"
