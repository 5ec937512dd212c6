"""Presemifield files.

JSON holds the full record (field, structure constants, provenance). The
spread-set text format is a header line ``p m n`` followed by p^n lines, one
per R_y in index order, each line the n rows of R_y read as base-p integers.

Usage:
    from chuk_semifield.io import export_spread_set, import_spread_set, load_presemifield

    S = load_presemifield("s.json")
    export_spread_set(S, "s.spread")
    assert import_spread_set("s.spread").same_constants(S)
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any

import numpy as np

from chuk_semifield.core.presemifield import PreSemifield
from chuk_semifield.core.spread import spread_set
from chuk_semifield.errors import ParameterError
from chuk_semifield.gf import field_new
from chuk_semifield.types import ConstructionKind

logger = logging.getLogger(__name__)


def _plain(value: Any) -> Any:
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, Path):
        return str(value)
    raise TypeError(f"cannot serialise {type(value).__name__}")


def dumps(payload: Any) -> str:
    """Deterministic JSON: sorted keys, two-space indent."""
    return json.dumps(payload, indent=2, sort_keys=True, default=_plain) + "\n"


def write_json(payload: Any, path: str | Path) -> None:
    Path(path).write_text(dumps(payload))


def presemifield_from_dict(data: dict[str, Any]) -> PreSemifield:
    try:
        p, m, d = int(data["p"]), int(data["m"]), int(data["d"])
        constants = data["structure_constants"]
    except KeyError as exc:
        raise ParameterError(f"presemifield record is missing {exc.args[0]!r}") from exc
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"presemifield record: p, m and d must be integers ({exc})") from exc
    if d < 1:
        raise ParameterError(f"presemifield record: d must be positive, got {d}")
    ctx = field_new(p, m, data.get("modulus"))
    n = d * m
    try:
        C = np.asarray(constants, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"structure constants must be integers ({exc})") from exc
    if C.size != n**3:
        raise ParameterError(f"expected {n**3} structure constants, got {C.size}")
    if np.any((C < 0) | (C >= p)):
        raise ParameterError(f"structure constants must lie in 0..{p - 1}")
    metadata = data.get("metadata") or {"construction": ConstructionKind.IMPORTED.value}
    return PreSemifield(ctx, d, C.reshape(n, n, n), metadata)


def save_presemifield(S: PreSemifield, path: str | Path) -> None:
    write_json(S.to_dict(), path)
    logger.info("wrote %s to %s", S.label, path)


def load_presemifield(path: str | Path) -> PreSemifield:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParameterError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParameterError(f"{path} must hold a JSON object")
    return presemifield_from_dict(data)


# ============================================================================
# Spread-set text
# ============================================================================


def export_spread_set(S: PreSemifield, path: str | Path) -> None:
    header = f"{S.p} {S.ctx.m} {S.n}\n"
    Path(path).write_text(header + spread_set(S).to_text())
    logger.info("exported %d spread-set members of %s to %s", S.order, S.label, path)


def _parse_header(line: str) -> tuple[int, int, int]:
    parts = line.split()
    if len(parts) != 3:
        raise ParameterError(f"spread-set header must read 'p m n', got {line!r}")
    p, m, n = (int(v) for v in parts)
    if n % m:
        raise ParameterError(f"n = {n} is not a multiple of m = {m}")
    return p, m, n


def import_spread_set(path: str | Path, modulus: list[int] | None = None) -> PreSemifield:
    """Rebuild structure constants from an exported spread set.

    Every line must equal the F_p-combination of the basis lines its index
    names; otherwise the file is not a spread set of a bi-additive product.
    """
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise ParameterError(f"{path} is empty")
    p, m, n = _parse_header(lines[0])
    rows = np.asarray([[int(v) for v in ln.split()] for ln in lines[1:]], dtype=np.int64)
    if rows.shape != (p**n, n):
        raise ParameterError(f"expected {p**n} lines of {n} integers, got shape {rows.shape}")
    weights = p ** np.arange(n, dtype=np.int64)
    mats = (rows[..., None] // weights) % p

    basis = mats[p ** np.arange(n)]
    idx = np.arange(p**n, dtype=np.int64)
    coeffs = (idx[:, None] // weights) % p
    expected = np.einsum("bj,jrc->brc", coeffs, basis) % p
    if not np.array_equal(expected, mats):
        bad = int(np.argmax(np.any(expected != mats, axis=(1, 2))))
        raise ParameterError(f"line {bad + 2} of {path} breaks additivity of y -> R_y")

    ctx = field_new(p, m, modulus)
    # C[i, j, :] = e_i R_(e_j)
    C = basis.transpose(1, 0, 2)
    return PreSemifield(ctx, n // m, C, {"construction": ConstructionKind.IMPORTED.value, "source": str(path)})
