"""Built-in finite structures and the JSON model-file format.

Model file::

    {"name": "...", "elements": [names], "covers": [[lo, hi], ...],
     "ortho": {name: name}, "bottom": name, "top": name}

Covers are closed reflexively and transitively on load.
"""

import json
import re
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Sequence, Union

import numpy as np
import pandas as pd

from src.lattice.lattice import (
    FiniteOrthoposet,
    OrthoposetError,
    is_distributive,
    validate_orthoposet,
)
from src.logging_config import get_logger

logger = get_logger(__name__)

BOOLEAN_ATOMS = "pqrstuvw"
BLOCK_ATOMS = "xyzw"

BUILTIN_NAMES = [
    "boolean1",
    "boolean2",
    "boolean3",
    "boolean4",
    "mo2",
    "mo3",
    "mo4",
    "o6",
    "mo2xboolean1",
]

DEFAULT_COUNTERMODEL_CATALOG = [
    "boolean1",
    "boolean2",
    "boolean3",
    "mo2",
    "mo3",
    "mo4",
    "mo2xboolean1",
]

_NAME_RE = re.compile(r"(boolean|mo)(\d+)\Z")


class CatalogError(OrthoposetError):
    """Unknown catalog name, invalid size parameter, or unreadable model file."""


def _transitive_closure(leq: np.ndarray) -> np.ndarray:
    leq = leq.copy()
    np.fill_diagonal(leq, True)
    for k in range(len(leq)):
        leq |= leq[:, k, None] & leq[None, k, :]
    return leq


def boolean_algebra(k: int) -> FiniteOrthoposet:
    """The Boolean algebra of subsets of a k-element set (2**k elements).

    Element ids are bitmasks; atoms are named p, q, r, ... and other elements
    by the atoms they contain, with bottom "0" and top "1".
    """
    if not isinstance(k, int) or k < 1:
        raise CatalogError(f"boolean_algebra needs k >= 1, got {k!r}")
    atom_names = list(BOOLEAN_ATOMS[:k]) if k <= len(BOOLEAN_ATOMS) else [f"p{i}" for i in range(1, k + 1)]
    glue = "" if k <= len(BOOLEAN_ATOMS) else "+"
    n = 2 ** k
    top = n - 1

    def label(mask):
        if mask == 0:
            return "0"
        if mask == top:
            return "1"
        return glue.join(atom_names[i] for i in range(k) if mask >> i & 1)

    masks = np.arange(n)
    leq = (masks[:, None] & ~masks[None, :]) == 0
    ortho = top ^ masks
    return FiniteOrthoposet([label(m) for m in range(n)], leq, ortho, 0, top, name=f"boolean{k}")


def mo(k: int) -> FiniteOrthoposet:
    """MO_k: k four-element Boolean blocks glued at 0 and 1 (2k + 2 elements)."""
    if not isinstance(k, int) or k < 1:
        raise CatalogError(f"mo needs k >= 1, got {k!r}")
    atom_names = list(BLOCK_ATOMS[:k]) + [f"x{i}" for i in range(len(BLOCK_ATOMS) + 1, k + 1)]
    names = ["0"]
    for atom in atom_names:
        names += [atom, atom + "'"]
    names.append("1")
    n = len(names)
    top = n - 1
    leq = np.eye(n, dtype=bool)
    leq[0, :] = True
    leq[:, top] = True
    ortho = np.arange(n)
    ortho[0], ortho[top] = top, 0
    for i in range(k):
        ortho[2 * i + 1], ortho[2 * i + 2] = 2 * i + 2, 2 * i + 1
    return FiniteOrthoposet(names, leq, ortho, 0, top, name=f"mo{k}")


def o6() -> FiniteOrthoposet:
    """The benzene ring: 0 < a < b < 1 and 0 < b' < a' < 1, an ortholattice that is not orthomodular."""
    return from_dict(
        {
            "name": "o6",
            "elements": ["0", "a", "b", "b'", "a'", "1"],
            "covers": [["0", "a"], ["a", "b"], ["b", "1"], ["0", "b'"], ["b'", "a'"], ["a'", "1"]],
            "ortho": {"0": "1", "1": "0", "a": "a'", "a'": "a", "b": "b'", "b'": "b"},
            "bottom": "0",
            "top": "1",
        }
    )


def product(p: FiniteOrthoposet, q: FiniteOrthoposet) -> FiniteOrthoposet:
    """Componentwise product; element ``(i, j)`` has id ``i * q.n + j``."""
    names = [f"({a},{b})" for a in p.names for b in q.names]
    leq = np.kron(p.leq.astype(np.int64), q.leq.astype(np.int64)).astype(bool)
    ortho = (p.ortho[:, None] * q.n + q.ortho[None, :]).ravel()
    return FiniteOrthoposet(
        names,
        leq,
        ortho,
        p.bottom * q.n + q.bottom,
        p.top * q.n + q.top,
        name=f"{p.name}x{q.name}",
    )


def from_dict(data: Dict) -> FiniteOrthoposet:
    """Build a structure from the model-file dictionary."""
    try:
        names = [str(x) for x in data["elements"]]
        index = {name: i for i, name in enumerate(names)}
        n = len(names)
        leq = np.zeros((n, n), dtype=bool)
        for lo, hi in data.get("covers", []):
            leq[index[lo], index[hi]] = True
        ortho_map = data["ortho"]
        ortho = [index[ortho_map[name]] for name in names]
        bottom, top = index[data["bottom"]], index[data["top"]]
    except KeyError as e:
        raise CatalogError(f"Model data refers to missing key or element {e}") from e
    except (TypeError, ValueError) as e:
        raise CatalogError(f"Malformed model data: {e}") from e
    return FiniteOrthoposet(names, _transitive_closure(leq), ortho, bottom, top, name=data.get("name", "model"))


def to_dict(p: FiniteOrthoposet) -> Dict:
    """Model-file dictionary with the Hasse covers of p."""
    strict = p.leq & ~np.eye(p.n, dtype=bool)
    covers = strict & ~((strict.astype(np.int64) @ strict.astype(np.int64)) > 0)
    return {
        "name": p.name,
        "elements": list(p.names),
        "covers": [[p.names[lo], p.names[hi]] for lo, hi in np.argwhere(covers)],
        "ortho": {p.names[x]: p.names[int(p.ortho[x])] for x in p.elements},
        "bottom": p.names[p.bottom],
        "top": p.names[p.top],
    }


def from_file(path: Union[str, Path]) -> FiniteOrthoposet:
    """Load a structure from a JSON model file.

    Raises:
        CatalogError: The file is missing, not JSON, malformed, or describes
            a structure that is not an orthoposet.
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as e:
        raise CatalogError(f"Cannot read model file {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise CatalogError(f"Model file {path} is not valid JSON: {e}") from e
    if not isinstance(data, dict):
        raise CatalogError(f"Model file {path} must contain a JSON object")
    data.setdefault("name", path.stem)
    structure = from_dict(data)
    report = validate_orthoposet(structure)
    if not report.ok:
        shown = "; ".join(
            f"{v.axiom} {[structure.names[w] for w in v.witness]} {v.detail}".rstrip() for v in report.violations[:5]
        )
        raise CatalogError(f"Model file {path} is not an orthoposet (fails {', '.join(report.axioms())}): {shown}")
    logger.info(f"Loaded {structure.name} ({structure.n} elements) from {path}")
    return structure


def to_file(p: FiniteOrthoposet, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(to_dict(p), indent=2))


@lru_cache(maxsize=None)
def get_structure(name: str) -> FiniteOrthoposet:
    """Resolve a catalog name: ``booleanK``, ``moK``, ``o6`` or ``<p>x<q>`` products."""
    if "x" in name:
        parts = name.split("x")
        structure = get_structure(parts[0])
        for part in parts[1:]:
            structure = product(structure, get_structure(part))
        return structure
    if name == "o6":
        return o6()
    match = _NAME_RE.match(name)
    if not match:
        raise CatalogError(f"Unknown catalog structure {name!r}")
    kind, k = match.group(1), int(match.group(2))
    return boolean_algebra(k) if kind == "boolean" else mo(k)


def resolve(names: Sequence[str]) -> List[FiniteOrthoposet]:
    return [get_structure(name) for name in names]


def catalog_list(names: Sequence[str] = BUILTIN_NAMES) -> pd.DataFrame:
    """One row per structure: size and the properties the checks establish."""
    rows = []
    for name in names:
        p = get_structure(name)
        is_orthoposet = validate_orthoposet(p).ok
        lattice = is_orthoposet and p.is_lattice
        rows.append(
            {
                "name": name,
                "size": p.n,
                "orthoposet": is_orthoposet,
                "lattice": lattice,
                "orthomodular": lattice and p.orthomodular_witness is None,
                "distributive": lattice and is_distributive(p),
            }
        )
    return pd.DataFrame(rows, columns=["name", "size", "orthoposet", "lattice", "orthomodular", "distributive"])

