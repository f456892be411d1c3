"""Sasaki models, the interpretation function and countermodel search."""

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Sequence, Union

import numpy as np

from src.lattice.catalog import DEFAULT_COUNTERMODEL_CATALOG, get_structure
from src.lattice.lattice import (
    FiniteOrthoposet,
    OrthoposetError,
    SasakiTable,
    derived_sasaki_table,
    validate_orthoposet,
)
from src.logging_config import get_logger
from src.metrics import countermodel_search_duration_seconds, measure_duration
from src.settings import load_settings
from src.terms.terms import Atom, Ortho, Sequent, Term, atoms, format_sequent

logger = get_logger(__name__)


class SemanticsError(Exception):
    """Base class for model and search errors."""


class UnboundAtomError(SemanticsError):
    def __init__(self, atom: str, model: str):
        self.atom = atom
        super().__init__(f"Atom {atom!r} has no value in model {model}")


class InvalidModelError(SemanticsError):
    """The model's table is not a Sasaki operation on its structure."""


class AtomBudgetError(SemanticsError):
    """The sequent has more atoms than the search accepts; nothing was searched."""

    def __init__(self, atom_count: int, max_atoms: int):
        self.atom_count, self.max_atoms = atom_count, max_atoms
        super().__init__(f"Sequent has {atom_count} atoms, search accepts at most {max_atoms}")


@lru_cache(maxsize=None)
def lattice_table(p: FiniteOrthoposet) -> SasakiTable:
    """The Sasaki table derived from an orthomodular lattice, computed once per structure.

    Raises:
        InvalidModelError: p fails the orthoposet laws.
        OrthoposetError: p is not an orthomodular lattice.
    """
    report = validate_orthoposet(p)
    if not report.ok:
        raise InvalidModelError(f"{p.name} is not an orthoposet: fails {report.axioms()}")
    return derived_sasaki_table(p)


@dataclass
class SasakiModel:
    """A structure with a validated Sasaki table and a valuation of atoms."""

    poset: FiniteOrthoposet
    table: SasakiTable
    valuation: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        report = self.table.axiom_report
        if not report.ok:
            raise InvalidModelError(f"Table on {self.poset.name} violates {report.axioms()}")

    @classmethod
    def over(cls, poset: FiniteOrthoposet, valuation: Mapping[str, Union[int, str]]) -> "SasakiModel":
        """Model over an orthomodular lattice with its derived table; values may be ids or element names."""
        resolved = {atom: poset.index(v) if isinstance(v, str) else int(v) for atom, v in valuation.items()}
        return cls(poset, lattice_table(poset), resolved)

    @property
    def name(self) -> str:
        return self.poset.name

    def to_dict(self) -> Dict:
        return {
            "model": self.name,
            "valuation": {atom: self.poset.names[v] for atom, v in sorted(self.valuation.items())},
        }


@dataclass
class Countermodel:
    model: SasakiModel
    lhs_value: int
    rhs_value: int

    def to_dict(self) -> Dict:
        names = self.model.poset.names
        data = self.model.to_dict()
        data.update({"lhs": names[self.lhs_value], "rhs": names[self.rhs_value]})
        return data


@dataclass(frozen=True)
class SearchedModel:
    name: str
    valuations: int
    skipped: Optional[str] = None


@dataclass
class NotFound:
    """No countermodel in the searched family; says nothing about validity beyond it."""

    searched: List[SearchedModel] = field(default_factory=list)

    @property
    def partial(self) -> bool:
        return any(m.skipped for m in self.searched)

    @property
    def valuations(self) -> int:
        return sum(m.valuations for m in self.searched)

    def to_dict(self) -> Dict:
        return {
            "partial": self.partial,
            "valuations": self.valuations,
            "searched": [
                {"model": m.name, "valuations": m.valuations, **({"skipped": m.skipped} if m.skipped else {})}
                for m in self.searched
            ],
        }


def interpret(m: SasakiModel, t: Term) -> int:
    """Structural recursion: atoms via the valuation, ' via the orthocomplement, & via the table."""
    if isinstance(t, Atom):
        try:
            return m.valuation[t.name]
        except KeyError:
            raise UnboundAtomError(t.name, m.name)
    if isinstance(t, Ortho):
        return int(m.poset.ortho[interpret(m, t.inner)])
    return m.table(interpret(m, t.left), interpret(m, t.right))


def holds(m: SasakiModel, s: Sequent) -> bool:
    return m.poset.le(interpret(m, s.lhs), interpret(m, s.rhs))


def evaluate_all(poset: FiniteOrthoposet, table: SasakiTable, t: Term, atom_order: Sequence[str]) -> np.ndarray:
    """Value of t under every valuation of ``atom_order`` at once.

    Axis i of the result ranges over the value of ``atom_order[i]``, so a
    C-order ravel lists valuations lexicographically, first atom slowest.
    """
    k, n = len(atom_order), poset.n
    axes = {}
    for i, atom in enumerate(atom_order):
        shape = [1] * k
        shape[i] = n
        axes[atom] = np.arange(n).reshape(shape)

    def walk(node):
        if isinstance(node, Atom):
            if node.name not in axes:
                raise UnboundAtomError(node.name, poset.name)
            return axes[node.name]
        if isinstance(node, Ortho):
            return poset.ortho[walk(node.inner)]
        return table.values[walk(node.left), walk(node.right)]

    return np.broadcast_to(walk(t), (n,) * k)


def _as_structure(entry: Union[str, FiniteOrthoposet]) -> FiniteOrthoposet:
    return get_structure(entry) if isinstance(entry, str) else entry


@measure_duration(countermodel_search_duration_seconds)
def find_countermodel(
    s: Sequent,
    catalog: Sequence[Union[str, FiniteOrthoposet]] = tuple(DEFAULT_COUNTERMODEL_CATALOG),
    max_atoms: Optional[int] = None,
    max_valuations: Optional[int] = None,
) -> Union[Countermodel, NotFound]:
    """Search every valuation of the sequent's atoms in each structure, in order.

    Structures are tried in catalog order and valuations lexicographically
    (atoms sorted by name, first atom slowest); the first failure wins.

    Args:
        s (Sequent): Sequent to refute.
        catalog: Catalog names or structures.
        max_atoms (Optional[int]): Atom limit (default from settings).
        max_valuations (Optional[int]): Structures needing more valuations are skipped and recorded.

    Returns:
        Countermodel | NotFound: The first countermodel, or the space searched.

    Raises:
        AtomBudgetError: Too many atoms.
    """
    settings = load_settings()
    max_atoms = settings.max_atoms if max_atoms is None else max_atoms
    max_valuations = settings.max_valuations if max_valuations is None else max_valuations
    atom_order = atoms(s)
    if len(atom_order) > max_atoms:
        raise AtomBudgetError(len(atom_order), max_atoms)

    not_found = NotFound()
    for entry in catalog:
        poset = _as_structure(entry)
        count = poset.n ** len(atom_order)
        if count > max_valuations:
            logger.warning(f"Skipping {poset.name}: {count} valuations exceed budget {max_valuations}")
            not_found.searched.append(SearchedModel(poset.name, 0, f"{count} valuations exceed budget"))
            continue
        try:
            table = lattice_table(poset)
        except InvalidModelError as e:
            logger.warning(f"Skipping {poset.name}: {e}")
            not_found.searched.append(SearchedModel(poset.name, 0, "not an orthoposet"))
            continue
        except OrthoposetError as e:
            logger.warning(f"Skipping {poset.name}: not a Sasaki structure ({e})")
            not_found.searched.append(SearchedModel(poset.name, 0, "not an orthomodular lattice"))
            continue
        lhs = evaluate_all(poset, table, s.lhs, atom_order).ravel()
        rhs = evaluate_all(poset, table, s.rhs, atom_order).ravel()
        failures = np.flatnonzero(~poset.leq[lhs, rhs])
        if len(failures):
            first = int(failures[0])
            values = np.unravel_index(first, (poset.n,) * len(atom_order))
            model = SasakiModel(poset, table, {atom: int(v) for atom, v in zip(atom_order, values)})
            logger.info(
                f"Countermodel for {format_sequent(s)} in {poset.name}",
                extra={"context": model.to_dict()},
            )
            return Countermodel(model, int(lhs[first]), int(rhs[first]))
        not_found.searched.append(SearchedModel(poset.name, count))

    logger.info(f"No countermodel for {format_sequent(s)} over {not_found.valuations} valuations")
    return not_found


class Refuter:
    """Rejects sequents that fail under some valuation in one fixed model.

    Values of terms over every valuation of ``atom_order`` are computed once
    and kept, so a sequent built from known subterms costs one comparison per
    valuation.

    Args:
        poset (FiniteOrthoposet): An orthomodular lattice.
        atom_order (Sequence[str]): Atoms the valuations range over.

    Raises:
        InvalidModelError, OrthoposetError: poset carries no Sasaki table.
    """

    def __init__(self, poset: FiniteOrthoposet, atom_order: Sequence[str]):
        self.poset = poset
        self.table = lattice_table(poset)
        self.atom_order = tuple(atom_order)
        self._values: Dict[Term, np.ndarray] = {
            Atom(atom): evaluate_all(poset, self.table, Atom(atom), self.atom_order).ravel()
            for atom in self.atom_order
        }

    @property
    def valuations(self) -> int:
        return self.poset.n ** len(self.atom_order)

    def values(self, t: Term) -> np.ndarray:
        """Value of t under each valuation, lexicographic as in ``evaluate_all``."""
        found = self._values.get(t)
        if found is not None:
            return found
        if isinstance(t, Atom):
            raise UnboundAtomError(t.name, self.poset.name)
        if isinstance(t, Ortho):
            found = self.poset.ortho[self.values(t.inner)]
        else:
            found = self.table.values[self.values(t.left), self.values(t.right)]
        self._values[t] = found
        return found

    def refutes(self, s: Sequent) -> bool:
        """True when s fails under some valuation; atoms outside ``atom_order`` are never refuted."""
        try:
            lhs, rhs = self.values(s.lhs), self.values(s.rhs)
        except UnboundAtomError:
            return False
        return not bool(self.poset.leq[lhs, rhs].all())

    def __len__(self) -> int:
        return len(self._values)
