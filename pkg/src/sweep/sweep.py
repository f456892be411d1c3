"""Corpus generation, the soundness sweep and the cut probe."""

from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd
from sqlalchemy.orm import Session

from src.db.models import SweepResult, SweepRun
from src.lattice.catalog import DEFAULT_COUNTERMODEL_CATALOG
from src.logging_config import get_logger
from src.metrics import measure_duration, sweep_duration_seconds
from src.proof.proof import (
    ProofSearch,
    SearchBudgetExceeded,
    check_derivation,
    rule_trace,
)
from src.semantics.semantics import Countermodel, find_countermodel
from src.settings import Settings, load_settings
from src.terms.terms import Atom, Ortho, Sasaki, Sequent, Term, format_sequent

logger = get_logger(__name__)

COLUMNS = ["sequent", "outcome", "nodes", "model", "valuations", "rule_trace"]

# soundness outcomes
PROVED, REFUTED, UNKNOWN, UNSOUND, BUDGET, ERROR = "proved", "refuted", "unknown", "unsound", "budget", "error"
# cut probe outcomes
RSOL_PROVED, CUT_ONLY, NEITHER = "rsol_proved", "cut_only", "neither"


def generate_terms(atom_names: Sequence[str], max_connectives: int) -> List[Term]:
    """All terms over ``atom_names`` with at most ``max_connectives`` occurrences of & and '.

    Ordered by size, then orthocomplements before & at each size, then by the
    order of their parts.
    """
    by_size: List[List[Term]] = [[Atom(a) for a in atom_names]]
    for k in range(1, max_connectives + 1):
        level: List[Term] = [Ortho(t) for t in by_size[k - 1]]
        for left_size in range(k):
            for left, right in product(by_size[left_size], by_size[k - 1 - left_size]):
                level.append(Sasaki(left, right))
        by_size.append(level)
    return [t for level in by_size for t in level]


def generate_corpus(atom_names: Sequence[str] = ("a", "b"), max_connectives: int = 3) -> List[Sequent]:
    """Every sequent whose sides are each in ``generate_terms(atom_names, max_connectives)``."""
    terms = generate_terms(atom_names, max_connectives)
    return [Sequent(lhs, rhs) for lhs, rhs in product(terms, terms)]


@dataclass
class SweepReport:
    """Per-sequent rows of a sweep plus the parameters it ran with."""

    kind: str
    parameters: Dict[str, Any] = field(default_factory=dict)
    rows: List[Dict[str, Any]] = field(default_factory=list)

    def add(self, s: Sequent, outcome: str, nodes: int = 0, model=None, valuations: int = 0, trace=None):
        self.rows.append(
            {
                "sequent": format_sequent(s),
                "outcome": outcome,
                "nodes": nodes,
                "model": model,
                "valuations": valuations,
                "rule_trace": trace or [],
            }
        )

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(self.rows, columns=COLUMNS)

    def counts(self) -> Dict[str, int]:
        return {outcome: int(n) for outcome, n in self.to_frame()["outcome"].value_counts().items()}

    def with_outcome(self, outcome: str) -> List[str]:
        return [row["sequent"] for row in self.rows if row["outcome"] == outcome]

    @property
    def violations(self) -> List[str]:
        """Sequents both proved and refuted."""
        return self.with_outcome(UNSOUND)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.with_outcome(BUDGET) and not self.with_outcome(ERROR)

    def to_csv(self, path: str) -> None:
        frame = self.to_frame()
        frame["rule_trace"] = frame["rule_trace"].map(" ".join)
        frame.to_csv(path, index=False)

    def summary(self) -> Dict[str, Any]:
        return {"kind": self.kind, "total": len(self.rows), "counts": self.counts(), **self.parameters}


@measure_duration(sweep_duration_seconds)
def soundness_sweep(
    corpus: Sequence[Sequent],
    catalog: Sequence[Union[str, Any]] = tuple(DEFAULT_COUNTERMODEL_CATALOG),
    settings: Optional[Settings] = None,
) -> SweepReport:
    """Decide every corpus sequent and model-check the proved ones.

    A proved sequent is re-checked against every valuation in every catalog
    model; a countermodel there is recorded as ``unsound``. Sequents the
    prover exhausts are refuted when the catalog has a countermodel and
    ``unknown`` otherwise.

    Args:
        corpus (Sequence[Sequent]): Sequents to sweep.
        catalog: Models for both soundness checks and refutation.
        settings (Optional[Settings]): Search budgets.

    Returns:
        SweepReport: One row per sequent.
    """
    settings = settings or load_settings()
    search = ProofSearch(settings)
    report = SweepReport("soundness", {"catalog": [getattr(c, "name", c) for c in catalog], "size": len(corpus)})

    for s in corpus:
        try:
            result = search.prove(s)
            found = find_countermodel(s, catalog, max_atoms=settings.max_atoms, max_valuations=settings.max_valuations)
            nodes = result.stats.nodes_visited
            if isinstance(found, Countermodel):
                if result.proved:
                    logger.error(
                        f"Proved sequent {format_sequent(s)} fails in {found.model.name}",
                        extra={"context": found.to_dict()},
                    )
                outcome = UNSOUND if result.proved else REFUTED
                trace = rule_trace(result.derivation) if result.proved else []
                report.add(s, outcome, nodes, found.model.name, 0, trace)
            elif result.proved:
                report.add(s, PROVED, nodes, None, found.valuations, rule_trace(result.derivation))
            else:
                report.add(s, UNKNOWN, nodes, None, found.valuations)
        except SearchBudgetExceeded as e:
            report.add(s, BUDGET, e.nodes)
        except Exception as e:
            logger.exception(f"Error sweeping {format_sequent(s)}: {e}")
            report.add(s, ERROR)

    logger.info("Soundness sweep finished", extra={"context": report.summary()})
    return report


@measure_duration(sweep_duration_seconds)
def cut_probe(
    corpus: Sequence[Sequent],
    settings: Optional[Settings] = None,
    cut_terms: Optional[Sequence[Term]] = None,
    cut_depth: Optional[int] = None,
) -> SweepReport:
    """Find corpus sequents that RSOL/T exhausts but search with T proves.

    Every T-proof is re-checked with cuts allowed before it is reported.
    """
    settings = settings or load_settings()
    plain = ProofSearch(settings)
    with_cut = ProofSearch(settings, allow_cut=True, cut_terms=cut_terms, cut_depth=cut_depth, share=plain)
    report = SweepReport("cut_probe", {"size": len(corpus), "cut_depth": with_cut.cut_depth})

    for s in corpus:
        try:
            result = plain.prove(s)
            if result.proved:
                report.add(s, RSOL_PROVED, result.stats.nodes_visited, trace=rule_trace(result.derivation))
                continue
            cut_result = with_cut.prove(s)
            if cut_result.proved:
                check_derivation(cut_result.derivation, allow_T=True)
                logger.info(f"T helps on {format_sequent(s)}")
                report.add(s, CUT_ONLY, cut_result.stats.nodes_visited, trace=rule_trace(cut_result.derivation))
            else:
                report.add(s, NEITHER, cut_result.stats.nodes_visited)
        except SearchBudgetExceeded as e:
            report.add(s, BUDGET, e.nodes)
        except Exception as e:
            logger.exception(f"Error probing {format_sequent(s)}: {e}")
            report.add(s, ERROR)

    logger.info("Cut probe finished", extra={"context": report.summary()})
    return report


def store_report(db: Session, report: SweepReport) -> int:
    """Persist a sweep report as one SweepRun with a SweepResult per row.

    Args:
        db (Session): SQLAlchemy Session object.
        report (SweepReport): Report to store.

    Returns:
        int: Id of the new SweepRun.
    """
    run = SweepRun(kind=report.kind, parameters=report.parameters, summary=report.counts())
    for row in report.rows:
        run.results.append(
            SweepResult(
                sequent=row["sequent"],
                outcome=row["outcome"],
                model=row["model"],
                detail={"nodes": row["nodes"], "valuations": row["valuations"], "rule_trace": row["rule_trace"]},
            )
        )
    db.add(run)
    db.flush()
    logger.info(f"Stored {report.kind} sweep run {run.id} with {len(report.rows)} results")
    return run.id
