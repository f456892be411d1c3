"""Database ORM models for persisted corpus sweeps.

This module defines the SQLAlchemy models SweepRun and SweepResult.
"""

from sqlalchemy import (
    JSON,
    Column,
    DateTime,
    Enum,
    ForeignKey,
    Integer,
    String,
    Text,
)
from sqlalchemy.ext.declarative import declarative_base
from sqlalchemy.orm import relationship
from sqlalchemy.sql import func

Base = declarative_base()


class SweepRun(Base):
    """ORM model for sweep_runs table.

    Attributes:
        id (int): Primary key.
        kind (str): 'soundness' or 'cut_probe'.
        parameters (JSON): Corpus bounds and search settings used.
        summary (JSON): Outcome counts, e.g. {"proved": 10, "refuted": 3}.
        created_at (datetime): Timestamp when the run was stored.
    """

    __tablename__ = "sweep_runs"
    id = Column(Integer, primary_key=True, index=True)
    kind = Column(Enum("soundness", "cut_probe", name="sweep_kind"), nullable=False)
    parameters = Column(JSON, nullable=False)
    summary = Column(JSON, nullable=False)
    created_at = Column(DateTime, server_default=func.now(), nullable=False)

    results = relationship("SweepResult", back_populates="run", cascade="all, delete-orphan")


class SweepResult(Base):
    """ORM model for sweep_results table, one row per corpus sequent.

    Attributes:
        id (int): Primary key.
        run_id (int): Foreign key referencing sweep_runs.id.
        sequent (str): Printed sequent.
        outcome (str): Sweep outcome, e.g. 'proved', 'refuted', 'unsound', 'cut_only'.
        model (str): Countermodel structure name, if any.
        detail (JSON): Valuation, rule trace or search statistics.
    """

    __tablename__ = "sweep_results"
    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("sweep_runs.id"), nullable=False, index=True)
    sequent = Column(Text, nullable=False)
    outcome = Column(String, nullable=False, index=True)
    model = Column(String)
    detail = Column(JSON)

    run = relationship("SweepRun", back_populates="results")
