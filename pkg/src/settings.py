"""Runtime settings read from the environment.

Every knob has a default suitable for the built-in catalog; CLI flags
override individual values for one invocation via ``Settings.replace``.
"""

import dataclasses
import os
from dataclasses import dataclass


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable {name} must be an integer, got {raw!r}")


@dataclass(frozen=True)
class Settings:
    """Search budgets, size caps and storage location.

    Attributes:
        node_budget (int): Maximum proof-search nodes per query.
        ortho_slack (int): Orthocomplements a sequent in the search may carry beyond the root's total.
        max_depth (int): Maximum height of a derivation the search returns.
        cut_depth (int): Maximum nesting of T at the conclusion end when cuts are enabled.
        prune_model (str): Catalog structure whose countermodels prune the search; empty disables.
        max_atoms (int): Maximum distinct atoms a countermodel search accepts.
        max_valuations (int): Valuations per model above which the model is skipped.
        closure_cap (int): Size cap for generated-subalgebra closure.
        database_url (str): SQLAlchemy URL for persisted sweep runs.
    """

    node_budget: int = 200_000
    ortho_slack: int = 2
    max_depth: int = 2_000
    cut_depth: int = 1
    prune_model: str = "mo2"
    max_atoms: int = 4
    max_valuations: int = 100_000
    closure_cap: int = 4096
    database_url: str = "sqlite:///./sasaki.db"

    def replace(self, **changes) -> "Settings":
        """Return a copy with the non-None ``changes`` applied."""
        return dataclasses.replace(self, **{k: v for k, v in changes.items() if v is not None})


def load_settings() -> Settings:
    """Build Settings from SASAKI_* environment variables and DATABASE_URL."""
    defaults = Settings()
    return Settings(
        node_budget=_int_env("SASAKI_NODE_BUDGET", defaults.node_budget),
        ortho_slack=_int_env("SASAKI_ORTHO_SLACK", defaults.ortho_slack),
        max_depth=_int_env("SASAKI_MAX_DEPTH", defaults.max_depth),
        cut_depth=_int_env("SASAKI_CUT_DEPTH", defaults.cut_depth),
        prune_model=os.getenv("SASAKI_PRUNE_MODEL", defaults.prune_model).strip(),
        max_atoms=_int_env("SASAKI_MAX_ATOMS", defaults.max_atoms),
        max_valuations=_int_env("SASAKI_MAX_VALUATIONS", defaults.max_valuations),
        closure_cap=_int_env("SASAKI_CLOSURE_CAP", defaults.closure_cap),
        database_url=os.getenv("DATABASE_URL", defaults.database_url),
    )
