"""Alembic environment for the sweep store."""

import os
import sys
from logging.config import fileConfig

from alembic import context
from sqlalchemy import create_engine, pool

config = context.config

if config.config_file_name is not None:
    fileConfig(config.config_file_name)

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.db.models import Base  # noqa: E402
from src.settings import load_settings  # noqa: E402

target_metadata = Base.metadata


def database_url() -> str:
    """DATABASE_URL wins over the ini file so migrations hit the same store as the CLI."""
    if os.getenv("DATABASE_URL"):
        return load_settings().database_url
    return config.get_main_option("sqlalchemy.url") or load_settings().database_url


def run_migrations_offline():
    context.configure(url=database_url(), target_metadata=target_metadata, literal_binds=True)
    with context.begin_transaction():
        context.run_migrations()


def run_migrations_online():
    connectable = create_engine(database_url(), poolclass=pool.NullPool)
    with connectable.connect() as connection:
        context.configure(connection=connection, target_metadata=target_metadata, render_as_batch=True)
        with context.begin_transaction():
            context.run_migrations()


if context.is_offline_mode():
    run_migrations_offline()
else:
    run_migrations_online()
