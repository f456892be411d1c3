"""Sweep run and result tables

Revision ID: 0001_sweep_tables
Revises:
Create Date: 2026-10-19 09:00:00
"""

import sqlalchemy as sa
from alembic import op

# revision identifiers, used by Alembic.
revision = "0001_sweep_tables"
down_revision = None
branch_labels = None
depends_on = None


def upgrade():
    op.create_table(
        "sweep_runs",
        sa.Column("id", sa.Integer(), primary_key=True, index=True),
        sa.Column(
            "kind", sa.Enum("soundness", "cut_probe", name="sweep_kind"), nullable=False
        ),
        sa.Column("parameters", sa.JSON(), nullable=False),
        sa.Column("summary", sa.JSON(), nullable=False),
        sa.Column(
            "created_at", sa.DateTime(), server_default=sa.func.now(), nullable=False
        ),
    )
    op.create_table(
        "sweep_results",
        sa.Column("id", sa.Integer(), primary_key=True, index=True),
        sa.Column(
            "run_id",
            sa.Integer(),
            sa.ForeignKey("sweep_runs.id"),
            nullable=False,
            index=True,
        ),
        sa.Column("sequent", sa.Text(), nullable=False),
        sa.Column("outcome", sa.String(), nullable=False, index=True),
        sa.Column("model", sa.String()),
        sa.Column("detail", sa.JSON()),
    )


def downgrade():
    op.drop_table("sweep_results")
    op.drop_table("sweep_runs")
    # Drop enum type for Postgres
    op.execute("DROP TYPE IF EXISTS sweep_kind;")
