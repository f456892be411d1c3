"""Unit tests for the database session helper and models."""

import unittest
from unittest.mock import MagicMock, patch

from src.db.models import SweepResult, SweepRun
from src.db.session import get_db_session
from tests.conftest import StoreTestCase


class TestGetDbSession(unittest.TestCase):
    """Test cases for the session context manager."""

    @patch("src.db.session.SessionLocal")
    def test_commits_and_closes(self, mock_factory):
        mock_session = MagicMock()
        mock_factory.return_value = mock_session
        with get_db_session() as db:
            self.assertIs(db, mock_session)
        mock_session.commit.assert_called_once()
        mock_session.close.assert_called_once()

    @patch("src.db.session.SessionLocal")
    def test_rolls_back_on_error(self, mock_factory):
        mock_session = MagicMock()
        mock_factory.return_value = mock_session
        with self.assertRaises(ValueError):
            with get_db_session():
                raise ValueError("boom")
        mock_session.rollback.assert_called_once()
        mock_session.commit.assert_not_called()
        mock_session.close.assert_called_once()


class TestModels(StoreTestCase):
    """Test cases for the sweep tables."""

    def test_results_cascade_with_run(self):
        run = SweepRun(kind="cut_probe", parameters={"size": 1}, summary={"neither": 1})
        run.results.append(SweepResult(sequent="a <= b", outcome="neither", detail={"nodes": 3}))
        self.db.add(run)
        self.db.flush()
        self.assertEqual(self.db.query(SweepResult).filter_by(run_id=run.id).count(), 1)
        self.db.delete(run)
        self.db.flush()
        self.assertEqual(self.db.query(SweepResult).count(), 0)


if __name__ == "__main__":
    unittest.main()
