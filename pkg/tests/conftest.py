"""Shared test setup: project root on sys.path and an in-memory sweep store."""

import os
import sys
import unittest

from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker
from sqlalchemy.pool import StaticPool

sys.path.insert(0, os.path.abspath(os.path.dirname(os.path.dirname(__file__))))

from src.db.models import Base  # noqa: E402

# One connection shared by every session so the in-memory tables persist
test_engine = create_engine(
    "sqlite:///:memory:", connect_args={"check_same_thread": False}, poolclass=StaticPool
)
TestSessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=test_engine)


class StoreTestCase(unittest.TestCase):
    """Creates the sweep tables once per class and hands each test a fresh session."""

    @classmethod
    def setUpClass(cls):
        Base.metadata.create_all(bind=test_engine)

    @classmethod
    def tearDownClass(cls):
        Base.metadata.drop_all(bind=test_engine)

    def setUp(self):
        self.db = TestSessionLocal()

    def tearDown(self):
        self.db.rollback()
        self.db.close()
