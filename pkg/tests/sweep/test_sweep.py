"""Unit tests for corpus generation, the soundness sweep and the cut report."""

import os
import tempfile
import time
import unittest
from unittest.mock import patch

import pandas as pd

from src.db.models import SweepResult, SweepRun
from src.semantics.semantics import Countermodel, find_countermodel
from src.settings import Settings
from src.sweep.sweep import (
    BUDGET,
    CUT_ONLY,
    ERROR,
    PROVED,
    REFUTED,
    RSOL_PROVED,
    UNSOUND,
    cut_probe,
    generate_corpus,
    generate_terms,
    soundness_sweep,
    store_report,
)
from src.terms.terms import parse_sequent, size
from tests.conftest import StoreTestCase

FULL_CORPUS = os.getenv("SASAKI_FULL_CORPUS") == "1"


class TestCorpus(unittest.TestCase):
    """Test cases for term and sequent enumeration."""

    def test_term_counts(self):
        self.assertEqual(len(generate_terms(["a", "b"], 0)), 2)
        self.assertEqual(len(generate_terms(["a", "b"], 1)), 8)
        self.assertEqual(len(generate_terms(["a", "b"], 2)), 38)
        self.assertEqual(len(generate_terms(["a", "b"], 3)), 224)

    def test_terms_are_distinct_and_bounded(self):
        found = generate_terms(["a", "b"], 3)
        self.assertEqual(len(set(found)), len(found))
        self.assertTrue(all(size(t) <= 3 for t in found))

    def test_corpus_order_is_deterministic(self):
        corpus = generate_corpus(["a", "b"], 1)
        self.assertEqual(len(corpus), 64)
        self.assertEqual(corpus[0], parse_sequent("a <= a"))
        self.assertEqual(corpus, generate_corpus(["a", "b"], 1))


class TestSoundnessSweep(unittest.TestCase):
    """Test cases for the soundness sweep."""

    def test_small_corpus(self):
        report = soundness_sweep(generate_corpus(["a", "b"], 1))
        self.assertTrue(report.ok)
        self.assertEqual(report.violations, [])
        counts = report.counts()
        self.assertEqual(sum(counts.values()), 64)
        self.assertGreater(counts[PROVED], 0)
        self.assertGreater(counts[REFUTED], 0)
        frame = report.to_frame().set_index("sequent")
        self.assertEqual(frame.loc["a <= a", "outcome"], PROVED)
        self.assertEqual(frame.loc["a <= b", "outcome"], REFUTED)

    def test_two_connective_corpus(self):
        report = soundness_sweep(generate_corpus(["a", "b"], 2))
        self.assertEqual(len(report.rows), 38 * 38)
        self.assertEqual(report.violations, [])
        self.assertNotIn(BUDGET, report.counts())
        self.assertNotIn(ERROR, report.counts())

    def test_three_connective_corpus(self):
        started = time.perf_counter()
        report = soundness_sweep(generate_corpus(["a", "b"], 3))
        self.assertLess(time.perf_counter() - started, 300)
        self.assertEqual(len(report.rows), 224 * 224)
        self.assertEqual(report.violations, [])
        self.assertNotIn(BUDGET, report.counts())
        self.assertNotIn(ERROR, report.counts())

    def test_proved_and_refuted_is_reported_as_unsound(self):
        fake = find_countermodel(parse_sequent("a <= b"))
        with patch("src.sweep.sweep.find_countermodel", return_value=fake):
            report = soundness_sweep([parse_sequent("a <= a")])
        self.assertEqual(report.violations, ["a <= a"])
        self.assertEqual(report.rows[0]["outcome"], UNSOUND)
        self.assertFalse(report.ok)

    def test_item_errors_do_not_stop_the_sweep(self):
        real = find_countermodel

        def flaky(s, *args, **kwargs):
            if s == parse_sequent("a <= b"):
                raise RuntimeError("boom")
            return real(s, *args, **kwargs)

        with patch("src.sweep.sweep.find_countermodel", side_effect=flaky):
            report = soundness_sweep([parse_sequent("a <= b"), parse_sequent("a <= a")])
        self.assertEqual([row["outcome"] for row in report.rows], [ERROR, PROVED])

    def test_budget_rows(self):
        report = soundness_sweep([parse_sequent("a & b <= b")], settings=Settings(node_budget=1))
        self.assertEqual(report.rows[0]["outcome"], BUDGET)

    def test_csv_export(self):
        report = soundness_sweep(generate_corpus(["a"], 1))
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, "sweep.csv")
            report.to_csv(path)
            frame = pd.read_csv(path)
        self.assertEqual(list(frame.columns), ["sequent", "outcome", "nodes", "model", "valuations", "rule_trace"])
        self.assertEqual(len(frame), 9)


class TestCutProbe(unittest.TestCase):
    """Test cases for the cut report."""

    def test_cut_report_is_consistent(self):
        report = cut_probe(generate_corpus(["a", "b"], 1))
        self.assertEqual(len(report.rows), 64)
        self.assertNotIn(BUDGET, report.counts())
        self.assertNotIn(ERROR, report.counts())
        for text in report.with_outcome(CUT_ONLY):
            with self.subTest(sequent=text):
                self.assertNotIsInstance(find_countermodel(parse_sequent(text)), Countermodel)

    def test_two_connective_cut_search(self):
        report = cut_probe(generate_corpus(["a", "b"], 2))
        self.assertEqual(len(report.rows), 38 * 38)
        self.assertNotIn(BUDGET, report.counts())
        self.assertNotIn(ERROR, report.counts())
        self.assertGreater(report.counts()[RSOL_PROVED], 0)

    @unittest.skipIf(not FULL_CORPUS, "Set SASAKI_FULL_CORPUS=1 to run the cut search over all sequents with up to 3 connectives per side")
    def test_three_connective_cut_search(self):
        report = cut_probe(generate_corpus(["a", "b"], 3))
        self.assertNotIn(BUDGET, report.counts())
        self.assertNotIn(ERROR, report.counts())


class TestStore(StoreTestCase):
    """Test cases for persisting sweep reports."""

    def test_store_report(self):
        report = soundness_sweep(generate_corpus(["a"], 1))
        run_id = store_report(self.db, report)
        run = self.db.query(SweepRun).filter_by(id=run_id).one()
        self.assertEqual(run.kind, "soundness")
        self.assertEqual(sum(run.summary.values()), 9)
        results = self.db.query(SweepResult).filter_by(run_id=run_id).all()
        self.assertEqual(len(results), 9)
        self.assertEqual({r.sequent for r in results}, {row["sequent"] for row in report.rows})


if __name__ == "__main__":
    unittest.main()
