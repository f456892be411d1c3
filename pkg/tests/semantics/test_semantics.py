"""Unit tests for the semantics module."""

import itertools
import unittest

from hypothesis import given, settings
from hypothesis import strategies as st

from src.lattice.catalog import DEFAULT_COUNTERMODEL_CATALOG, boolean_algebra, from_dict, get_structure, mo, o6, to_dict
from src.lattice.lattice import OrthoposetError, derived_sasaki_table
from src.semantics.semantics import (
    AtomBudgetError,
    Countermodel,
    InvalidModelError,
    NotFound,
    Refuter,
    SasakiModel,
    UnboundAtomError,
    evaluate_all,
    find_countermodel,
    holds,
    interpret,
    lattice_table,
)
from src.sweep.sweep import generate_corpus, generate_terms
from src.terms.terms import Atom, Ortho, atoms, parse_sequent, parse_term
from tests.strategies import terms


class TestInterpret(unittest.TestCase):
    """Test cases for interpretation in a single model."""

    def setUp(self):
        self.mo2 = mo(2)
        self.model = SasakiModel.over(self.mo2, {"a": "x", "b": "y"})

    def test_atoms_and_ortho(self):
        self.assertEqual(interpret(self.model, parse_term("a")), self.mo2.index("x"))
        self.assertEqual(interpret(self.model, parse_term("a'")), self.mo2.index("x'"))
        self.assertEqual(interpret(self.model, parse_term("a''")), self.mo2.index("x"))

    def test_sasaki(self):
        self.assertEqual(interpret(self.model, parse_term("a & b")), self.mo2.index("y"))
        self.assertEqual(interpret(self.model, parse_term("b & a")), self.mo2.index("x"))

    def test_holds(self):
        self.assertTrue(holds(self.model, parse_sequent("a & b <= b")))
        self.assertFalse(holds(self.model, parse_sequent("a & b <= b & a")))

    def test_unbound_atom(self):
        with self.assertRaises(UnboundAtomError):
            interpret(self.model, parse_term("c"))

    def test_invalid_table_is_rejected(self):
        p = boolean_algebra(1)
        with self.assertRaises(InvalidModelError):
            SasakiModel(p, derived_sasaki_table(p).with_entry(0, 1, 1), {"a": 0})

    def test_countermodel_dict(self):
        cm = Countermodel(self.model, self.mo2.index("y"), self.mo2.index("x"))
        self.assertEqual(
            cm.to_dict(),
            {"model": "mo2", "valuation": {"a": "x", "b": "y"}, "lhs": "y", "rhs": "x"},
        )


class TestEvaluateAll(unittest.TestCase):
    """Test cases for the vectorised evaluator."""

    @settings(max_examples=40, deadline=None)
    @given(terms(st.sampled_from(["a", "b"]), max_leaves=6), st.sampled_from(["boolean2", "mo2", "mo2xboolean1"]))
    def test_agrees_with_interpret(self, t, name):
        p = get_structure(name)
        table = lattice_table(p)
        order = ["a", "b"]
        values = evaluate_all(p, table, t, order)
        for va, vb in itertools.product(p.elements, repeat=2):
            model = SasakiModel(p, table, {"a": va, "b": vb})
            self.assertEqual(int(values[va, vb]), interpret(model, t))

    def test_shape_covers_missing_atoms(self):
        p = mo(2)
        values = evaluate_all(p, lattice_table(p), parse_term("a'"), ["a", "b"])
        self.assertEqual(values.shape, (6, 6))


class TestFindCountermodel(unittest.TestCase):
    """Test cases for countermodel search."""

    def test_weakening_is_refuted_in_boolean1(self):
        found = find_countermodel(parse_sequent("a <= a & b"))
        self.assertIsInstance(found, Countermodel)
        self.assertEqual(found.model.name, "boolean1")
        self.assertEqual(found.to_dict()["valuation"], {"a": "1", "b": "0"})

    def test_commutativity_is_refuted_in_mo2(self):
        found = find_countermodel(parse_sequent("a & b <= b & a"))
        self.assertIsInstance(found, Countermodel)
        self.assertEqual(
            found.to_dict(),
            {"model": "mo2", "valuation": {"a": "x", "b": "y"}, "lhs": "y", "rhs": "x"},
        )

    def test_deterministic(self):
        s = parse_sequent("a & b <= b & a")
        self.assertEqual(find_countermodel(s).to_dict(), find_countermodel(s).to_dict())

    def test_valid_sequent_reports_search_space(self):
        found = find_countermodel(parse_sequent("a & b <= b"), ["boolean2", "mo2"])
        self.assertIsInstance(found, NotFound)
        self.assertFalse(found.partial)
        self.assertEqual(found.valuations, 16 + 36)

    def test_skips_over_budget_and_non_orthomodular(self):
        found = find_countermodel(parse_sequent("a & b <= b"), ["boolean4", o6(), "mo2"], max_valuations=100)
        self.assertIsInstance(found, NotFound)
        self.assertTrue(found.partial)
        self.assertEqual([m.skipped is not None for m in found.searched], [True, True, False])

    def test_structures_that_are_not_orthoposets_are_skipped(self):
        data = to_dict(boolean_algebra(2))
        data["name"] = "collapsed"
        data["ortho"] = {name: "0" for name in data["elements"]}
        collapsed = from_dict(data)
        s = parse_sequent("a <= a''")
        found = find_countermodel(s, [collapsed, "mo2"])
        self.assertIsInstance(found, NotFound)
        self.assertEqual(found.searched[0].name, "collapsed")
        self.assertEqual(found.searched[0].skipped, "not an orthoposet")
        self.assertEqual(found.searched[1].valuations, 6)
        with self.assertRaises(InvalidModelError):
            SasakiModel.over(collapsed, {"a": "p"})

    def test_atom_budget(self):
        s = parse_sequent("a & b <= c & d & e")
        self.assertEqual(len(atoms(s)), 5)
        with self.assertRaises(AtomBudgetError):
            find_countermodel(s, max_atoms=4)

def direct_value(p, t, valuation):
    """Evaluate with x & y = y meet (y' join x), straight from the meet and join tables."""
    if isinstance(t, Atom):
        return valuation[t.name]
    if isinstance(t, Ortho):
        return int(p.ortho[direct_value(p, t.inner, valuation)])
    left, right = direct_value(p, t.left, valuation), direct_value(p, t.right, valuation)
    return int(p.meet_table[right, p.join_table[p.ortho[right], left]])


class TestDirectEvaluation(unittest.TestCase):
    """Test cases comparing interpretation with the lattice operations."""

    STRUCTURES = ["boolean2", "mo2", "mo3"]

    def valuations(self, p):
        for x, y in itertools.product(range(p.n), repeat=2):
            yield {"a": x, "b": y}

    def test_terms_match_meet_join_formula(self):
        for name in self.STRUCTURES:
            p = get_structure(name)
            for valuation in self.valuations(p):
                model = SasakiModel.over(p, valuation)
                for t in generate_terms(["a", "b"], 3):
                    self.assertEqual(interpret(model, t), direct_value(p, t, valuation), f"{t} in {name} at {valuation}")

    def test_holds_matches_meet_join_formula(self):
        corpus = generate_corpus(["a", "b"], 3)[::97]
        for name in self.STRUCTURES:
            p = get_structure(name)
            for valuation in self.valuations(p):
                model = SasakiModel.over(p, valuation)
                for s in corpus:
                    expected = p.le(direct_value(p, s.lhs, valuation), direct_value(p, s.rhs, valuation))
                    self.assertEqual(holds(model, s), expected, f"{s} in {name} at {valuation}")

    def test_r_law_holds_across_default_catalog(self):
        found = find_countermodel(parse_sequent("a & b <= b"), DEFAULT_COUNTERMODEL_CATALOG)
        self.assertIsInstance(found, NotFound)
        self.assertFalse(found.partial)
        self.assertEqual([m.name for m in found.searched], DEFAULT_COUNTERMODEL_CATALOG)


class TestRefuter(unittest.TestCase):
    """Test cases for the memoised single-model refuter."""

    def test_agrees_with_countermodel_search(self):
        refuter = Refuter(mo(2), ["a", "b"])
        for s in generate_corpus(["a", "b"], 2)[::11]:
            with self.subTest(sequent=str(s)):
                found = find_countermodel(s, ["mo2"])
                self.assertEqual(refuter.refutes(s), isinstance(found, Countermodel))

    def test_values_are_memoised(self):
        refuter = Refuter(mo(2), ["a", "b"])
        self.assertEqual(len(refuter), 2)
        refuter.refutes(parse_sequent("a & b <= b'"))
        self.assertEqual(len(refuter), 4)
        self.assertEqual(refuter.valuations, 36)

    def test_foreign_atoms_are_not_refuted(self):
        self.assertFalse(Refuter(mo(2), ["a"]).refutes(parse_sequent("a <= b")))

    def test_non_orthomodular_model_is_rejected(self):
        with self.assertRaises(OrthoposetError):
            Refuter(o6(), ["a"])



if __name__ == "__main__":
    unittest.main()
