"""Unit tests for the terms module."""

import unittest

from hypothesis import given

from src.terms.terms import (
    END,
    OPERAND_START,
    Atom,
    Ortho,
    Sasaki,
    Sequent,
    TermFormatError,
    TermSyntaxError,
    atoms,
    connective_count,
    format_sequent,
    format_term,
    ortho_count,
    parse_sequent,
    parse_term,
    sequent_from_json,
    sequent_to_json,
    size,
    subterms,
    term_from_json,
    term_to_json,
)
from tests.strategies import sequents, terms

a, b, c = Atom("a"), Atom("b"), Atom("c")


class TestParse(unittest.TestCase):
    """Test cases for parsing terms and sequents."""

    def test_sasaki_is_left_associative(self):
        self.assertEqual(parse_term("a & b & c"), Sasaki(Sasaki(a, b), c))

    def test_ortho_binds_tighter_than_sasaki(self):
        self.assertEqual(parse_term("a' & b"), Sasaki(Ortho(a), b))
        self.assertEqual(parse_term("a & b'"), Sasaki(a, Ortho(b)))

    def test_double_ortho_is_kept(self):
        self.assertEqual(parse_term("a''"), Ortho(Ortho(a)))

    def test_parenthesised_ortho(self):
        self.assertEqual(parse_term("(a & b)'"), Ortho(Sasaki(a, b)))
        self.assertEqual(parse_term("a & (b & c)"), Sasaki(a, Sasaki(b, c)))

    def test_whitespace_is_ignored(self):
        self.assertEqual(parse_term("  a&b  "), Sasaki(a, b))

    def test_parse_sequent(self):
        self.assertEqual(parse_sequent("a & b <= b"), Sequent(Sasaki(a, b), b))

    def test_dangling_operator(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_term("a &")
        self.assertEqual(ctx.exception.offset, 3)
        self.assertEqual(ctx.exception.expected, OPERAND_START)

    def test_missing_operator(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_term("a b")
        self.assertEqual(ctx.exception.offset, 2)
        self.assertEqual(ctx.exception.expected, frozenset({"&", "'", END}))

    def test_unbalanced_parenthesis(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_term("(a & b")
        self.assertEqual(ctx.exception.offset, 6)
        self.assertIn(")", ctx.exception.expected)
        with self.assertRaises(TermSyntaxError):
            parse_term("a)")

    def test_bad_character(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_term("a | b")
        self.assertEqual(ctx.exception.offset, 2)

    def test_missing_and_duplicate_relation(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_sequent("a & b")
        self.assertIn("<=", ctx.exception.expected)
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_sequent("a <= b <= c")
        self.assertEqual(ctx.exception.offset, 7)

    def test_rhs_offset_is_relative_to_sequent(self):
        with self.assertRaises(TermSyntaxError) as ctx:
            parse_sequent("a <= b &")
        self.assertEqual(ctx.exception.offset, 8)

    def test_invalid_atom_name(self):
        with self.assertRaises(TermFormatError):
            Atom("A")


class TestFormat(unittest.TestCase):
    """Test cases for printing."""

    def test_minimal_parentheses(self):
        self.assertEqual(format_term(Sasaki(Sasaki(a, b), c)), "a & b & c")
        self.assertEqual(format_term(Sasaki(a, Sasaki(b, c))), "a & (b & c)")
        self.assertEqual(format_term(Ortho(Sasaki(a, b))), "(a & b)'")
        self.assertEqual(format_term(Sasaki(Ortho(a), Ortho(Ortho(b)))), "a' & b''")

    def test_format_sequent(self):
        self.assertEqual(format_sequent(Sequent(Sasaki(a, b), b)), "a & b <= b")
        self.assertEqual(str(Sequent(a, a)), "a <= a")

    @given(terms())
    def test_parse_inverts_format(self, t):
        self.assertEqual(parse_term(format_term(t)), t)

    @given(sequents())
    def test_sequent_parse_inverts_format(self, s):
        self.assertEqual(parse_sequent(format_sequent(s)), s)

    @given(sequents())
    def test_json_tree_inverts(self, s):
        self.assertEqual(sequent_from_json(sequent_to_json(s)), s)


class TestMeasures(unittest.TestCase):
    """Test cases for term measures and JSON trees."""

    def test_counts(self):
        t = parse_term("(a & b')' & a''")
        self.assertEqual(connective_count(t), 2)
        self.assertEqual(size(t), 6)

    def test_ortho_count(self):
        self.assertEqual(ortho_count(a), 0)
        self.assertEqual(ortho_count(parse_term("a'' & b'''")), 5)
        t = parse_term("(a & b')' & a''")
        self.assertEqual(ortho_count(t) + connective_count(t), size(t))

    def test_atoms_sorted(self):
        self.assertEqual(atoms(parse_sequent("c & a <= b'")), ["a", "b", "c"])

    def test_subterms_post_order(self):
        t = parse_term("a & a'")
        self.assertEqual(subterms(t), [a, Ortho(a), t])

    def test_json_shape(self):
        self.assertEqual(
            term_to_json(parse_term("a & b'")),
            {"sasaki": [{"atom": "a"}, {"ortho": {"atom": "b"}}]},
        )
        self.assertEqual(term_from_json("a & b"), Sasaki(a, b))
        self.assertEqual(sequent_from_json({"lhs": "a & b", "rhs": {"atom": "b"}}), Sequent(Sasaki(a, b), b))

    def test_json_errors(self):
        with self.assertRaises(TermFormatError):
            term_from_json({"sasaki": [{"atom": "a"}]})
        with self.assertRaises(TermFormatError):
            term_from_json({"join": []})
        with self.assertRaises(TermFormatError):
            sequent_from_json({"lhs": "a"})


if __name__ == "__main__":
    unittest.main()
