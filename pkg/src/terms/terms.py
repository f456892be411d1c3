"""Abstract syntax, parsing and printing for Sasaki terms and sequents.

Concrete grammar::

    term    := term "&" term | term "'" | "(" term ")" | atom
    atom    := [a-z][a-zA-Z0-9_]*
    sequent := term "<=" term

``'`` (orthocomplement) is postfix and binds tighter than ``&`` (Sasaki
projection), which is left-associative. Double orthocomplements are kept
verbatim; nothing is normalised at parse time.
"""

import re
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, List, Tuple, Union

import pyparsing as pp

from src.logging_config import get_logger

logger = get_logger(__name__)

pp.ParserElement.enable_packrat()

ATOM_PATTERN = r"[a-z][a-zA-Z0-9_]*"
_ATOM_RE = re.compile(ATOM_PATTERN + r"\Z")

OPERAND_START: FrozenSet[str] = frozenset({"<atom>", "("})
END = "<end>"


class TermError(Exception):
    """Base class for term and sequent errors."""


class TermSyntaxError(TermError):
    """Raised when text does not match the term or sequent grammar.

    Attributes:
        offset (int): Byte offset (UTF-8) of the offending position.
        expected (FrozenSet[str]): Tokens that would have been accepted there.
    """

    def __init__(self, message: str, text: str, offset: int, expected: FrozenSet[str]):
        self.text = text
        self.offset = offset
        self.expected = frozenset(expected)
        super().__init__(f"{message} at byte {offset}; expected one of {sorted(self.expected)}")


class TermFormatError(TermError):
    """Raised when a JSON tree is not a well-formed term or sequent."""


@dataclass(frozen=True)
class Atom:
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not _ATOM_RE.match(self.name):
            raise TermFormatError(f"Invalid atom name: {self.name!r}")

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True)
class Sasaki:
    """The Sasaki connective ``left & right`` (projection of left onto right)."""

    left: "Term"
    right: "Term"

    def __str__(self):
        return format_term(self)


@dataclass(frozen=True)
class Ortho:
    inner: "Term"

    def __str__(self):
        return format_term(self)


Term = Union[Atom, Sasaki, Ortho]


@dataclass(frozen=True)
class Sequent:
    """The judgment ``lhs <= rhs``."""

    lhs: Term
    rhs: Term

    def __str__(self):
        return format_sequent(self)


# Grammar


def _fold_ortho(tokens):
    group = tokens[0]
    term = group[0]
    for _ in group[1:]:
        term = Ortho(term)
    return term


def _fold_sasaki(tokens):
    group = tokens[0]
    term = group[0]
    for operand in group[2::2]:
        term = Sasaki(term, operand)
    return term


_atom = pp.Regex(ATOM_PATTERN).set_parse_action(lambda t: Atom(t[0]))
_term = pp.infix_notation(
    _atom,
    [
        (pp.Literal("'"), 1, pp.OpAssoc.LEFT, _fold_ortho),
        (pp.Literal("&"), 2, pp.OpAssoc.LEFT, _fold_sasaki),
    ],
)

_TOKEN_RE = re.compile(r"\s*(?:(?P<atom>" + ATOM_PATTERN + r")|(?P<op>[&'()]))")


def _byte_offset(text: str, index: int) -> int:
    return len(text[:index].encode("utf-8"))


def _scan(text: str, base: int = 0) -> None:
    """Check the token sequence of a term and raise at the first bad token.

    pyparsing reports the position where backtracking gave up, which for
    inputs like ``a &`` is not the offending token; this scan tracks whether an
    operand or an operator is due and reports the exact place.
    """
    pos = 0
    depth = 0
    want_operand = True

    def fail(message, index, expected):
        raise TermSyntaxError(message, text, base + _byte_offset(text, index), expected)

    def operator_set():
        return frozenset({"&", "'", ")"} if depth else {"&", "'", END})

    while True:
        stripped = len(text) - len(text[pos:].lstrip())
        if stripped >= len(text):
            if want_operand:
                fail("Unexpected end of input", len(text), OPERAND_START)
            if depth:
                fail("Unclosed parenthesis", len(text), frozenset({")", "&", "'"}))
            return
        match = _TOKEN_RE.match(text, pos)
        if not match:
            fail("Unexpected character", stripped, OPERAND_START if want_operand else operator_set())
        start = match.start("atom") if match.group("atom") else match.start("op")
        token = match.group("atom") or match.group("op")
        if want_operand:
            if match.group("atom"):
                want_operand = False
            elif token == "(":
                depth += 1
            else:
                fail(f"Unexpected {token!r}", start, OPERAND_START)
        else:
            if token == "&":
                want_operand = True
            elif token == "'":
                pass
            elif token == ")" and depth:
                depth -= 1
            else:
                fail(f"Unexpected {token!r}", start, operator_set())
        pos = match.end()


def parse_term(text: str) -> Term:
    """Parse a term.

    Args:
        text (str): Concrete syntax, e.g. ``"a & b'"``.

    Returns:
        Term: The abstract syntax tree.

    Raises:
        TermSyntaxError: With byte offset and expected-token set.
    """
    return _parse_term_at(text, 0)


def _parse_term_at(text: str, base: int) -> Term:
    _scan(text, base)
    try:
        return _term.parse_string(text, parse_all=True)[0]
    except pp.ParseBaseException as e:
        # The scan accepts exactly the grammar, so this only fires on parser bugs.
        logger.exception(f"Parser rejected scanned input {text!r}")
        raise TermSyntaxError(str(e), text, base + _byte_offset(text, e.loc), OPERAND_START) from e


def parse_sequent(text: str) -> Sequent:
    """Parse ``lhs <= rhs``.

    Raises:
        TermSyntaxError: Missing or duplicate ``<=``, or a term syntax error
            (offsets are relative to the whole sequent text).
    """
    parts = text.split("<=")
    if len(parts) == 1:
        raise TermSyntaxError("Missing '<='", text, _byte_offset(text, len(text)), frozenset({"<="}))
    if len(parts) > 2:
        second = text.index("<=", len(parts[0]) + 2)
        raise TermSyntaxError("Duplicate '<='", text, _byte_offset(text, second), frozenset({"&", "'", END}))
    rhs_start = len(parts[0]) + 2
    lhs = _parse_term_at(parts[0], 0)
    rhs = _parse_term_at(parts[1], _byte_offset(text, rhs_start))
    return Sequent(lhs, rhs)


# Printing


def format_term(t: Term) -> str:
    """Print with the fewest parentheses that re-parse to the same tree."""
    if isinstance(t, Atom):
        return t.name
    if isinstance(t, Ortho):
        inner = format_term(t.inner)
        if isinstance(t.inner, Sasaki):
            inner = f"({inner})"
        return inner + "'"
    right = format_term(t.right)
    if isinstance(t.right, Sasaki):
        right = f"({right})"
    return f"{format_term(t.left)} & {right}"


def format_sequent(s: Sequent) -> str:
    return f"{format_term(s.lhs)} <= {format_term(s.rhs)}"


# Measures


def connective_count(t: Term) -> int:
    """Number of Sasaki nodes (the & occurrences) in t."""
    if isinstance(t, Atom):
        return 0
    if isinstance(t, Ortho):
        return connective_count(t.inner)
    return 1 + connective_count(t.left) + connective_count(t.right)


def size(t: Term) -> int:
    """Number of connectives of either kind (& and ') in t."""
    if isinstance(t, Atom):
        return 0
    if isinstance(t, Ortho):
        return 1 + size(t.inner)
    return 1 + size(t.left) + size(t.right)


def ortho_count(t: Term) -> int:
    """Number of orthocomplement occurrences in t."""
    if isinstance(t, Atom):
        return 0
    if isinstance(t, Ortho):
        return 1 + ortho_count(t.inner)
    return ortho_count(t.left) + ortho_count(t.right)


def atoms(t: Union[Term, Sequent]) -> List[str]:
    """Sorted distinct atom names of a term or sequent."""
    found = set()

    def walk(node):
        if isinstance(node, Sequent):
            walk(node.lhs)
            walk(node.rhs)
        elif isinstance(node, Atom):
            found.add(node.name)
        elif isinstance(node, Ortho):
            walk(node.inner)
        else:
            walk(node.left)
            walk(node.right)

    walk(t)
    return sorted(found)


def subterms(t: Term) -> List[Term]:
    """Distinct subterms of t in post-order (t itself last)."""
    seen: Dict[Term, None] = {}

    def walk(node):
        if isinstance(node, Ortho):
            walk(node.inner)
        elif isinstance(node, Sasaki):
            walk(node.left)
            walk(node.right)
        seen.setdefault(node, None)

    walk(t)
    return list(seen)


# JSON trees: {"atom": name} | {"sasaki": [l, r]} | {"ortho": t}


def term_to_json(t: Term) -> Dict[str, Any]:
    if isinstance(t, Atom):
        return {"atom": t.name}
    if isinstance(t, Ortho):
        return {"ortho": term_to_json(t.inner)}
    return {"sasaki": [term_to_json(t.left), term_to_json(t.right)]}


def term_from_json(data: Any) -> Term:
    """Rebuild a term from its JSON tree; plain strings are parsed as concrete syntax."""
    if isinstance(data, str):
        return parse_term(data)
    if not isinstance(data, dict) or len(data) != 1:
        raise TermFormatError(f"Expected a single-key object, got {data!r}")
    (key, value), = data.items()
    if key == "atom":
        return Atom(value)
    if key == "ortho":
        return Ortho(term_from_json(value))
    if key == "sasaki":
        if not isinstance(value, list) or len(value) != 2:
            raise TermFormatError(f"'sasaki' needs a two-element list, got {value!r}")
        return Sasaki(term_from_json(value[0]), term_from_json(value[1]))
    raise TermFormatError(f"Unknown term constructor {key!r}")


def sequent_to_json(s: Sequent) -> Dict[str, Any]:
    return {"lhs": term_to_json(s.lhs), "rhs": term_to_json(s.rhs)}


def sequent_from_json(data: Any) -> Sequent:
    if isinstance(data, str):
        return parse_sequent(data)
    if not isinstance(data, dict) or set(data) != {"lhs", "rhs"}:
        raise TermFormatError(f"Expected {{'lhs', 'rhs'}} object, got {data!r}")
    return Sequent(term_from_json(data["lhs"]), term_from_json(data["rhs"]))


def sequent_key(s: Sequent) -> Tuple[str, str]:
    """Stable sort key for reports."""
    return format_term(s.lhs), format_term(s.rhs)
