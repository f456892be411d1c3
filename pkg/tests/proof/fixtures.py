"""Derivations showing that the term algebra modulo provable equivalence has the four & properties.

Each entry maps a name to (derivation, allow_T, open hypotheses).
"""

from src.proof.proof import Derivation, Rule
from src.terms.terms import parse_sequent


def _s(text):
    return parse_sequent(text)


def _a(text):
    return Derivation(_s(text), Rule.A)


def l_monotony() -> Derivation:
    return Derivation(
        _s("a & c <= b & c"),
        Rule.M,
        (Derivation.hyp("H", _s("a <= b")), _a("c <= c"), _a("c <= c")),
    )


def r_reduction() -> Derivation:
    return Derivation(_s("a & b <= b"), Rule.R, (_a("b <= b"),))


def orthomodularity_left() -> Derivation:
    return Derivation(_s("a & b <= a"), Rule.O_L, (Derivation.hyp("H", _s("a <= b")), _a("a <= a")))


def orthomodularity_right() -> Derivation:
    return Derivation(_s("a <= a & b"), Rule.O_R, (_a("a <= a"), Derivation.hyp("H", _s("a <= b"))))


def galois_literal() -> Derivation:
    """G read directly: the premise carries the double orthocomplements."""
    return Derivation(_s("c' & b <= a'"), Rule.G, (Derivation.hyp("H", _s("a'' & b <= c''")),))


def galois() -> Derivation:
    """G from ``a & b <= c`` itself, moving a'' to a through M and T."""
    transport = Derivation(
        _s("a'' & b <= a & b"),
        Rule.M,
        (Derivation(_s("a'' <= a"), Rule.N_L, (_a("a <= a"),)), _a("b <= b"), _a("b <= b")),
    )
    cut = Derivation(_s("a'' & b <= c"), Rule.T, (transport, Derivation.hyp("H", _s("a & b <= c"))))
    return Derivation(
        _s("c' & b <= a'"),
        Rule.G,
        (Derivation(_s("a'' & b <= c''"), Rule.N_R, (cut,)),),
    )


FIXTURES = {
    "L-Monotony": (l_monotony, False, [("H", "a <= b")]),
    "R-Reduction": (r_reduction, False, []),
    "Orthomodularity-left": (orthomodularity_left, False, [("H", "a <= b")]),
    "Orthomodularity-right": (orthomodularity_right, False, [("H", "a <= b")]),
    "Galois-literal": (galois_literal, False, [("H", "a'' & b <= c''")]),
    "Galois": (galois, True, [("H", "a & b <= c")]),
}
