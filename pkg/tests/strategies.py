"""Hypothesis strategies shared by the test packages."""

from hypothesis import strategies as st

from src.terms.terms import Atom, Ortho, Sasaki, Sequent

atom_names = st.sampled_from(["a", "b", "c", "x1", "p_q"])


def terms(names=atom_names, max_leaves: int = 12):
    return st.recursive(
        names.map(Atom),
        lambda children: st.one_of(
            children.map(Ortho),
            st.tuples(children, children).map(lambda lr: Sasaki(*lr)),
        ),
        max_leaves=max_leaves,
    )


def sequents(names=atom_names, max_leaves: int = 8):
    return st.tuples(terms(names, max_leaves), terms(names, max_leaves)).map(lambda lr: Sequent(*lr))
