import pytest
from hypothesis import given
from hypothesis import strategies as st

from realforms.builders import build_dihedral, build_quaternion
from realforms.corpus import CORPUS_SPECS
from realforms.groups import GroupError, is_isomorphic_small
from realforms.parser import (
    Atom,
    ParseError,
    Product,
    Semidirect,
    build_group,
    format_expr,
    parse_group_spec,
)


@pytest.mark.parametrize(
    "text, tree",
    [
        ("C4", Atom("C", (4,))),
        ("C2 x C2", Product(Atom("C", (2,)), Atom("C", (2,)))),
        ("C3^2", Product(Atom("C", (3,)), Atom("C", (3,)))),
        ("PSL(2, 7)", Atom("PSL", (2, 7))),
        ("Hess216", Atom("Hess216", ())),
        ("CycMat(4,2)", Atom("CycMat", (4, 2))),
        (
            "C3^2:C4@gl23_rot",
            Semidirect(Product(Atom("C", (3,)), Atom("C", (3,))), Atom("C", (4,)), "gl23_rot"),
        ),
        ("(C2 x C2) x C2", Product(Product(Atom("C", (2,)), Atom("C", (2,))), Atom("C", (2,)))),
        ("C2 x (C2 x C2)", Product(Atom("C", (2,)), Product(Atom("C", (2,)), Atom("C", (2,))))),
    ],
)
def test_parse_examples(text, tree):
    assert parse_group_spec(text) == tree


@pytest.mark.parametrize(
    "text, order",
    [("D8", 8), ("Q8", 8), ("S4", 24), ("A5", 60), ("C3^2:C2@inv", 18), ("Fermat4", 96), ("SL(2,3)", 24)],
)
def test_build_orders(text, order):
    assert build_group(text).order == order


def test_order_notation():
    assert is_isomorphic_small(build_group("D8"), build_dihedral(4))
    assert is_isomorphic_small(build_group("Q16"), build_quaternion(4))


@pytest.mark.parametrize(
    "text, offset, expected",
    [
        ("D(7", 1, "INT"),
        ("", 0, "'('"),
        ("C", 1, "INT"),
        ("C2 x", 4, "'('"),
        ("C2 y", 3, "end of input"),
        ("(C2", 3, "')'"),
        ("C3:C2", 5, "'@'"),
        ("C3:C2@", 6, "NAME"),
        ("PSL(2 7)", 6, "','"),
        ("C2^0", 3, "positive INT"),
    ],
)
def test_parse_errors(text, offset, expected):
    with pytest.raises(ParseError) as exc:
        parse_group_spec(text)
    assert exc.value.offset == offset
    assert expected in exc.value.expected


@pytest.mark.parametrize("text", ["D7", "D4", "Q12", "Q4", "PSL(3,2)", "SL(2,5)", "C3:C2@nope"])
def test_build_errors(text):
    with pytest.raises((GroupError, KeyError)):
        build_group(text)


@pytest.mark.parametrize("text", CORPUS_SPECS)
def test_corpus_format_roundtrip(text):
    tree = parse_group_spec(text)
    assert parse_group_spec(format_expr(tree)) == tree


atoms = st.one_of(
    st.builds(lambda n: Atom("C", (n,)), st.integers(1, 99)),
    st.builds(lambda n: Atom("S", (n,)), st.integers(1, 9)),
    st.builds(lambda q: Atom("PSL", (2, q)), st.integers(2, 31)),
    st.builds(lambda a, b: Atom("CycMat", (a, b)), st.integers(3, 6), st.integers(1, 3)),
    st.just(Atom("Hess216", ())),
)
names = st.from_regex(r"[a-z_][a-z0-9_]{0,6}", fullmatch=True)
trees = st.recursive(
    atoms,
    lambda sub: st.one_of(st.builds(Product, sub, sub), st.builds(Semidirect, sub, sub, names)),
    max_leaves=8,
)


@given(trees)
def test_format_parse_fixed_point(tree):
    text = format_expr(tree)
    assert parse_group_spec(text) == tree
    assert format_expr(parse_group_spec(text)) == text
