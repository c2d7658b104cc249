import pytest
from hypothesis import given, settings, strategies as st

from minimodal.formula import (
    BOT,
    TOP,
    And,
    Atom,
    Bottom,
    Box,
    Box1,
    Box2,
    Dia,
    Dia1,
    Dia2,
    Imp,
    Or,
    ParseError,
    complexity,
    iff,
    modal_depth,
    neg,
    parse,
    pretty,
    size,
    skey,
    subformulas,
)

p, q, r = Atom("p"), Atom("q"), Atom("r")


def test_parse_basic():
    assert parse("p -> q") == Imp(p, q)
    assert parse("~dia bot") == Imp(Dia(BOT), BOT)
    k_box = Imp(Box(Imp(p, q)), Imp(Box(p), Box(q)))
    assert parse("box(p -> q) -> (box p -> box q)") == k_box


def test_parse_precedence_and_assoc():
    assert parse("p & q | r") == Or(And(p, q), r)
    assert parse("p -> q -> r") == Imp(p, Imp(q, r))
    assert parse("p | q -> r & p") == Imp(Or(p, q), And(r, p))
    assert parse("~box p & q") == And(neg(Box(p)), q)
    assert parse("p & q & r") == And(And(p, q), r)


def test_parse_sugar_expansion():
    assert parse("top") == Imp(BOT, BOT)
    assert parse("~p") == Imp(p, BOT)
    assert parse("p <-> q") == And(Imp(p, q), Imp(q, p))


def test_parse_unicode():
    assert parse("□p → ◇q") == Imp(Box(p), Dia(q))
    assert parse("⊥") == BOT
    assert parse("¬p ∧ ⊤") == And(neg(p), TOP)


def test_parse_errors_carry_position():
    with pytest.raises(ParseError):
        parse("p ->")
    with pytest.raises(ParseError):
        parse("(p -> q")
    with pytest.raises(ParseError):
        parse("p @ q")


def test_reserved_atom_rejected_monomodal():
    with pytest.raises(ParseError, match="reserved"):
        parse("f -> p")
    assert parse("f -> p", bimodal=True) == Imp(Atom("f"), p)


def test_bimodal_modality_mode():
    assert parse("box1 dia2 p", bimodal=True) == Box1(Dia2(p))
    with pytest.raises(ParseError):
        parse("box1 p")
    with pytest.raises(ParseError):
        parse("box p", bimodal=True)


def test_pretty_examples():
    assert pretty(Imp(p, q)) == "p -> q"
    assert pretty(Imp(BOT, BOT)) == "top"
    assert pretty(Box(Imp(p, q))) == "box (p -> q)"
    assert pretty(Imp(p, BOT)) == "~p"
    assert pretty(Imp(BOT, BOT), sugar=False) == "bot -> bot"


def test_complexity():
    assert complexity(BOT) == 1
    assert complexity(p) == 1
    assert complexity(Imp(p, q)) == 3
    assert complexity(Box(Imp(p, BOT))) == 4
    assert complexity(Dia(q)) == 2


def test_complexity_exceeds_proper_subformulas():
    f = parse("box(p -> q) -> (box p -> box q)")
    for g in subformulas(f) - {f}:
        assert complexity(g) < complexity(f)


def test_modal_depth():
    assert modal_depth(p) == 0
    assert modal_depth(Box(p)) == 1
    assert modal_depth(Box(Dia(p))) == 2
    assert modal_depth(And(Box(p), q)) == 1


def test_subformulas():
    assert subformulas(p) == {p}
    assert subformulas(Imp(p, BOT)) == {p, BOT, Imp(p, BOT)}
    f = And(Box(p), q)
    assert subformulas(f) == {p, Box(p), q, f}


def test_sugar_idempotent():
    once = parse("~p")
    assert parse(pretty(once)) == once
    assert neg(p) == Imp(p, BOT)
    assert iff(p, q) == And(Imp(p, q), Imp(q, p))


def formulas(max_leaves=8, bimodal=False):
    leaves = st.one_of(
        st.sampled_from([Atom("p"), Atom("q"), Atom("r"), BOT])
        if not bimodal
        else st.sampled_from([Atom("p"), Atom("q"), Atom("f"), BOT])
    )
    unary = [Box1, Dia1, Box2, Dia2] if bimodal else [Box, Dia]

    def extend(children):
        return st.one_of(
            st.tuples(st.sampled_from([And, Or, Imp]), children, children).map(
                lambda t: t[0](t[1], t[2])
            ),
            st.tuples(st.sampled_from(unary), children).map(lambda t: t[0](t[1])),
        )

    return st.recursive(leaves, extend, max_leaves=max_leaves)


@settings(max_examples=200, deadline=None)
@given(formulas())
def test_roundtrip_monomodal(f):
    assert parse(pretty(f)) == f
    assert parse(pretty(f, sugar=False)) == f


@settings(max_examples=150, deadline=None)
@given(formulas(bimodal=True))
def test_roundtrip_bimodal(f):
    assert parse(pretty(f, sugar=False), bimodal=True) == f


@settings(max_examples=150, deadline=None)
@given(formulas())
def test_skey_injective_on_samples(f):
    g = parse(pretty(f))
    assert skey(g) == skey(f)
    assert size(f) >= 1
