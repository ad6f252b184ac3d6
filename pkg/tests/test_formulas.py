import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from statelab import (
    FALSE,
    TRUE,
    And,
    Atom,
    Or,
    StatelabError,
    atoms,
    conj,
    disj,
    evaluate,
    format_formula,
    parse_formula,
)


def test_truth_table_for_and_over_or():
    f = conj([Atom("p"), disj([Atom("q"), Atom("r")])])
    expected = {
        (False, False, False): False,
        (False, False, True): False,
        (False, True, False): False,
        (False, True, True): False,
        (True, False, False): False,
        (True, False, True): True,
        (True, True, False): True,
        (True, True, True): True,
    }
    for (p, q, r), want in expected.items():
        truth = {"p": p, "q": q, "r": r}
        assert evaluate(f, truth.__getitem__) is want


def test_constants_evaluate_without_atoms():
    assert evaluate(TRUE, lambda q: False) is True
    assert evaluate(FALSE, lambda q: True) is False


def test_evaluate_missing_atom_is_reported():
    with pytest.raises(StatelabError):
        evaluate(Atom("p"), {}.__getitem__)


def test_conj_disj_identities():
    a, b = Atom("a"), Atom("b")
    assert conj([]) is TRUE
    assert disj([]) is FALSE
    assert conj([a]) is a
    assert disj([b]) is b
    assert conj([a, FALSE, b]) is FALSE
    assert disj([a, TRUE]) is TRUE
    assert conj([a, TRUE, b]) == And((a, b))
    assert disj([a, FALSE, b]) == Or((a, b))


def test_conj_disj_flatten_same_operator():
    a, b, c = Atom("a"), Atom("b"), Atom("c")
    assert conj([a, conj([b, c])]) == And((a, b, c))
    assert disj([disj([a, b]), c]) == Or((a, b, c))
    # mixed operators keep their structure
    assert conj([a, disj([b, c])]) == And((a, Or((b, c))))


def test_empty_node_construction_is_rejected():
    with pytest.raises(StatelabError):
        And(())
    with pytest.raises(StatelabError):
        Or(())


def test_atoms_collects_every_state():
    f = conj([Atom(1), disj([Atom(2), Atom(3), Atom(1)])])
    assert set(atoms(f)) == {1, 2, 3}
    assert set(atoms(TRUE)) == set()


def test_format_uses_minimal_parentheses():
    q0, q1, q2 = Atom("q0"), Atom("q1"), Atom("q2")
    assert format_formula(conj([q1, disj([q0, q2])])) == "q1 & (q0 | q2)"
    assert format_formula(disj([q1, conj([q2, q0])])) == "q1 | q2 & q0"
    assert format_formula(TRUE) == "T"
    assert format_formula(FALSE) == "F"


def test_parse_precedence_and_round_trip():
    f = parse_formula("q1 | q2 & q3")
    assert f == Or((Atom("q1"), And((Atom("q2"), Atom("q3")))))
    for text in ("q1 & (q0 | q2)", "a | b & c", "T", "F", "x"):
        assert format_formula(parse_formula(text)) == text


def _random_formula(rng, names, depth):
    roll = rng.random()
    if depth == 0 or roll < 0.5:
        return Atom(rng.choice(names))
    parts = [_random_formula(rng, names, depth - 1) for _ in range(rng.randint(2, 3))]
    return conj(parts) if roll < 0.75 else disj(parts)


@settings(derandomize=True, max_examples=300)
@given(st.integers(min_value=0, max_value=2**32 - 1), st.integers(0, 31))
def test_flipping_an_atom_true_never_loses_acceptance(seed, flip_mask_bits):
    """Positive formulas are monotone in their atom assignment."""
    rng = random.Random(seed)
    names = ["a", "b", "c", "d", "e"]
    f = _random_formula(rng, names, depth=3)
    truth = {q: bool(flip_mask_bits >> i & 1) for i, q in enumerate(names)}
    before = evaluate(f, truth.__getitem__)
    for q in names:
        if not truth[q]:
            bumped = dict(truth)
            bumped[q] = True
            after = evaluate(f, bumped.__getitem__)
            assert after or not before


def test_nodes_are_hashable_and_comparable():
    assert Atom("x") == Atom("x")
    assert len({Atom("x"), Atom("x"), Atom("y")}) == 2
    assert And((Atom("x"), Atom("y"))) != Or((Atom("x"), Atom("y")))
