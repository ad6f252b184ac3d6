from fractions import Fraction

import pytest

from statelab import (
    AlternatingAutomaton,
    Atom,
    FormatError,
    conj,
    disj,
    load_automaton,
    load_prob_automaton,
    rabin_automaton,
    serialize_automaton,
    serialize_prob_automaton,
)

DOC = """\
# accepts words over {a, b} with at least one b followed only by a's
alphabet: a b
states: q0 q1 q2
initial: q0
accepting: q2
trans q0 a -> q0
trans q0 b -> q1 | q0
trans q1 a -> q1 & (q2 | q1)
trans q1 b -> F
trans q2 a -> q2
trans q2 b -> T
"""


def test_load_reads_headers_and_rows():
    m = load_automaton(DOC)
    assert list(m.alphabet) == ["a", "b"]
    assert m.states == ["q0", "q1", "q2"]
    assert m.initial == "q0"
    assert m.state_accepting("q2")
    assert not m.state_accepting("q0")
    assert m.delta("q0", "b") == disj([Atom("q1"), Atom("q0")])
    assert m.delta("q1", "a") == conj([Atom("q1"), disj([Atom("q2"), Atom("q1")])])


def test_round_trip_is_canonical_and_idempotent():
    once = serialize_automaton(load_automaton(DOC))
    twice = serialize_automaton(load_automaton(once))
    assert once == twice
    # canonical form sorts states and keeps one row per (state, letter)
    assert once.index("states: q0 q1 q2") >= 0
    assert once.count("trans ") == 6


def test_comments_and_blank_lines_are_ignored():
    doc = "# heading\n\nalphabet: a\nstates: q\ninitial: q\naccepting: q\n\n# row\ntrans q a -> q\n"
    m = load_automaton(doc)
    assert m.accepts("aaa")


def test_hash_letter_usable_in_transition_rows():
    doc = (
        "alphabet: 0 #\n"
        "states: q r\n"
        "initial: q\n"
        "accepting: r\n"
        "trans q 0 -> q\n"
        "trans q # -> r\n"
        "trans r 0 -> r\n"
        "trans r # -> r\n"
    )
    m = load_automaton(doc)
    assert m.accepts("00#")
    assert not m.accepts("00")


def test_missing_transition_is_reported():
    doc = "alphabet: a b\nstates: q\ninitial: q\naccepting: q\ntrans q a -> q\n"
    with pytest.raises(FormatError, match=r"missing transition"):
        load_automaton(doc)


def test_duplicate_transition_is_reported():
    doc = (
        "alphabet: a\nstates: q\ninitial: q\naccepting: q\n"
        "trans q a -> q\ntrans q a -> q\n"
    )
    with pytest.raises(FormatError, match=r"line 6"):
        load_automaton(doc)


def test_undeclared_names_are_reported():
    base = "alphabet: a\nstates: q\ninitial: q\naccepting: q\n"
    with pytest.raises(FormatError):
        load_automaton(base + "trans q b -> q\n")
    with pytest.raises(FormatError):
        load_automaton(base + "trans r a -> q\n")
    with pytest.raises(FormatError):
        load_automaton(base + "trans q a -> r\n")


def test_formula_syntax_errors_carry_positions():
    base = "alphabet: a\nstates: q\ninitial: q\naccepting: q\n"
    with pytest.raises(FormatError, match=r"column"):
        load_automaton(base + "trans q a -> q &\n")
    with pytest.raises(FormatError, match=r"column"):
        load_automaton(base + "trans q a -> (q\n")


def test_missing_headers_are_reported():
    with pytest.raises(FormatError):
        load_automaton("alphabet: a\nstates: q\ninitial: q\ntrans q a -> q\n")
    with pytest.raises(FormatError):
        load_automaton("states: q\ninitial: q\naccepting: q\ntrans q a -> q\n")


def test_trans_and_ptrans_rows_do_not_mix():
    doc = (
        "alphabet: a\nstates: q\ninitial: q\naccepting: q\n"
        "ptrans q a -> q:1/1\n"
    )
    with pytest.raises(FormatError):
        load_automaton(doc)
    doc2 = "alphabet: a\nstates: q\ninitial: q\naccepting: q\ntrans q a -> q\n"
    with pytest.raises(FormatError):
        load_prob_automaton(doc2)


def test_prob_round_trip_preserves_exact_weights():
    text = serialize_prob_automaton(rabin_automaton())
    m = load_prob_automaton(text)
    assert m.acceptance_probability("11") == Fraction(3, 4)
    assert m.acceptance_probability("11#11") == Fraction(9, 16)
    assert serialize_prob_automaton(m) == text


def test_prob_rows_must_be_stochastic():
    doc = (
        "alphabet: a\nstates: q\ninitial: q\naccepting: q\n"
        "ptrans q a -> q:1/2\n"
    )
    with pytest.raises(FormatError, match=r"sum"):
        load_prob_automaton(doc)


def test_prob_weight_parse_errors():
    base = "alphabet: a\nstates: q\ninitial: q\naccepting: q\n"
    with pytest.raises(FormatError):
        load_prob_automaton(base + "ptrans q a -> q\n")
    with pytest.raises(FormatError):
        load_prob_automaton(base + "ptrans q a -> q:one\n")


def test_serialize_renames_non_identifier_states():
    trans = {
        ((0, 0), "a"): Atom((1, 1)),
        ((0, 0), "b"): Atom((0, 0)),
        ((1, 1), "a"): Atom((1, 1)),
        ((1, 1), "b"): Atom((0, 0)),
    }
    m = AlternatingAutomaton(
        "ab", (0, 0), trans, {(1, 1)}, states=[(0, 0), (1, 1)], name="pairs"
    )
    text = serialize_automaton(m)
    reparsed = load_automaton(text)
    for w in m.alphabet.words_up_to(4):
        assert reparsed.accepts(w) == m.accepts(w)
    assert "(" not in text.split("trans")[0]  # headers use renamed states
