"""Positive boolean formulas over automaton states.

A transition of an alternating automaton maps a (state, letter) pair to a
positive boolean combination of states: atoms joined by AND / OR, with no
negation. TRUE and FALSE are allowed as constants (convenience sugar for
always-accepting / always-rejecting sink states).

Formulas are immutable and hashable so they can key memo tables. The
conj/disj builders flatten nested same-operator nodes, drop absorbed
constants and collapse singletons, which keeps hand-built and parsed
formulas in one predictable shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Iterator, Union

from .errors import StatelabError

State = Hashable


class _Const:
    """TRUE or FALSE. Two module-level singletons, compared by identity."""

    __slots__ = ("value",)

    def __init__(self, value: bool):
        self.value = value

    def __repr__(self) -> str:
        return "TRUE" if self.value else "FALSE"


TRUE = _Const(True)
FALSE = _Const(False)


@dataclass(frozen=True)
class Atom:
    state: State

    def __repr__(self) -> str:
        return f"Atom({self.state!r})"


@dataclass(frozen=True)
class And:
    children: tuple

    def __post_init__(self):
        if len(self.children) < 1:
            raise StatelabError("And needs at least one child")

    def __repr__(self) -> str:
        return f"And{self.children!r}"


@dataclass(frozen=True)
class Or:
    children: tuple

    def __post_init__(self):
        if len(self.children) < 1:
            raise StatelabError("Or needs at least one child")

    def __repr__(self) -> str:
        return f"Or{self.children!r}"


Formula = Union[_Const, Atom, And, Or]


def conj(parts: Iterable[Formula]) -> Formula:
    """AND of parts with flattening, constant absorption, singleton collapse."""
    out = []
    for p in parts:
        if p is TRUE:
            continue
        if p is FALSE:
            return FALSE
        if isinstance(p, And):
            out.extend(p.children)
        else:
            out.append(p)
    if not out:
        return TRUE
    if len(out) == 1:
        return out[0]
    return And(tuple(out))


def disj(parts: Iterable[Formula]) -> Formula:
    """OR of parts with flattening, constant absorption, singleton collapse."""
    out = []
    for p in parts:
        if p is FALSE:
            continue
        if p is TRUE:
            return TRUE
        if isinstance(p, Or):
            out.extend(p.children)
        else:
            out.append(p)
    if not out:
        return FALSE
    if len(out) == 1:
        return out[0]
    return Or(tuple(out))


def atoms(formula: Formula) -> Iterator[State]:
    """All states mentioned in the formula. Constants mention none."""
    stack = [formula]
    while stack:
        f = stack.pop()
        if isinstance(f, Atom):
            yield f.state
        elif isinstance(f, (And, Or)):
            stack.extend(f.children)
        # _Const: nothing


def evaluate(formula: Formula, truth: Callable[[State], bool]) -> bool:
    """Evaluate under a truth assignment for atoms. Short-circuits."""
    if formula is TRUE:
        return True
    if formula is FALSE:
        return False
    if isinstance(formula, Atom):
        try:
            return bool(truth(formula.state))
        except KeyError:
            raise StatelabError(f"no truth value for atom {formula.state!r}") from None
    if isinstance(formula, And):
        return all(evaluate(c, truth) for c in formula.children)
    if isinstance(formula, Or):
        return any(evaluate(c, truth) for c in formula.children)
    raise StatelabError(f"not a formula: {formula!r}")


def format_formula(formula: Formula, name: Callable[[State], str] = str) -> str:
    """Render with minimal parentheses; '&' binds tighter than '|'."""

    def go(f: Formula, parent: str) -> str:
        if f is TRUE:
            return "T"
        if f is FALSE:
            return "F"
        if isinstance(f, Atom):
            return name(f.state)
        if isinstance(f, And):
            body = " & ".join(go(c, "&") for c in f.children)
            return body  # '&' never needs parens under '|' or at top level
        if isinstance(f, Or):
            body = " | ".join(go(c, "|") for c in f.children)
            return f"({body})" if parent == "&" else body
        raise StatelabError(f"not a formula: {f!r}")

    return go(formula, "")
