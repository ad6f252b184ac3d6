"""Left quotients, bounded quotient counting, and query tables.

The left quotient u^-1 L is {w : uw in L}. Counting distinct quotients
with witnesses bounded by length m can only undercount (two prefixes
with different quotients may agree on all short witnesses), so every
number reported here is a certified LOWER bound: bounded witnesses can
merge classes, never split them. The same logic applies to query-table
profiles with a bounded or explicit row set.

All enumeration is in the canonical order: length first, then the
alphabet's declared letter order. Representatives reported for classes
and profiles are the canonically smallest members, which together with
pure membership oracles makes every report byte-deterministic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence

from .errors import BudgetExceeded, StatelabError
from .words import Alphabet

DEFAULT_BUDGET = 10**8


@dataclass(frozen=True)
class LanguageOracle:
    """A named, pure membership predicate over words."""

    name: str
    alphabet: Alphabet
    membership: Callable[[str], bool]

    def __call__(self, word: str) -> bool:
        return self.membership(word)


def from_automaton(A, name: Optional[str] = None) -> LanguageOracle:
    return LanguageOracle(name or A.name, A.alphabet, A.accepts)


def oracle_union(L1: LanguageOracle, L2: LanguageOracle, name: str = "") -> LanguageOracle:
    if L1.alphabet != L2.alphabet:
        raise StatelabError("union needs oracles over the same alphabet")
    return LanguageOracle(
        name or f"({L1.name} | {L2.name})",
        L1.alphabet,
        lambda w: L1.membership(w) or L2.membership(w),
    )


def oracle_intersection(L1: LanguageOracle, L2: LanguageOracle, name: str = "") -> LanguageOracle:
    if L1.alphabet != L2.alphabet:
        raise StatelabError("intersection needs oracles over the same alphabet")
    return LanguageOracle(
        name or f"({L1.name} & {L2.name})",
        L1.alphabet,
        lambda w: L1.membership(w) and L2.membership(w),
    )


def quotient_member(L: LanguageOracle, u: str, w: str) -> bool:
    """w in u^-1 L, i.e. uw in L."""
    return L.membership(u + w)


def _canonical_json(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))


@dataclass
class QuotientCountReport:
    language: str
    order: int
    witness_bound: int
    count: int
    representatives: List[str]

    def to_json(self) -> str:
        return _canonical_json(
            {
                "language": self.language,
                "order": self.order,
                "witness_bound": self.witness_bound,
                "count": self.count,
                "representatives": self.representatives,
            }
        )

    def to_csv(self) -> str:
        lines = ["class,representative"]
        for i, rep in enumerate(self.representatives):
            lines.append(f"{i},{rep}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        return (
            f"{self.language}: >= {self.count} distinct quotients of order "
            f"{self.order} (witnesses up to length {self.witness_bound})"
        )


@dataclass(frozen=True)
class RowSpec:
    """Which words become query-table rows."""

    kind: str  # "exhaustive" | "explicit"
    max_length: int = 0
    words: tuple = ()

    @classmethod
    def exhaustive(cls, max_length: int) -> "RowSpec":
        return cls(kind="exhaustive", max_length=max_length)

    @classmethod
    def explicit(cls, words: Sequence[str]) -> "RowSpec":
        return cls(kind="explicit", words=tuple(words))

    def row_words(self, alphabet: Alphabet) -> List[str]:
        if self.kind == "exhaustive":
            return list(alphabet.words_up_to(self.max_length))
        if self.kind == "explicit":
            for w in self.words:
                alphabet.check_word(w)
            return sorted(set(self.words), key=alphabet.sort_key)
        raise StatelabError(f"unknown row spec kind {self.kind!r}")

    def describe(self) -> dict:
        if self.kind == "exhaustive":
            return {"kind": "exhaustive", "max_length": self.max_length}
        return {"kind": "explicit", "rows": list(self.words)}


@dataclass
class QueryTableReport:
    language: str
    order: int
    row_spec: dict
    count: int
    representatives: List[str]
    profiles: Optional[Dict[str, str]] = field(default=None)

    def to_json(self) -> str:
        payload = {
            "language": self.language,
            "order": self.order,
            "row_spec": self.row_spec,
            "count": self.count,
            "representatives": self.representatives,
        }
        if self.profiles is not None:
            payload["profiles"] = self.profiles
        return _canonical_json(payload)

    def to_csv(self) -> str:
        lines = ["profile,representative"]
        for i, rep in enumerate(self.representatives):
            lines.append(f"{i},{rep}")
        return "\n".join(lines) + "\n"

    def to_text(self) -> str:
        return (
            f"{self.language}: >= {self.count} distinct profiles in the "
            f"query table of order {self.order}"
        )


def _guard(queries: int, budget: int) -> None:
    if queries > budget:
        raise BudgetExceeded(queries, budget)


def count_quotients(
    L: LanguageOracle,
    order: int,
    witness_bound: int,
    budget: int = DEFAULT_BUDGET,
) -> QuotientCountReport:
    """Partition A^{<=order} by membership signatures over A^{<=witness_bound}.

    The class count is a lower bound on the number of distinct left
    quotients of order `order`, monotone in both parameters.
    """
    if order < 0 or witness_bound < 0:
        raise StatelabError("order and witness bound must be >= 0")
    alpha = L.alphabet
    _guard(alpha.count_up_to(order) * alpha.count_up_to(witness_bound), budget)
    witnesses = list(alpha.words_up_to(witness_bound))
    member = L.membership
    classes: Dict[int, str] = {}
    for u in alpha.words_up_to(order):
        sig = 0
        bit = 1
        for w in witnesses:
            if member(u + w):
                sig |= bit
            bit <<= 1
        # first-seen wins: enumeration order is canonical, so the stored
        # representative is the canonically smallest member of its class
        if sig not in classes:
            classes[sig] = u
    return QuotientCountReport(
        language=L.name,
        order=order,
        witness_bound=witness_bound,
        count=len(classes),
        representatives=list(classes.values()),
    )


def distinguish(
    L: LanguageOracle, u: str, v: str, m_max: int
) -> Optional[str]:
    """Shortest witness w (canonical order) with uw in L xor vw in L.

    Returns None when no witness of length <= m_max exists. The returned
    witness is re-checked through quotient_member before being handed
    back rather than trusted from the search loop.
    """
    if u == v:
        return None
    member = L.membership
    for w in L.alphabet.words_up_to(m_max):
        if member(u + w) != member(v + w):
            if quotient_member(L, u, w) == quotient_member(L, v, w):
                raise StatelabError(
                    f"oracle {L.name!r} is not pure: witness {w!r} unstable"
                )
            return w
    return None


def query_table(
    L: LanguageOracle,
    order: int,
    rows: RowSpec,
    budget: int = DEFAULT_BUDGET,
    include_profiles: bool = False,
) -> QueryTableReport:
    """Count distinct row profiles against all order-<=order prefix columns.

    The profile of a row word w is the bit vector of membership(u + w)
    over every column u in A^{<=order}, canonical order. Distinct
    profiles lower-bound the query table size of that order.
    """
    if order < 0:
        raise StatelabError("order must be >= 0")
    alpha = L.alphabet
    row_words = rows.row_words(alpha)
    columns = list(alpha.words_up_to(order))
    _guard(len(row_words) * len(columns), budget)
    member = L.membership
    seen: Dict[int, str] = {}
    dump: Dict[str, str] = {}
    for w in row_words:
        profile = 0
        bit = 1
        for u in columns:
            if member(u + w):
                profile |= bit
            bit <<= 1
        if profile not in seen:
            seen[profile] = w
        if include_profiles:
            dump[w] = format(profile, f"0{len(columns)}b")[::-1]
    return QueryTableReport(
        language=L.name,
        order=order,
        row_spec=rows.describe(),
        count=len(seen),
        representatives=list(seen.values()),
        profiles=dump if include_profiles else None,
    )
