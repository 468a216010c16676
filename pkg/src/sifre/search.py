"""Exhaustive searches for extensions and gluings with a SIFRE.

Windows are complete: for a > frobenius(S1) + min B_1(S1), the difference
a - min B_1(S1) exceeds the Frobenius number, so it lies in S1 and the
first-level alpha condition already fails. The same bound applies to b and
to the extension parameter m.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from .classify import extension_candidates, extension_window
from .criteria import (
    Verdict,
    alpha_pairs,
    compare_pair,
    extension_conditions,
    gluing_has_sifre,
    gluing_unique_presentation,
    is_sifre,
)
from .errors import NotMinimal
from .gluing import glue_numerical
from .resolution import BettiTable, betti_table
from .semigroup import NumericalSemigroup


@dataclass(frozen=True)
class SearchWindow:
    a_max: int
    b_max: Optional[int]
    rationale_note: str = (
        "beyond frobenius + min(B_1) the first-level condition ±(a - b_1) not in S fails, "
        "so no candidate outside the window can succeed"
    )

    def to_json(self) -> dict:
        return {"a_max": self.a_max, "b_max": self.b_max, "rationale": self.rationale_note}


def ell_note(m: int) -> str:
    return f"any l >= 2 with gcd(l, {m}) = 1"


@dataclass(frozen=True)
class ExtensionHit:
    m: int
    u: tuple[int, ...]
    verdict: Verdict

    def to_json(self) -> dict:
        return {"m": self.m, "u": list(self.u), "ell": ell_note(self.m), "verdict": self.verdict.to_json()}


@dataclass(frozen=True)
class ExtensionSearch:
    semigroup: NumericalSemigroup
    window: int
    base: Verdict
    hits: tuple[ExtensionHit, ...]
    checked: int

    @property
    def m_values(self) -> list[int]:
        return [h.m for h in self.hits]

    def to_json(self) -> dict:
        return {
            "generators": list(self.semigroup.generators),
            "window": {"m_max": self.window},
            "base_sifre": self.base.to_json(),
            "checked": self.checked,
            "m_values": self.m_values,
            "hits": [h.to_json() for h in self.hits],
            "note": "the verdicts do not depend on l",
        }


def search_extensions(S: NumericalSemigroup, m_max: Optional[int] = None,
                      table: Optional[BettiTable] = None) -> ExtensionSearch:
    if table is None:
        table = betti_table(S)
    window = extension_window(S, table) if m_max is None else m_max
    base = is_sifre(table, S)
    hits = []
    candidates = extension_candidates(S, window)
    for m in candidates:
        v = extension_conditions(S, table, m, base_verdict=base)
        if v.holds:
            hits.append(ExtensionHit(m, S.factorization(m), v))
    return ExtensionSearch(S, window, base, tuple(hits), len(candidates))


@dataclass(frozen=True)
class GluingSearch:
    s1: NumericalSemigroup
    s2: Optional[NumericalSemigroup]
    window: SearchWindow
    s1_sifre: Verdict
    s2_sifre: Optional[Verdict]
    admissible_a: tuple[int, ...]
    admissible_b: tuple[int, ...]
    sifre: tuple[tuple[int, int], ...] = ()
    unique_only: tuple[tuple[int, int], ...] = ()
    neither: int = 0
    invalid: int = 0
    verdicts: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def no_sifre_gluing_certified(self) -> bool:
        """True when no partner whatsoever can give a gluing with a SIFRE."""
        return not self.s1_sifre.holds or not self.admissible_a

    def to_json(self) -> dict:
        out = {
            "s1": list(self.s1.generators),
            "s2": list(self.s2.generators) if self.s2 is not None else None,
            "window": self.window.to_json(),
            "s1_sifre": self.s1_sifre.holds,
            "s2_sifre": self.s2_sifre.holds if self.s2_sifre is not None else None,
            "admissible_a": list(self.admissible_a),
            "no_sifre_gluing_certified": self.no_sifre_gluing_certified,
        }
        if self.s2 is not None:
            out.update(
                admissible_b=list(self.admissible_b),
                sifre=[list(p) for p in self.sifre],
                unique_presentation_only=[list(p) for p in self.unique_only],
                neither=self.neither,
                invalid=self.invalid,
            )
        return out


def _admissible(S: NumericalSemigroup, table: BettiTable, upper: int) -> tuple[list[int], dict[int, bool]]:
    """Candidates passing the alpha condition at every level, and which pass level 1."""
    admissible, level1 = [], {}
    for x in extension_candidates(S, upper):
        level1[x] = not alpha_pairs(S, table, x, top=1)
        if level1[x] and not alpha_pairs(S, table, x):
            admissible.append(x)
    return admissible, level1


def _first_level_free(S: NumericalSemigroup, table: BettiTable) -> bool:
    row = table[1]
    return all(compare_pair(1, row[k], row[l], S) is None for k in range(len(row)) for l in range(k + 1, len(row)))


def search_gluings(s1: NumericalSemigroup, s2: Optional[NumericalSemigroup] = None,
                   a_max: Optional[int] = None, b_max: Optional[int] = None) -> GluingSearch:
    t1 = betti_table(s1)
    a_max = extension_window(s1, t1) if a_max is None else a_max
    s1_sifre = is_sifre(t1, s1)
    admissible_a, level1_a = _admissible(s1, t1, a_max)
    if s2 is None:
        return GluingSearch(s1, None, SearchWindow(a_max, None), s1_sifre, None, tuple(admissible_a), ())

    t2 = betti_table(s2)
    b_max = extension_window(s2, t2) if b_max is None else b_max
    s2_sifre = is_sifre(t2, s2)
    admissible_b, level1_b = _admissible(s2, t2, b_max)
    parts_free = _first_level_free(s1, t1) and _first_level_free(s2, t2)

    sifre, unique_only, verdicts = [], [], {}
    neither = invalid = 0
    gens1, gens2 = s1.generators, s2.generators
    for a in level1_a:
        for b in level1_b:
            if gcd(a, b) != 1 or {b * x for x in gens1} & {a * y for y in gens2}:
                invalid += 1
                continue
            # a first-level failure inside a part is already a pair of
            # comparable first Betti degrees of the gluing
            if not (level1_a[a] and level1_b[b] and parts_free):
                neither += 1
                continue
            try:
                g = glue_numerical(s1, s2, a, b)
            except NotMinimal:
                invalid += 1
                continue
            full = gluing_has_sifre(g, t1, t2)
            up = gluing_unique_presentation(g, t1, t2)
            verdicts[(a, b)] = (full, up)
            if full.holds:
                sifre.append((a, b))
            elif up.holds:
                unique_only.append((a, b))
            else:
                neither += 1
    return GluingSearch(
        s1, s2, SearchWindow(a_max, b_max), s1_sifre, s2_sifre,
        tuple(admissible_a), tuple(admissible_b),
        tuple(sorted(sifre)), tuple(sorted(unique_only)), neither, invalid, verdicts,
    )
