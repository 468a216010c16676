"""Structure of 3-generated non-symmetric, 4-generated symmetric (Bresinsky)
and 4-generated pseudo-symmetric numerical semigroups, and which of their
extensions have a SIFRE."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import gcd
from typing import Mapping, Sequence

from .criteria import Verdict, extension_conditions, is_sifre
from .errors import (
    ConstraintViolation,
    IsSymmetric,
    NotMinimallyFourGenerated,
    NotPseudoSymmetric,
    NotSymmetric,
    NotThreeGenerated,
)
from .resolution import BettiTable, betti_table
from .semigroup import NumericalSemigroup, SymmetryClass


def _two_generator_factorizations(x: int, g: int, h: int) -> list[tuple[int, int]]:
    return [(t, (x - t * g) // h) for t in range(x // g + 1) if (x - t * g) % h == 0]


# -- Herzog ------------------------------------------------------------------

@dataclass(frozen=True)
class HerzogData:
    generators: tuple[int, int, int]
    alpha: tuple[int, int, int]
    cross: Mapping[tuple[int, int], int]  # (p, q) -> alpha_pq, 1-based
    d: tuple[int, int, int]
    b: tuple[int, int]  # (a23 m3 + d1, a32 m2 + d1), in that order

    def a(self, p: int, q: int) -> int:
        return self.cross[(p, q)]

    def to_json(self) -> dict:
        return {
            "generators": list(self.generators),
            "alpha": list(self.alpha),
            "cross": {f"{p}{q}": v for (p, q), v in sorted(self.cross.items())},
            "d": list(self.d),
            "b": list(self.b),
        }


def herzog_data(S: NumericalSemigroup) -> HerzogData:
    if len(S.generators) != 3:
        raise NotThreeGenerated(f"{S!r} is not 3-generated")
    if S.symmetry_class is SymmetryClass.SYMMETRIC:
        raise IsSymmetric(f"{S!r} is symmetric")
    m = S.generators
    alpha = []
    cross: dict[tuple[int, int], int] = {}
    for p in range(3):
        q, r = [k for k in range(3) if k != p]
        k = 1
        while True:
            facts = _two_generator_factorizations(k * m[p], m[q], m[r])
            if facts:
                break
            k += 1
        if len(facts) != 1:
            raise ConstraintViolation(f"{k}*{m[p]} has several factorizations {facts} over <{m[q]},{m[r]}>")
        alpha.append(k)
        cross[(p + 1, q + 1)], cross[(p + 1, r + 1)] = facts[0]
    d = tuple(alpha[p] * m[p] for p in range(3))
    c = cross
    b1 = [c[2, 3] * m[2] + d[0], c[3, 1] * m[0] + d[1], c[1, 2] * m[1] + d[2]]
    b2 = [c[3, 2] * m[1] + d[0], c[1, 3] * m[2] + d[1], c[2, 1] * m[0] + d[2]]
    if len(set(b1)) != 1 or len(set(b2)) != 1:
        raise ConstraintViolation(f"second syzygy degrees disagree: {b1}, {b2}")
    if any(v == 0 for v in cross.values()):
        raise ConstraintViolation("a cross exponent vanishes; S cannot be non-symmetric")
    return HerzogData(
        generators=tuple(m), alpha=tuple(alpha), cross=dict(cross), d=d, b=(b1[0], b2[0]),
    )


def sifre_extension_coefficients(h: HerzogData) -> list[tuple[int, int, int]]:
    """All u with 0 < u_p < min(alpha_qp, alpha_rp), sorted."""
    ranges = []
    for p in (1, 2, 3):
        q, r = [k for k in (1, 2, 3) if k != p]
        ranges.append(range(1, min(h.a(q, p), h.a(r, p))))
    coeffs = sorted(product(*ranges))
    assert (not coeffs) == any(v == 1 for v in h.cross.values())
    return coeffs


def extension_m_values(h: HerzogData) -> list[int]:
    return sorted({sum(u * g for u, g in zip(c, h.generators)) for c in sifre_extension_coefficients(h)})


def no_sifre_extension_reason(h: HerzogData) -> str | None:
    ones = [f"alpha_{p}{q}=1" for (p, q), v in sorted(h.cross.items()) if v == 1]
    return ones[0] if ones else None


# -- Bresinsky ---------------------------------------------------------------

BRESINSKY_KEYS = ((2, 1), (3, 1), (3, 2), (4, 2), (1, 3), (4, 3), (1, 4), (2, 4))

# the two cross entries bounding u_p, per column p
_COLUMN = {1: ((2, 1), (3, 1)), 2: ((3, 2), (4, 2)), 3: ((1, 3), (4, 3)), 4: ((1, 4), (2, 4))}


@dataclass(frozen=True)
class BresinskyData:
    alpha: tuple[int, int, int, int]
    cross: Mapping[tuple[int, int], int]
    m: tuple[int, int, int, int]  # in the order of the construction, not sorted
    d: tuple[int, int, int, int, int]  # S-degrees of the five minimal binomials
    semigroup: NumericalSemigroup

    def a(self, i: int, j: int) -> int:
        return self.cross[(i, j)]

    def to_json(self) -> dict:
        return {
            "alpha": list(self.alpha),
            "cross": {f"{i}{j}": v for (i, j), v in sorted(self.cross.items())},
            "m": list(self.m),
            "d": list(self.d),
        }


def bresinsky_semigroup(cross: Mapping[tuple[int, int], int] | Sequence[int]) -> BresinskyData:
    """Build the 4-generated symmetric semigroup from the eight cross exponents.

    ``cross`` is either a mapping keyed by (i, j) or a sequence in the order
    a21, a31, a32, a42, a13, a43, a14, a24.
    """
    if not isinstance(cross, Mapping):
        cross = dict(zip(BRESINSKY_KEYS, cross))
    if set(cross) != set(BRESINSKY_KEYS):
        raise ConstraintViolation(f"need exactly the entries {BRESINSKY_KEYS}")
    c = {k: int(v) for k, v in cross.items()}
    if any(v <= 0 for v in c.values()):
        raise ConstraintViolation("all cross exponents must be positive")
    a1 = c[2, 1] + c[3, 1]
    a2 = c[3, 2] + c[4, 2]
    a3 = c[1, 3] + c[4, 3]
    a4 = c[1, 4] + c[2, 4]
    m1 = a2 * a3 * c[1, 4] + c[3, 2] * c[1, 3] * c[2, 4]
    m2 = a3 * a4 * c[2, 1] + c[3, 1] * c[4, 3] * c[2, 4]
    m3 = a1 * a4 * c[3, 2] + c[1, 4] * c[4, 2] * c[3, 1]
    m4 = a1 * a2 * c[4, 3] + c[4, 2] * c[2, 1] * c[1, 3]
    m = (m1, m2, m3, m4)
    # homogeneity of the five binomials
    d = (a1 * m1, a2 * m2, a3 * m3, a4 * m4, c[4, 3] * m3 + c[2, 1] * m1)
    rhs = (
        c[1, 3] * m3 + c[1, 4] * m4,
        c[2, 1] * m1 + c[2, 4] * m4,
        c[3, 1] * m1 + c[3, 2] * m2,
        c[4, 2] * m2 + c[4, 3] * m3,
        c[3, 2] * m2 + c[1, 4] * m4,
    )
    if d != rhs:
        raise ConstraintViolation(f"binomial degrees are inconsistent: {d} vs {rhs}")
    if len(set(m)) != 4:
        raise NotMinimallyFourGenerated(f"generators {m} are not distinct")
    S = NumericalSemigroup(m, minimize=False)
    if not S.is_minimal:
        raise NotMinimallyFourGenerated(f"generators {m} are not a minimal generating set")
    if S.content != 1:
        raise NotSymmetric(f"generators {m} have content {S.content}; not a numerical semigroup")
    if S.symmetry_class is not SymmetryClass.SYMMETRIC:
        raise NotSymmetric(f"{S!r} is {S.symmetry_class.value}")
    return BresinskyData(alpha=(a1, a2, a3, a4), cross=c, m=m, d=d, semigroup=S)


def bresinsky_bounds(b: BresinskyData) -> tuple[int, int, int, int]:
    """Strict upper bound on u_p for each p."""
    return tuple(min(b.a(*k) for k in _COLUMN[p]) for p in (1, 2, 3, 4))


def bresinsky_extension_has_sifre(b: BresinskyData, u: Sequence[int]) -> bool:
    u1, u2, u3, u4 = u
    if any(x < 0 for x in u):
        raise ValueError("coefficients must be non-negative")
    if any(x >= bound for x, bound in zip(u, bresinsky_bounds(b))):
        return False
    if sum(1 for x in u if x == 0) > 1:
        return False
    a = b.a
    if u1 == 0:
        return a(3, 2) - a(4, 2) < u2 or a(1, 3) - a(4, 3) < u3
    if u2 == 0:
        return a(4, 3) - a(1, 3) < u3 or a(2, 4) - a(1, 4) < u4
    if u3 == 0:
        return a(3, 1) - a(2, 1) < u1 or a(1, 4) - a(2, 4) < u4
    if u4 == 0:
        return a(2, 1) - a(3, 1) < u1 or a(4, 2) - a(3, 2) < u2
    return True


def bresinsky_extension_m(b: BresinskyData, u: Sequence[int]) -> int:
    return sum(x * g for x, g in zip(u, b.m))


# -- pseudo-symmetric ------------------------------------------------------------

def extension_window(S: NumericalSemigroup, table: BettiTable) -> int:
    """Largest m that can give an extension with a SIFRE.

    For m beyond it, m - min(B_1) exceeds the Frobenius number and so lies in S.
    """
    if not table[1]:
        raise ValueError(f"{S!r} has no first Betti degrees; the candidate window is unbounded")
    return S.frobenius + min(table[1])


def extension_candidates(S: NumericalSemigroup, upper: int) -> list[int]:
    gens = set(S.generators)
    return [m for m in range(1, upper + 1) if S.contains(m) and m not in gens]


def pseudo_symmetric_extension_scan(S: NumericalSemigroup, table: BettiTable | None = None) -> list[tuple[int, Verdict]]:
    if len(S.generators) != 4:
        raise NotPseudoSymmetric(f"{S!r} is not 4-generated")
    if S.symmetry_class is not SymmetryClass.PSEUDO_SYMMETRIC:
        raise NotPseudoSymmetric(f"{S!r} is {S.symmetry_class.value}")
    if table is None:
        table = betti_table(S)
    base = is_sifre(table, S)
    return [
        (m, extension_conditions(S, table, m, base_verdict=base))
        for m in extension_candidates(S, extension_window(S, table))
    ]


def find_pseudo_symmetric(max_generator: int = 40, embedding_dimension: int = 4) -> NumericalSemigroup | None:
    """First pseudo-symmetric semigroup, in lexicographic order of generator
    tuples with entries <= max_generator, having the given embedding dimension."""
    for gens in combinations(range(2, max_generator + 1), embedding_dimension):
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g != 1:
            continue
        S = NumericalSemigroup(gens, minimize=False)
        if not S.is_minimal:
            continue
        if S.symmetry_class is SymmetryClass.PSEUDO_SYMMETRIC:
            return S
    return None


def top_degree_relations(S: NumericalSemigroup, table: BettiTable) -> dict[int, list[int]]:
    """For each degree c in B_3, the generators g with c - g in B_2."""
    second = set(table[2])
    return {c: [g for g in S.generators if c - g in second] for c in table[3]}
