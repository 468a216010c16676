"""Numerical and affine semigroups: membership, gaps, symmetry, factorizations."""

from __future__ import annotations

import enum
import heapq
from dataclasses import dataclass
from functools import cached_property, reduce
from math import gcd
from typing import Iterator, Sequence

from .errors import (
    ContentNotOne,
    DimensionMismatch,
    EmptyInput,
    NonMinimalInput,
    NonPositiveGenerator,
)

Vector = tuple[int, ...]


class SymmetryClass(str, enum.Enum):
    SYMMETRIC = "symmetric"
    PSEUDO_SYMMETRIC = "pseudo_symmetric"
    NEITHER = "neither"


@dataclass(frozen=True)
class GapData:
    gaps: tuple[int, ...]
    frobenius: int
    genus: int
    pseudo_frobenius: tuple[int, ...]


def _in_span(x: int, gens: Sequence[int]) -> bool:
    """Plain DP membership of x in the monoid spanned by gens (any content)."""
    if x == 0:
        return True
    if not gens:
        return False
    g = reduce(gcd, gens)
    if x % g:
        return False
    x //= g
    gens = [h // g for h in gens]
    reach = bytearray(x + 1)
    reach[0] = 1
    for y in range(1, x + 1):
        for h in gens:
            if h <= y and reach[y - h]:
                reach[y] = 1
                break
    return bool(reach[x])


def _apery_residues(gens: Sequence[int]) -> tuple[int, ...]:
    """Least element of the monoid in each residue class modulo gens[0].

    Shortest paths on the residues mod the smallest generator, edge weights
    given by the remaining generators. Requires gcd(gens) == 1.
    """
    m0 = gens[0]
    best = {0: 0}
    heap = [(0, 0)]
    while heap:
        d, r = heapq.heappop(heap)
        if d > best[r]:
            continue
        for g in gens[1:]:
            nd = d + g
            nr = nd % m0
            if nr not in best or nd < best[nr]:
                best[nr] = nd
                heapq.heappush(heap, (nd, nr))
    return tuple(best[r] for r in range(m0))


class NumericalSemigroup:
    """Submonoid of N given by its minimal generators.

    ``content`` is the gcd of the generators; semigroups with content > 1
    (scaled copies such as ``b*S1`` in a gluing) are allowed, but gap data
    is only defined once the content is 1.

    Redundant generators are dropped unless ``minimize=False``, in which case
    the (sorted, deduplicated) list is kept as the presentation. Betti data
    then refers to the toric ideal of that presentation. ``strict=True``
    raises instead of dropping anything.
    """

    def __init__(self, gens: Sequence[int], strict: bool = False, minimize: bool = True):
        gens = list(gens)
        if not gens:
            raise EmptyInput("a semigroup needs at least one generator")
        for g in gens:
            if int(g) != g or g <= 0:
                raise NonPositiveGenerator(f"generator {g!r} is not a positive integer")
        given = sorted(int(g) for g in gens)
        kept: list[int] = []
        for g in sorted(set(given)):
            if not _in_span(g, kept):
                kept.append(g)
        if strict and kept != given:
            raise NonMinimalInput(f"generators {given} are not a minimal generating set (minimal: {kept})")
        # whether the stored list is a minimal generating set
        self.is_minimal = minimize or kept == sorted(set(given))
        if not minimize:
            kept = sorted(set(given))
        self.generators: tuple[int, ...] = tuple(kept)
        self.content: int = reduce(gcd, kept)
        self._apery = _apery_residues([g // self.content for g in kept])

    # -- basic protocol --------------------------------------------------

    def __repr__(self):
        return f"NumericalSemigroup({list(self.generators)})"

    def __eq__(self, other):
        return isinstance(other, NumericalSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __len__(self):
        return len(self.generators)

    def __contains__(self, x) -> bool:
        return self.contains(x)

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)

    @property
    def multiplicity(self) -> int:
        return self.generators[0]

    @property
    def reduced(self) -> NumericalSemigroup:
        if self.content == 1:
            return self
        return self.scale_down(self.content)

    def scale_down(self, c: int) -> NumericalSemigroup:
        return NumericalSemigroup([g // c for g in self.generators], minimize=False)

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x % self.content:
            return False
        y = x // self.content
        m0 = len(self._apery)
        return y >= self._apery[y % m0]

    def scale(self, c: int) -> NumericalSemigroup:
        if c < 1:
            raise ValueError("scale factor must be a positive integer")
        return NumericalSemigroup([c * g for g in self.generators], minimize=False)

    # -- gap data ----------------------------------------------------------

    def _require_content_one(self):
        if self.content != 1:
            raise ContentNotOne(f"{self!r} has content {self.content}; gap data needs content 1")

    @property
    def frobenius(self) -> int:
        self._require_content_one()
        return max(self._apery) - self.generators[0]

    @cached_property
    def gap_data(self) -> GapData:
        self._require_content_one()
        f = self.frobenius
        gaps = tuple(x for x in range(1, f + 1) if not self.contains(x))
        pf = tuple(x for x in gaps if all(self.contains(x + g) for g in self.generators))
        return GapData(gaps=gaps, frobenius=f, genus=len(gaps), pseudo_frobenius=pf)

    @property
    def gaps(self) -> tuple[int, ...]:
        return self.gap_data.gaps

    @property
    def pseudo_frobenius(self) -> tuple[int, ...]:
        return self.gap_data.pseudo_frobenius

    def apery_set(self, n: int | None = None) -> tuple[int, ...]:
        """Elements s of S with s - n not in S, sorted. Defaults to n = multiplicity."""
        self._require_content_one()
        if n is None:
            return tuple(sorted(self._apery))
        if n <= 0 or not self.contains(n):
            raise ValueError(f"{n} is not a nonzero element of {self!r}")
        return tuple(s for s in range(self.frobenius + n + 1) if self.contains(s) and not self.contains(s - n))

    @cached_property
    def symmetry_class(self) -> SymmetryClass:
        self._require_content_one()
        f = self.frobenius
        if all(self.contains(x) != self.contains(f - x) for x in range(0, f + 1)):
            return SymmetryClass.SYMMETRIC
        if f % 2 == 0 and all(
            self.contains(f - x) for x in self.gaps if x != f // 2
        ):
            return SymmetryClass.PSEUDO_SYMMETRIC
        return SymmetryClass.NEITHER

    # -- factorizations ----------------------------------------------------

    @cached_property
    def _tails(self) -> tuple[NumericalSemigroup | None, ...]:
        # _tails[k] is the monoid on generators[k:]; None for the empty tail.
        n = len(self.generators)
        tails = [self] + [NumericalSemigroup(self.generators[k:], minimize=False) for k in range(1, n)]
        return tuple(tails) + (None,)

    def _tail_contains(self, k: int, x: int) -> bool:
        tail = self._tails[k]
        if tail is None:
            return x == 0
        return tail.contains(x)

    def iter_factorizations(self, x: int) -> Iterator[Vector]:
        """Yield every u with sum(u_i * m_i) == x in lexicographic order."""
        gens = self.generators
        n = len(gens)
        if x < 0 or not self._tail_contains(0, x):
            return
        u = [0] * n

        def rec(k: int, rest: int):
            if k == n - 1:
                if rest % gens[k] == 0:
                    u[k] = rest // gens[k]
                    yield tuple(u)
                    u[k] = 0
                return
            for c in range(rest // gens[k] + 1):
                r = rest - c * gens[k]
                if self._tail_contains(k + 1, r):
                    u[k] = c
                    yield from rec(k + 1, r)
            u[k] = 0

        yield from rec(0, x)

    def factorizations(self, x: int) -> list[Vector]:
        return list(self.iter_factorizations(x))

    def factorization(self, x: int) -> Vector | None:
        """Lexicographically smallest factorization of x, or None when x is not in S."""
        return next(self.iter_factorizations(x), None)


def make_numerical(gens: Sequence[int], strict: bool = False, minimize: bool = True) -> NumericalSemigroup:
    return NumericalSemigroup(gens, strict=strict, minimize=minimize)


def _vec_sub(z: Vector, g: Vector) -> Vector:
    return tuple(a - b for a, b in zip(z, g))


class AffineSemigroup:
    """Finitely generated submonoid of N^r."""

    def __init__(self, gens: Sequence[Sequence[int]], strict: bool = False):
        gens = [tuple(int(c) for c in g) for g in gens]
        if not gens:
            raise EmptyInput("a semigroup needs at least one generator")
        r = len(gens[0])
        if r == 0 or any(len(g) != r for g in gens):
            raise DimensionMismatch("generators must be nonempty vectors of equal length")
        for g in gens:
            if any(c < 0 for c in g) or not any(g):
                raise NonPositiveGenerator(f"generator {g} must be nonzero with non-negative entries")
        self.ambient_dim = r
        # memo shared by the instance; entries are deterministic, so
        # concurrent fills are benign under the GIL.
        self._memo: dict[Vector, bool] = {}
        distinct = sorted(set(gens), key=lambda g: (sum(g), g))
        kept: list[Vector] = []
        for g in distinct:
            # only generators of smaller coordinate sum can represent g
            probe = AffineSemigroup._bare(kept, r)
            if not (kept and probe.contains(g)):
                kept.append(g)
        kept_set = set(kept)
        ordered = [g for g in dict.fromkeys(gens) if g in kept_set]
        if strict and (len(ordered) != len(gens)):
            raise NonMinimalInput(f"generators {gens} are not a minimal generating set")
        self.generators: tuple[Vector, ...] = tuple(ordered)

    @classmethod
    def _bare(cls, gens, r) -> AffineSemigroup:
        obj = object.__new__(cls)
        obj.ambient_dim = r
        obj.generators = tuple(gens)
        obj._memo = {}
        return obj

    def __repr__(self):
        return f"AffineSemigroup({[list(g) for g in self.generators]})"

    def __eq__(self, other):
        return isinstance(other, AffineSemigroup) and self.generators == other.generators

    def __hash__(self):
        return hash(self.generators)

    def __len__(self):
        return len(self.generators)

    def __contains__(self, z) -> bool:
        return self.contains(z)

    def contains(self, z: Sequence[int]) -> bool:
        z = tuple(z)
        if len(z) != self.ambient_dim:
            raise DimensionMismatch(f"expected a vector of length {self.ambient_dim}, got {len(z)}")
        return self._contains(z)

    def _contains(self, z: Vector) -> bool:
        if any(c < 0 for c in z):
            return False
        if not any(z):
            return True
        hit = self._memo.get(z)
        if hit is not None:
            return hit
        # explicit stack: descent can be deep for long vectors
        stack = [z]
        while stack:
            w = stack[-1]
            if w in self._memo:
                stack.pop()
                continue
            pending = None
            result = False
            for g in self.generators:
                v = _vec_sub(w, g)
                if any(c < 0 for c in v):
                    continue
                if not any(v):
                    result = True
                    break
                known = self._memo.get(v)
                if known is True:
                    result = True
                    break
                if known is None:
                    pending = v
                    break
            if result or pending is None:
                self._memo[w] = result
                stack.pop()
            else:
                stack.append(pending)
        return self._memo[z]

    def scale(self, c: int) -> AffineSemigroup:
        return AffineSemigroup([tuple(c * x for x in g) for g in self.generators])

    def iter_factorizations(self, z: Sequence[int]) -> Iterator[Vector]:
        """Yield every u with sum(u_i * g_i) == z in lexicographic order."""
        z = tuple(z)
        gens = self.generators
        n = len(gens)
        if not self.contains(z):
            return
        u = [0] * n
        tails = [AffineSemigroup._bare(gens[k:], self.ambient_dim) for k in range(n)]

        def rec(k, rest):
            if k == n:
                if not any(rest):
                    yield tuple(u)
                return
            if any(c < 0 for c in rest) or not (tails[k]._contains(rest)):
                return
            g = gens[k]
            cap = min(rest[j] // g[j] for j in range(len(g)) if g[j] > 0)
            for c in range(cap + 1):
                u[k] = c
                yield from rec(k + 1, tuple(a - c * b for a, b in zip(rest, g)))
            u[k] = 0

        yield from rec(0, z)

    def factorizations(self, z) -> list[Vector]:
        return list(self.iter_factorizations(z))

    def factorization(self, z) -> Vector | None:
        return next(self.iter_factorizations(z), None)


def make_affine(gens: Sequence[Sequence[int]], strict: bool = False) -> AffineSemigroup:
    return AffineSemigroup(gens, strict=strict)


def parse_generators(text: str) -> list[int]:
    """Parse ``"31,37,41"``."""
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError as exc:
        raise ValueError(f"cannot parse generator list {text!r}") from exc


def parse_affine_generators(text: str) -> list[Vector]:
    """Parse ``"2,0;0,2;1,1"``."""
    return [tuple(parse_generators(part)) for part in text.split(";") if part.strip()]
