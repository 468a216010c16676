"""Graded Betti degrees of semigroup rings from squarefree divisor complexes.

The multiplicity of the degree s in the i-th module of a minimal S-graded
free resolution of K[S] is the rank of the (i-1)-st reduced homology of the
complex of subsets F of generators with s - sum(F) in S. Homology is taken
over Q, with exact integer ranks.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Sequence, Union

from . import degrees as dg
from .degrees import Degree
from .errors import DegreeNotInSemigroup
from .linalg import integer_rank
from .semigroup import AffineSemigroup, NumericalSemigroup

Semigroup = Union[NumericalSemigroup, AffineSemigroup]
Face = tuple[int, ...]


@dataclass(frozen=True)
class DivisorComplex:
    degree: Degree
    vertices: tuple[int, ...]
    faces: tuple[Face, ...]

    @property
    def dimension(self) -> int:
        return max(len(f) for f in self.faces) - 1

    def face_counts(self) -> list[int]:
        """f-vector indexed from dimension -1 (the empty face)."""
        counts = [0] * (self.dimension + 2)
        for f in self.faces:
            counts[len(f)] += 1
        return counts

    def is_full_simplex(self) -> bool:
        return len(self.faces) == 2 ** len(self.vertices)

    def is_cone(self) -> bool:
        faces = set(self.faces)
        for v in self.vertices:
            if all(tuple(sorted(set(f) | {v})) in faces for f in self.faces):
                return True
        return False


def divisor_complex(S: Semigroup, s: Degree) -> DivisorComplex:
    if not S.contains(s):
        raise DegreeNotInSemigroup(f"{s} is not in {S!r}")
    gens = S.generators
    vertices = tuple(i for i, g in enumerate(gens) if S.contains(dg.sub(s, g)))
    faces: list[Face] = [()]
    layer: list[tuple[Face, Degree]] = [((), s)]
    while layer:
        known = set(f for f, _ in layer)
        nxt: list[tuple[Face, Degree]] = []
        for face, rest in layer:
            start = face[-1] + 1 if face else 0
            for v in vertices:
                if v < start:
                    continue
                cand = face + (v,)
                # every codimension-one subface must already be a face
                if len(cand) > 1 and any(cand[:k] + cand[k + 1:] not in known for k in range(len(cand) - 1)):
                    continue
                r = dg.sub(rest, gens[v])
                if S.contains(r):
                    nxt.append((cand, r))
        faces.extend(f for f, _ in nxt)
        layer = nxt
    return DivisorComplex(degree=s, vertices=vertices, faces=tuple(faces))


def _boundary_rank(lower: Sequence[Face], upper: Sequence[Face]) -> int:
    if not lower or not upper:
        return 0
    index = {f: k for k, f in enumerate(lower)}
    rows = []
    for face in upper:
        row = [0] * len(lower)
        for k in range(len(face)):
            row[index[face[:k] + face[k + 1:]]] = -1 if k % 2 else 1
        rows.append(row)
    return integer_rank(rows)


def reduced_homology_ranks(c: DivisorComplex) -> list[int]:
    """Ranks of reduced homology in dimensions -1 .. dim(c)."""
    by_size: dict[int, list[Face]] = {}
    for f in sorted(c.faces):
        by_size.setdefault(len(f), []).append(f)
    top = max(by_size)
    chains = [by_size.get(k, []) for k in range(top + 1)]
    # ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces
    ranks = [0] + [_boundary_rank(chains[k - 1], chains[k]) for k in range(1, top + 1)] + [0]
    return [len(chains[k]) - ranks[k] - ranks[k + 1] for k in range(top + 1)]


def _acyclic_shortcut(c: DivisorComplex) -> bool:
    return bool(c.vertices) and (len(c.vertices) == 1 or c.is_full_simplex() or c.is_cone())


def betti_multiplicity(S: Semigroup, s: Degree, i: int) -> int:
    c = divisor_complex(S, s)
    if i < 0:
        return 0
    if _acyclic_shortcut(c):
        return 0
    ranks = reduced_homology_ranks(c)
    return ranks[i] if i < len(ranks) else 0


@dataclass(frozen=True)
class BettiTable:
    """Multisets of i-Betti S-degrees; ``degrees[0]`` is always the zero degree."""

    degrees: tuple[tuple[Degree, ...], ...]

    @classmethod
    def from_lists(cls, lists: Iterable[Iterable[Degree]]) -> BettiTable:
        lists = [tuple(sorted(x)) for x in lists]
        while len(lists) > 1 and not lists[-1]:
            lists.pop()
        return cls(tuple(lists))

    @classmethod
    def trivial(cls, zero: Degree = 0) -> BettiTable:
        """Table of a free semigroup (zero toric ideal)."""
        return cls(((zero,),))

    @property
    def pd(self) -> int:
        return len(self.degrees) - 1

    def __getitem__(self, i: int) -> tuple[Degree, ...]:
        if 0 <= i < len(self.degrees):
            return self.degrees[i]
        return ()

    def betti_numbers(self) -> list[int]:
        return [len(d) for d in self.degrees]

    def multiplicity(self, s: Degree, i: int) -> int:
        return Counter(self[i])[s]

    def map(self, f: Callable[[Degree], Degree]) -> BettiTable:
        return BettiTable.from_lists([[f(x) for x in row] for row in self.degrees])

    def scaled(self, c: int) -> BettiTable:
        return self.map(lambda x: dg.mul(c, x))

    def to_json(self) -> dict:
        return {
            "pd": self.pd,
            "degrees": {str(i): [dg.to_json(x) for x in self.degrees[i]] for i in range(1, len(self.degrees))},
        }

    @classmethod
    def from_json(cls, data: dict, zero: Degree | None = None) -> BettiTable:
        pd = data["pd"]
        rows = [[dg.from_json(x) for x in data["degrees"].get(str(i), [])] for i in range(1, pd + 1)]
        if zero is None:
            first = next((r[0] for r in rows if r), 0)
            zero = dg.zero_like(first)
        return cls.from_lists([[zero]] + rows)

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def degree_bound(S: NumericalSemigroup) -> int:
    """Above this bound every divisor complex is a full simplex."""
    return S.frobenius + sum(S.generators)


def betti_table(S: NumericalSemigroup) -> BettiTable:
    bound = degree_bound(S)
    n = len(S.generators)
    rows: list[list[int]] = [[] for _ in range(n + 1)]
    for s in range(bound + 1):
        if not S.contains(s):
            continue
        c = divisor_complex(S, s)
        if _acyclic_shortcut(c):
            continue
        for k, r in enumerate(reduced_homology_ranks(c)):
            rows[k].extend([s] * r)
    # spot check of the cutoff: a degree past the bound has a full simplex
    assert divisor_complex(S, bound + 1).is_full_simplex()
    return BettiTable.from_lists(rows)
