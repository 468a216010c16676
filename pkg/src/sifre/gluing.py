"""Gluings S = b*S1 + a*S2 of numerical semigroups, extensions E = l*S + N{m},
and the closed-form Betti degrees of the result."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Sequence, Union

from . import degrees as dg
from .degrees import Degree
from .errors import (
    CoprimalityFailure,
    ContentNotOne,
    DegreeIsGenerator,
    GeneratorOverlap,
    InvalidWeights,
    NotCoprime,
    NotMember,
    NotMinimal,
)
from .resolution import BettiTable
from .semigroup import AffineSemigroup, NumericalSemigroup, Vector

Semigroup = Union[NumericalSemigroup, AffineSemigroup]


def _identity(x: Degree) -> Degree:
    return x


def _scaler(c: int) -> Callable[[Degree], Degree]:
    return lambda x: dg.mul(c, x)


@dataclass(frozen=True)
class GluingSpec:
    s1: NumericalSemigroup
    s2: NumericalSemigroup
    a: int
    b: int
    glued: NumericalSemigroup
    alpha: int
    u: Vector  # lex-smallest factorization of a in s1
    v: Vector  # lex-smallest factorization of b in s2

    @property
    def part1(self) -> NumericalSemigroup:
        return self.s1.scale(self.b)

    @property
    def part2(self) -> NumericalSemigroup:
        return self.s2.scale(self.a)

    def betti(self, t1: BettiTable, t2: BettiTable) -> BettiTable:
        return glued_betti(t1, t2, self.alpha, _scaler(self.b), _scaler(self.a))

    def to_json(self) -> dict:
        return {
            "s1": list(self.s1.generators),
            "s2": list(self.s2.generators),
            "a": self.a,
            "b": self.b,
            "glued": list(self.glued.generators),
            "alpha": self.alpha,
            "u": list(self.u),
            "v": list(self.v),
        }


@dataclass(frozen=True)
class ExtensionSpec:
    base: Semigroup
    ell: int
    m: Degree
    u: Vector
    extended: Semigroup
    alpha: Degree

    @property
    def is_numerical(self) -> bool:
        return isinstance(self.base, NumericalSemigroup)

    def betti(self, base_table: BettiTable) -> BettiTable:
        zero = dg.zero_like(self.m)
        return glued_betti(base_table, BettiTable.trivial(zero), self.alpha, _scaler(self.ell), _identity)

    def to_json(self) -> dict:
        return {
            "base": [dg.to_json(g) for g in self.base.generators],
            "ell": self.ell,
            "m": dg.to_json(self.m),
            "u": list(self.u),
            "extended": [dg.to_json(g) for g in self.extended.generators],
            "alpha": dg.to_json(self.alpha),
        }


def glue_numerical(s1: NumericalSemigroup, s2: NumericalSemigroup, a: int, b: int) -> GluingSpec:
    for s in (s1, s2):
        if s.content != 1:
            raise ContentNotOne(f"{s!r} has content {s.content}")
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    if a in s1.generators:
        raise DegreeIsGenerator(f"a = {a} is a generator of {s1!r}")
    if b in s2.generators:
        raise DegreeIsGenerator(f"b = {b} is a generator of {s2!r}")
    if not s1.contains(a):
        raise NotMember(f"a = {a} is not in {s1!r}")
    if not s2.contains(b):
        raise NotMember(f"b = {b} is not in {s2!r}")
    left = {b * g for g in s1.generators}
    right = {a * g for g in s2.generators}
    if left & right:
        raise GeneratorOverlap(f"generators {sorted(left & right)} appear in both scaled parts")
    glued = NumericalSemigroup(sorted(left | right), minimize=False)
    if not glued.is_minimal:
        raise NotMinimal(f"glued generators {list(glued.generators)} are not minimal")
    return GluingSpec(
        s1=s1, s2=s2, a=a, b=b, glued=glued, alpha=a * b,
        u=s1.factorization(a), v=s2.factorization(b),
    )


def extend(base: Semigroup, m: Degree, ell: int) -> ExtensionSpec:
    if isinstance(base, NumericalSemigroup):
        if base.content != 1:
            raise ContentNotOne(f"{base!r} has content {base.content}")
        if not base.contains(m):
            raise NotMember(f"m = {m} is not in {base!r}")
        if m in base.generators:
            raise DegreeIsGenerator(f"m = {m} is a generator of {base!r}")
        if ell < 2 or gcd(ell, m) != 1:
            raise CoprimalityFailure(f"need l >= 2 with gcd(l, m) = 1; got l = {ell}, m = {m}")
        extended = NumericalSemigroup([ell * g for g in base.generators] + [m], minimize=False)
        minimal = extended.is_minimal
    else:
        m = tuple(m)
        if not base.contains(m):
            raise NotMember(f"m = {m} is not in {base!r}")
        if m in base.generators:
            raise DegreeIsGenerator(f"m = {m} is a generator of {base!r}")
        if ell < 2 or all(gcd(ell, c) != 1 for c in m):
            raise CoprimalityFailure(f"need l >= 2 coprime to a component of m; got l = {ell}, m = {m}")
        gens = [dg.mul(ell, g) for g in base.generators] + [m]
        extended = AffineSemigroup(gens)
        minimal = len(extended.generators) == len(gens)
    if not minimal:
        raise NotMinimal(f"extension of {base!r} by m = {m}, l = {ell} is not minimally generated")
    return ExtensionSpec(
        base=base, ell=ell, m=m, u=base.factorization(m),
        extended=extended, alpha=dg.mul(ell, m),
    )


def glued_betti(
    t1: BettiTable,
    t2: BettiTable,
    alpha: Degree,
    scale1: Callable[[Degree], Degree] = _identity,
    scale2: Callable[[Degree], Degree] = _identity,
) -> BettiTable:
    """Betti degrees of a gluing from the tables of its two parts.

    B_i(S) is the union over p + q = i of B_p + B_q, together with the union
    over p + q = i - 1 of B_p + B_q + alpha, where part degrees are first
    carried into S by ``scale1`` / ``scale2``.
    """
    rows1 = [[scale1(x) for x in t1[p]] for p in range(t1.pd + 1)]
    rows2 = [[scale2(y) for y in t2[q]] for q in range(t2.pd + 1)]
    pd = t1.pd + t2.pd + 1
    out: list[list[Degree]] = [[] for _ in range(pd + 1)]
    for p, r1 in enumerate(rows1):
        for q, r2 in enumerate(rows2):
            for x in r1:
                for y in r2:
                    s = dg.add(x, y)
                    out[p + q].append(s)
                    out[p + q + 1].append(dg.add(s, alpha))
    return BettiTable.from_lists(out)


@dataclass(frozen=True)
class CIStep:
    j: int
    semigroup: AffineSemigroup
    a_j: Vector
    table: BettiTable
    extension: ExtensionSpec | None  # None for the free starting semigroup


def ci_family(n: int, u: Sequence[int], depth: int) -> list[CIStep]:
    """Complete intersections E_j = 2 E_{j-1} + N{a_j} built over <u_i e_i>.

    Returns the steps j = 0 .. depth; step 0 is the free semigroup itself.
    """
    u = tuple(int(x) for x in u)
    if n < 2 or len(u) != n or any(x < 1 for x in u):
        raise InvalidWeights(f"need n > 1 positive weights, got n = {n}, u = {u}")
    if all(x % 2 == 0 for x in u):
        raise CoprimalityFailure("l = 2 must be coprime to a component of a_1 = u; some weight must be odd")
    zero = (0,) * n
    unit = [tuple(u[i] if k == i else 0 for k in range(n)) for i in range(n)]
    S = AffineSemigroup(unit)
    seq = [(0,) + u[1:], u]  # a_0, a_1
    steps = [CIStep(0, S, seq[0], BettiTable.trivial(zero), None)]
    current, table = S, steps[0].table
    for j in range(1, depth + 1):
        if j >= 2:
            seq.append(dg.add(seq[j - 1], dg.mul(2, seq[j - 2])))
        e = extend(current, seq[j], 2)
        table = e.betti(table)
        current = e.extended
        steps.append(CIStep(j, current, seq[j], table, e))
    return steps


def ci_sign_vector(u: Sequence[int]) -> Vector:
    """The vector (-u_1, u_2, ..., u_n) every recursion difference is a multiple of."""
    return (-u[0],) + tuple(u[1:])
