"""Arithmetic on S-degrees, which are plain ints (numerical) or int tuples (affine)."""

from __future__ import annotations

from typing import Union

Degree = Union[int, tuple[int, ...]]


def add(x: Degree, y: Degree) -> Degree:
    if isinstance(x, tuple):
        return tuple(a + b for a, b in zip(x, y))
    return x + y


def sub(x: Degree, y: Degree) -> Degree:
    if isinstance(x, tuple):
        return tuple(a - b for a, b in zip(x, y))
    return x - y


def neg(x: Degree) -> Degree:
    if isinstance(x, tuple):
        return tuple(-a for a in x)
    return -x


def mul(c: int, x: Degree) -> Degree:
    if isinstance(x, tuple):
        return tuple(c * a for a in x)
    return c * x


def zero_like(x: Degree) -> Degree:
    if isinstance(x, tuple):
        return (0,) * len(x)
    return 0


def to_json(x: Degree):
    return list(x) if isinstance(x, tuple) else x


def from_json(x) -> Degree:
    return tuple(x) if isinstance(x, list) else x
