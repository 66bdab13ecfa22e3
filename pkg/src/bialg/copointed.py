"""The free copointed functor ``(x, b x)`` and its coalgebra conversions."""
from __future__ import annotations

from typing import Any, Callable, NamedTuple

from bialg.core import identity


class CoPointed(NamedTuple):
    """A behaviour layer together with a retained copy of its input."""

    copy: Any
    layer: Any

    def map(self, f):
        return pmap(f, self)


def pmap(f: Callable, p: CoPointed) -> CoPointed:
    """``pmap f (x, y) = (f x, fmap f y)``"""
    return CoPointed(f(p.copy), p.layer.map(f))


def counit(p: CoPointed):
    return p.copy


def fanout(f: Callable, g: Callable) -> Callable[[Any], tuple]:
    """``(f ∧ g) x = (f x, g x)``"""
    return lambda x: (f(x), g(x))


def floor_co(c: Callable[[Any], CoPointed]) -> Callable[[Any], Any]:
    """Drop the copy from a copointed coalgebra."""
    return lambda x: c(x).layer


def ceil_co(g: Callable[[Any], Any]) -> Callable[[Any], CoPointed]:
    """``⌈g⌉ = id ∧ g``"""
    pair = fanout(identity, g)
    return lambda x: CoPointed(*pair(x))
