"""The free monad over a signature: terms with metavariables."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Generic, TypeVar

from bialg.core import _NOT_LEAF, _fold, identity

A = TypeVar("A")
X = TypeVar("X")


class FreeTerm(Generic[X]):
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Var(FreeTerm[X]):
    value: X


@dataclass(frozen=True, slots=True)
class Op(FreeTerm[X]):
    node: Any


def eval_free(alg: Callable[[Any], A], gen: Callable[[X], A], ft: FreeTerm[X]) -> A:
    """Replace every ``Var v`` by ``gen(v)`` and every ``Op`` layer by ``alg``.

    Shares the depth-safe folding engine with ``cata``.
    """

    def leaf(t):
        if type(t) is Var:
            return gen(t.value)
        return _NOT_LEAF

    return _fold(alg, leaf, ft, 0)


def ret(x: X) -> FreeTerm[X]:
    return Var(x)


def bind(ft: FreeTerm[X], f: Callable[[X], FreeTerm]) -> FreeTerm:
    """``x >>= f = eval Op f x``"""
    return eval_free(Op, f, ft)


def flatten(ft: FreeTerm[FreeTerm[X]]) -> FreeTerm[X]:
    """``(>>= id)``"""
    return bind(ft, identity)


def fmap_free(f: Callable[[X], Any], ft: FreeTerm[X]) -> FreeTerm:
    return bind(ft, lambda x: Var(f(x)))


def floor_free(f: Callable[[FreeTerm[A]], A]) -> Callable[[Any], A]:
    """``⌊f⌋ = f . Op . fmap Var``: a free-monad algebra cut down to one layer."""
    return lambda s: f(Op(s.map(Var)))


def ceil_free(g: Callable[[Any], A]) -> Callable[[FreeTerm[A]], A]:
    """``⌈g⌉ = eval g id``"""
    return lambda ft: eval_free(g, identity, ft)
