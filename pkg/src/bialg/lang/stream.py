"""Stream arithmetic: literals and pointwise addition of streams."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, TypeVar

from bialg.core import Behavior, Emit, Term, cata
from bialg.simple import opsem_simple, sem_simple

X = TypeVar("X")


@dataclass(frozen=True, slots=True)
class Val(Generic[X]):
    n: int

    def map(self, f):
        return self


@dataclass(frozen=True, slots=True)
class Add(Generic[X]):
    left: X
    right: X

    def map(self, f):
        return Add(f(self.left), f(self.right))


def val(n: int) -> Term:
    if n < 0:
        raise ValueError(f"literal must be a natural number, got {n}")
    return Term(Val(n))


def add(x: Term, y: Term) -> Term:
    return Term(Add(x, y))


def desem_nat(s) -> int:
    """The plain evaluator's algebra: ``Val n -> n``, ``Add n m -> n + m``."""
    match s:
        case Val(n):
            return n
        case Add(n, m):
            return n + m
    raise TypeError(f"not a ValAddF layer: {s!r}")


def evaluate(t: Term) -> int:
    return cata(desem_nat, t)


def opsem_distr(s):
    """ValAddF (BHV x) -> BHV (ValAddF x)"""
    match s:
        case Val(n):
            return Emit(n, Val(n))
        case Add(Emit(n, t1), Emit(m, t2)):
            return Emit(n + m, Add(t1, t2))
    raise TypeError(f"not a ValAddF layer: {s!r}")


def opsem_stream(t: Term) -> Emit:
    return opsem_simple(opsem_distr)(t)


def sem_stream(t: Term) -> Behavior:
    return sem_simple(opsem_distr, t)
