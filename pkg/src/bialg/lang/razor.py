"""Hutton's razor with stop-and-go behaviour.

The pure razor never reaches the ``Step`` clauses of its rule: every
subterm stops with a number, by induction.  ``Amb`` (not part of the razor
proper) is a binary choice that steps to either argument; it exists so those
clauses get exercised, and only ``rho_razor_amb`` accepts it.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Generic, TypeVar

from bialg.core import Behavior, Term
from bialg.free import Op, Var
from bialg.gsos import sem
from bialg.lang.stream import Add, Val, add, val

X = TypeVar("X")

__all__ = [
    "Add", "Amb", "Step", "Stopped", "Val", "add", "amb", "val",
    "rho_razor", "rho_razor_amb", "razor_rule", "sem_razor", "smallstep", "smallstep_layer",
    "razor_oracle", "term_size", "has_amb", "OracleBoundExceeded",
]


@dataclass(frozen=True, slots=True)
class Stopped(Generic[X]):
    n: int

    def map(self, f):
        return self


@dataclass(frozen=True, slots=True)
class Step(Generic[X]):
    next: tuple

    def map(self, f):
        return Step(tuple(f(x) for x in self.next))


@dataclass(frozen=True, slots=True)
class Amb(Generic[X]):
    left: X
    right: X

    def map(self, f):
        return Amb(f(self.left), f(self.right))


def amb(x: Term, y: Term) -> Term:
    return Term(Amb(x, y))


def _add(x, y):
    return Op(Add(Var(x), Var(y)))


def _rho(s, allow_amb: bool):
    match s:
        case Val(n):
            return Stopped(n)
        case Add((_, Stopped(n)), (_, Stopped(m))):
            return Stopped(n + m)
        case Add((x1, Step(xs1)), (x2, Step(xs2))):
            # right-derived successors first
            return Step(tuple(_add(x1, y) for y in xs2) + tuple(_add(y, x2) for y in xs1))
        case Add((x1, _), (_, Step(xs2))):
            return Step(tuple(_add(x1, y) for y in xs2))
        case Add((_, Step(xs1)), (x2, _)):
            return Step(tuple(_add(y, x2) for y in xs1))
        case Amb((x1, _), (x2, _)) if allow_amb:
            return Step((Var(x1), Var(x2)))
        case Amb():
            raise ValueError("Amb requires the razor+amb rule")
    raise TypeError(f"not a razor layer: {s!r}")


def rho_razor(s):
    """RazorF (x, StopAndGo x) -> StopAndGo (RazorF* x), without Amb."""
    return _rho(s, False)


def rho_razor_amb(s):
    return _rho(s, True)


def razor_rule(allow_amb: bool = False):
    return rho_razor_amb if allow_amb else rho_razor


def sem_razor(t: Term, allow_amb: bool | None = None) -> Behavior:
    if allow_amb is None:
        allow_amb = has_amb(t)
    return sem(razor_rule(allow_amb), t)


def smallstep(t: Term) -> list[Term]:
    """The textbook reduction relation, as a list of one-step reducts."""
    match t.node:
        case Val():
            return []
        case Add(Term(Val(n)), Term(Val(m))):
            return [val(n + m)]
        case Add(t1, t2):
            return [add(r, t2) for r in smallstep(t1)] + [add(t1, r) for r in smallstep(t2)]
    raise TypeError(f"not a ValAddF term: {t!r}")


def smallstep_layer(t: Term) -> Step:
    """``smallstep`` viewed as a coalgebra into lists."""
    return Step(tuple(smallstep(t)))


def term_size(t: Term) -> int:
    match t.node:
        case Val():
            return 1
        case Add(l, r) | Amb(l, r):
            return 1 + term_size(l) + term_size(r)
    raise TypeError(f"not a razor term: {t!r}")


def has_amb(t: Term) -> bool:
    match t.node:
        case Val():
            return False
        case Amb():
            return True
        case Add(l, r):
            return has_amb(l) or has_amb(r)
    raise TypeError(f"not a razor term: {t!r}")


class OracleBoundExceeded(ValueError):
    pass


def _oracle_step(t: Term):
    # One step of the stop-and-go relation, read straight off the rules.
    match t.node:
        case Val(n):
            return Stopped(n)
        case Amb(l, r):
            return Step((l, r))
        case Add(t1, t2):
            b1, b2 = _oracle_step(t1), _oracle_step(t2)
            if isinstance(b1, Stopped) and isinstance(b2, Stopped):
                return Stopped(b1.n + b2.n)
            succ = []
            if isinstance(b2, Step):
                succ += [add(t1, r) for r in b2.next]
            if isinstance(b1, Step):
                succ += [add(r, t2) for r in b1.next]
            return Step(tuple(succ))
    raise TypeError(f"not a razor term: {t!r}")


def _literal_sum(t: Term) -> int:
    match t.node:
        case Val(n):
            return n
        case Add(l, r):
            return _literal_sum(l) + _literal_sum(r)
    raise TypeError(f"not a ValAddF term: {t!r}")


def razor_oracle(t: Term, max_size: int = 16):
    """Brute-force behaviour tree of a razor(+amb) term, as a ``TruncatedTree``.

    Amb-free terms stop at once with the sum of their literals.  Otherwise the
    whole (finite) tree is enumerated from the relational rules.
    """
    from bialg.equiv import Node

    if term_size(t) > max_size:
        raise OracleBoundExceeded(f"term size {term_size(t)} exceeds bound {max_size}")
    if not has_amb(t):
        return Node(Stopped(_literal_sum(t)))

    def tree(u):
        layer = _oracle_step(u)
        if isinstance(layer, Stopped):
            return Node(layer)
        return Node(Step(tuple(tree(r) for r in layer.next)))

    return tree(t)
