"""Inductive terms, coinductive behaviours, fold and unfold.

A *shape* is any value with a ``map(f)`` method that applies ``f`` to every
slot and rebuilds the same constructor.  Shapes whose slots are functions
(``Recv``, ``ActR``) map by post-composition, so mapping never calls them.

``Term`` is the least fixed point of a shape (finite, built eagerly) and
``Behavior`` the greatest fixed point (a lazily expanded, memoised node).
"""
from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from typing import Any, Callable, Generic, TypeVar

A = TypeVar("A")
X = TypeVar("X")

# Levels of host recursion used by ``cata`` before it switches to an explicit
# work stack; each level costs a handful of interpreter frames.
RECURSION_CUTOFF = 120

_NOT_LEAF = object()


def identity(x):
    return x


def smap(f, shape):
    """Structure-preserving map over one layer: ``fmap f shape``."""
    return shape.map(f)


@dataclass(frozen=True)
class Term(Generic[X]):
    """One node of an inductive term: ``In { in° :: S (Term S) }``.

    Equality is structural.  It recurses through Python's ``__eq__``, so
    comparing terms nested deeper than the interpreter recursion limit raises
    ``RecursionError``; folding over them does not.
    """

    node: Any

    def __repr__(self):
        return f"In({self.node!r})"


def inj(shape) -> Term:
    return Term(shape)


def prj(term: Term):
    return term.node


def _fold(alg, on_leaf, t, depth):
    if on_leaf is not None:
        leaf = on_leaf(t)
        if leaf is not _NOT_LEAF:
            return leaf
    if depth > RECURSION_CUTOFF:
        return _fold_stack(alg, on_leaf, t)
    return alg(t.node.map(lambda c: _fold(alg, on_leaf, c, depth + 1)))


def _fold_stack(alg, on_leaf, root):
    # Post-order with an explicit stack.  Entries keep the node alive so the
    # id() keys cannot be recycled while the fold runs.
    done: dict[int, tuple[Any, Any]] = {}

    def lookup(c):
        hit = done.get(id(c))
        if hit is not None and hit[0] is c:
            return hit[1]
        # Slots reached only later (function-valued slots) fold afresh.
        return _fold(alg, on_leaf, c, 0)

    stack = [(root, False)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in done:
            continue
        if expanded:
            done[id(node)] = (node, alg(node.node.map(lookup)))
            continue
        if on_leaf is not None:
            leaf = on_leaf(node)
            if leaf is not _NOT_LEAF:
                done[id(node)] = (node, leaf)
                continue
        stack.append((node, True))
        children: list = []
        node.node.map(children.append)
        stack.extend((c, False) for c in children if id(c) not in done)
    return done[id(root)][1]


def cata(alg: Callable[[Any], A], t: Term) -> A:
    """``⦅alg⦆ = alg . fmap ⦅alg⦆ . in°``.

    Shallow terms recurse directly; anything deeper than
    ``RECURSION_CUTOFF`` levels is finished on an explicit stack, so depth is
    bounded by memory rather than by the interpreter stack.
    """
    return _fold(alg, None, t, 0)


class _Unset:
    __slots__ = ()

    def __repr__(self):
        return "<unforced>"


_UNSET = _Unset()
# One process-wide lock: forcing may recursively force other nodes on the
# same thread, and a single re-entrant lock cannot deadlock on that.
_FORCE_LOCK = threading.RLock()


class Behavior(Generic[X]):
    """A node of a coinductive tree: ``Out° { out :: B (Behavior B) }``.

    The layer is produced on first observation and cached; every later
    observation returns the very same layer object.
    """

    __slots__ = ("_thunk", "_layer")

    def __init__(self, thunk: Callable[[], Any]):
        self._thunk = thunk
        self._layer = _UNSET

    @classmethod
    def of(cls, layer) -> "Behavior":
        node = cls(None)
        node._layer = layer
        return node

    @property
    def forced(self) -> bool:
        return self._layer is not _UNSET

    def observe(self):
        layer = self._layer
        if layer is _UNSET:
            with _FORCE_LOCK:
                if self._layer is _UNSET:
                    self._layer = self._thunk()
                    self._thunk = None
                layer = self._layer
        return layer

    def __repr__(self):
        return f"Behavior({self._layer!r})"


def observe(b: Behavior):
    """``out``: force exactly one layer of ``b``."""
    return b.observe()


def ana(coalg: Callable[[X], Any], seed: X) -> Behavior:
    """``[(coalg)] = Out° . fmap [(coalg)] . coalg``, expanded on demand."""
    return Behavior(lambda: coalg(seed).map(lambda y: ana(coalg, y)))


# -- the three-state transition system ------------------------------------


@dataclass(frozen=True, slots=True)
class Emit(Generic[X]):
    """Stream behaviour ``BHV k = Nat :< k``: a label and the next state."""

    head: int
    tail: X

    def map(self, f):
        return Emit(self.head, f(self.tail))


class State(enum.Enum):
    X1 = 1
    X2 = 2
    X3 = 3


_STATES_TABLE = {
    State.X1: Emit(1, State.X2),
    State.X2: Emit(2, State.X3),
    State.X3: Emit(2, State.X3),
}


def opsem_states(x: State) -> Emit:
    """x1 -1-> x2 -2-> x3 -2-> x3 ..."""
    return _STATES_TABLE[x]


def labels(b: Behavior, n: int) -> list[int]:
    """First ``n`` heads of a stream behaviour."""
    out = []
    for _ in range(n):
        layer = b.observe()
        out.append(layer.head)
        b = layer.tail
    return out
