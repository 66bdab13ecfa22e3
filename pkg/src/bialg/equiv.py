"""Bounded-depth comparison of behaviours, and random term generators.

Infinite behaviours are compared through finite truncations.  A truncation
replaces everything below the depth budget by ``CUT`` and every
function-valued slot (a receive continuation) by a ``Table`` of its results
at the configured sample values.  Equality of receives is therefore sampled,
not decided: a reported result is only as strong as its sample set.
"""
from __future__ import annotations

import dataclasses
import random
from dataclasses import dataclass, field
from typing import Any, Callable

from bialg.core import Behavior, Term
from bialg.lang import ccs
from bialg.lang.razor import amb
from bialg.lang.stream import add, val

DEFAULT_SAMPLES = (0, 1, 2, 3)
DEFAULT_DEPTH = 5


@dataclass(frozen=True)
class SampleConfig:
    depth: int = DEFAULT_DEPTH
    receive_samples: tuple[int, ...] = DEFAULT_SAMPLES
    seed: int = 0

    def __post_init__(self):
        if not self.receive_samples:
            raise ValueError("receive_samples must not be empty")
        if list(self.receive_samples) != sorted(set(self.receive_samples)):
            raise ValueError("receive_samples must be strictly ascending")
        if self.depth < 0:
            raise ValueError("depth must be non-negative")

    def with_depth(self, depth: int) -> "SampleConfig":
        return dataclasses.replace(self, depth=depth)

    def describe(self) -> str:
        return f"depth={self.depth} samples={list(self.receive_samples)} seed={self.seed}"


class _Cut:
    __slots__ = ()

    def __repr__(self):
        return "CUT"

    def __reduce__(self):
        return "CUT"


CUT = _Cut()


@dataclass(frozen=True, slots=True)
class Node:
    """One forced layer whose slots hold truncated subtrees."""

    layer: Any


@dataclass(frozen=True, slots=True)
class Table:
    """A function slot tabulated at the sample values."""

    entries: tuple[tuple[int, Any], ...]


def _materialize(layer, samples):
    if isinstance(layer, tuple):
        return tuple(_materialize(x, samples) for x in layer)
    if not dataclasses.is_dataclass(layer) or isinstance(layer, (Node, Table)):
        return layer
    changes = {}
    for fld in dataclasses.fields(layer):
        v = getattr(layer, fld.name)
        if callable(v):
            changes[fld.name] = Table(tuple((s, v(s)) for s in samples))
        elif isinstance(v, tuple) or (dataclasses.is_dataclass(v) and not isinstance(v, (Node, Table))):
            changes[fld.name] = _materialize(v, samples)
    return dataclasses.replace(layer, **changes) if changes else layer


def tabulate(layer, samples=DEFAULT_SAMPLES):
    """``layer`` with every function-valued slot replaced by a ``Table``."""
    return _materialize(layer, tuple(samples))


def _truncate(b: Behavior, depth: int, samples) -> Any:
    if depth <= 0:
        return CUT
    layer = b.observe().map(lambda c: _truncate(c, depth - 1, samples))
    return Node(_materialize(layer, samples))


def truncate(b: Behavior, cfg: SampleConfig | int = DEFAULT_DEPTH):
    """The first ``cfg.depth`` layers of ``b`` as a finite, comparable tree."""
    if isinstance(cfg, int):
        cfg = SampleConfig(depth=cfg)
    return _truncate(b, cfg.depth, cfg.receive_samples)


def beh_eq(b1: Behavior, b2: Behavior, cfg: SampleConfig | int = DEFAULT_DEPTH) -> bool:
    return truncate(b1, cfg) == truncate(b2, cfg)


def trace_tree(coalg: Callable[[Any], Any], x, cfg: SampleConfig | int = DEFAULT_DEPTH):
    """Iterate ``coalg`` from ``x`` directly, without building behaviours."""
    if isinstance(cfg, int):
        cfg = SampleConfig(depth=cfg)
    samples = cfg.receive_samples

    def go(y, depth):
        if depth <= 0:
            return CUT
        return Node(_materialize(coalg(y).map(lambda z: go(z, depth - 1)), samples))

    return go(x, cfg.depth)


def is_prefix(a, b) -> bool:
    """True when ``b`` only replaces ``CUT`` leaves of ``a`` by subtrees."""
    if a is CUT:
        return True
    if type(a) is not type(b):
        return False
    if isinstance(a, tuple):
        return len(a) == len(b) and all(is_prefix(x, y) for x, y in zip(a, b))
    if dataclasses.is_dataclass(a):
        return all(
            is_prefix(getattr(a, f.name), getattr(b, f.name)) for f in dataclasses.fields(a)
        )
    return a == b


def has_cut(tree) -> bool:
    if tree is CUT:
        return True
    if isinstance(tree, tuple):
        return any(has_cut(x) for x in tree)
    if dataclasses.is_dataclass(tree):
        return any(has_cut(getattr(tree, f.name)) for f in dataclasses.fields(tree))
    return False


def stream_labels(tree) -> list[int]:
    """Labels along a truncated stream."""
    out = []
    while isinstance(tree, Node):
        out.append(tree.layer.head)
        tree = tree.layer.tail
    return out


# -- generators ------------------------------------------------------------

LANGS = ("stream", "razor", "razor+amb", "ccs")
CHANNELS = ("a", "b", "c")


@dataclass
class _Gen:
    rng: random.Random
    lang: str
    max_literal: int = 1 << 16
    channels: tuple[str, ...] = field(default=CHANNELS)

    def arith(self, budget: int) -> Term:
        if budget < 3 or self.rng.random() < 0.15:
            return val(self.rng.randrange(self.max_literal))
        left = self.rng.randint(1, budget - 2)
        l, r = self.arith(left), self.arith(budget - 1 - left)
        if self.lang == "razor+amb" and self.rng.random() < 0.4:
            return amb(l, r)
        return add(l, r)

    def ccs(self, budget: int) -> Term:
        rng = self.rng
        if budget <= 1:
            return ccs.nil()
        choices = ["send", "restrict", "rep"]
        if budget >= 3:
            choices += ["recv", "sum", "par", "par"]
        kind = rng.choice(choices)
        chan = rng.choice(self.channels)
        if kind == "send":
            return ccs.send(chan, rng.randrange(4), self.ccs(budget - 1))
        if kind == "restrict":
            return ccs.res(chan, self.ccs(budget - 1))
        if kind == "rep":
            return ccs.rep(self.ccs(budget - 1))
        if kind == "recv":
            out, offset = rng.choice(self.channels), rng.randrange(3)
            inner = self.ccs(budget - 2)
            return ccs.recv(chan, lambda v: ccs.send(out, v + offset, inner))
        left = rng.randint(1, budget - 2)
        l, r = self.ccs(left), self.ccs(budget - 1 - left)
        return ccs.csum(l, r) if kind == "sum" else ccs.par(l, r)


def gen_term(lang: str, size: int, seed: int, **options) -> Term:
    """A pseudo-random term of at most ``size`` constructors.

    Deterministic in ``(lang, size, seed)``.  Receive continuations are
    templates ``c?(v).d!(v + k).P`` so that sampled values stay observable.
    """
    if lang not in LANGS:
        raise ValueError(f"unknown language {lang!r}; expected one of {LANGS}")
    if size < 1:
        raise ValueError("size must be at least 1")
    g = _Gen(random.Random(f"{lang}:{size}:{seed}"), lang, **options)
    return g.ccs(size) if lang == "ccs" else g.arith(size)


def ccs_size(t: Term, sample: int = 0) -> int:
    """Constructor count, looking through receives at one sample value."""
    match t.node:
        case ccs.Nil():
            return 1
        case ccs.Recv(_, k):
            return 1 + ccs_size(k(sample), sample)
        case ccs.Send(_, _, p) | ccs.Rep(p) | ccs.Restrict(_, p):
            return 1 + ccs_size(p, sample)
        case ccs.Sum(l, r) | ccs.Par(l, r):
            return 1 + ccs_size(l, sample) + ccs_size(r, sample)
    raise TypeError(f"not a CCS term: {t!r}")


def enumerate_arith(max_size: int, literals=(0, 1, 2), with_amb: bool = False) -> list[Term]:
    """Every razor term with at most ``max_size`` constructors over ``literals``."""
    by_size: dict[int, list[Term]] = {1: [val(n) for n in literals]}
    ops = (add, amb) if with_amb else (add,)
    for size in range(2, max_size + 1):
        terms = []
        for left in range(1, size - 1):
            right = size - 1 - left
            for l in by_size.get(left, []):
                for r in by_size.get(right, []):
                    terms.extend(op(l, r) for op in ops)
        by_size[size] = terms
    return [t for size in sorted(by_size) for t in by_size[size]]
