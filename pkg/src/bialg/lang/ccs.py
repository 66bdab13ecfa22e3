"""Value-passing CCS: syntax, actions, the GSOS rule and the example programs.

Values are naturals and channels are strings.  A receive carries its
continuation as a Python function from the received value to a process, and
an ``ActR`` action likewise carries a function from values to successors.

Action lists keep the exact concatenation order of the rule (sum: left then
right; parallel: left merge then the mirrored merge, each listing plain
moves before synchronisations).  ``outputs`` walks them in that order, so
the order is observable.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, Generic, Iterator, TypeVar

from bialg.core import Behavior, Term
from bialg.free import Op, Var
from bialg.gsos import sem

X = TypeVar("X")


# -- syntax ----------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Send(Generic[X]):
    chan: str
    value: int
    cont: X

    def map(self, f):
        return Send(self.chan, self.value, f(self.cont))


@dataclass(frozen=True, slots=True)
class Recv(Generic[X]):
    chan: str
    cont: Callable[[int], X]

    def map(self, f):
        k = self.cont
        return Recv(self.chan, lambda v: f(k(v)))


@dataclass(frozen=True, slots=True)
class Sum(Generic[X]):
    left: X
    right: X

    def map(self, f):
        return Sum(f(self.left), f(self.right))


@dataclass(frozen=True, slots=True)
class Nil(Generic[X]):
    def map(self, f):
        return self


@dataclass(frozen=True, slots=True)
class Par(Generic[X]):
    left: X
    right: X

    def map(self, f):
        return Par(f(self.left), f(self.right))


@dataclass(frozen=True, slots=True)
class Rep(Generic[X]):
    proc: X

    def map(self, f):
        return Rep(f(self.proc))


@dataclass(frozen=True, slots=True)
class Restrict(Generic[X]):
    chan: str
    proc: X

    def map(self, f):
        return Restrict(self.chan, f(self.proc))


# -- behaviour -------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class ActS(Generic[X]):
    chan: str
    value: int
    next: X

    def map(self, f):
        return ActS(self.chan, self.value, f(self.next))


@dataclass(frozen=True, slots=True)
class ActR(Generic[X]):
    chan: str
    cont: Callable[[int], X]

    def map(self, f):
        k = self.cont
        return ActR(self.chan, lambda v: f(k(v)))


@dataclass(frozen=True, slots=True)
class Silent(Generic[X]):
    next: X

    def map(self, f):
        return Silent(f(self.next))


@dataclass(frozen=True, slots=True)
class Acts(Generic[X]):
    items: tuple = ()

    def map(self, f):
        return Acts(tuple(a.map(f) for a in self.items))


def bapp(a: Acts, b: Acts) -> Acts:
    return Acts(a.items + b.items)


def bfilter(p: Callable[[object], bool], a: Acts) -> Acts:
    return Acts(tuple(x for x in a.items if p(x)))


def is_silent(a) -> bool:
    return isinstance(a, Silent)


# -- the rule --------------------------------------------------------------


def _lmerge(xb, xb2) -> Acts:
    (_, b), (x2, b2) = xb, xb2
    moves = b.map(lambda y: Op(Par(Var(y), Var(x2))))
    syncs = tuple(
        Silent(Op(Par(Var(s.next), Var(r.cont(s.value)))))
        for s in b.items if type(s) is ActS
        for r in b2.items if type(r) is ActR and r.chan == s.chan
    )
    return Acts(moves.items + syncs)


def rho_ccs(s) -> Acts:
    """CCS (x, Acts x) -> Acts (CCS* x)"""
    match s:
        case Send(c, v, (x, _)):
            return Acts((ActS(c, v, Var(x)),))
        case Recv(c, k):
            return Acts((ActR(c, lambda v: Var(k(v).copy)),))
        case Nil():
            return Acts()
        case Sum((_, b), (_, b2)):
            return bapp(b.map(Var), b2.map(Var))
        case Restrict(c, (_, b)):
            def check(a):
                return is_silent(a) or a.chan != c

            return bfilter(check, b.map(lambda y: Op(Restrict(c, Var(y)))))
        case Par(xb, xb2):
            return bapp(_lmerge(xb, xb2), _lmerge(xb2, xb))
        case Rep((x, b)):
            return b.map(lambda y: Op(Par(Var(y), Op(Rep(Var(x))))))
    raise TypeError(f"not a CCS layer: {s!r}")


def sem_ccs(t: Term) -> Behavior:
    return sem(rho_ccs, t)


def outputs(b: Behavior, max_count: int | None = None,
            max_depth: int | None = None) -> Iterator[int]:
    """Values sent along the tree, depth first and left to right.

    Sends emit their value and are followed; receives contribute nothing;
    silent moves are followed.  Stops after ``max_count`` values, and never
    observes more than ``max_depth`` layers down any path.  With both bounds
    unset this only terminates on finite trees.
    """
    if max_count is not None and max_count <= 0:
        return
    if max_depth is not None and max_depth <= 0:
        return
    emitted = 0
    stack = [(iter(b.observe().items), 1)]
    while stack:
        it, depth = stack[-1]
        act = next(it, None)
        if act is None:
            stack.pop()
            continue
        kind = type(act)
        if kind is ActS:
            yield act.value
            emitted += 1
            if max_count is not None and emitted >= max_count:
                return
        elif kind is not Silent:
            continue
        if max_depth is None or depth < max_depth:
            stack.append((iter(act.next.observe().items), depth + 1))


def nub(xs) -> list:
    """Drop repeats, keeping first occurrences in order."""
    return list(dict.fromkeys(xs))


# -- smart constructors and the example programs --------------------------


def nil() -> Term:
    return Term(Nil())


def send(c: str, v: int, p: Term) -> Term:
    if v < 0:
        raise ValueError(f"values are natural numbers, got {v}")
    return Term(Send(c, v, p))


def recv(c: str, k: Callable[[int], Term]) -> Term:
    return Term(Recv(c, k))


def csum(p: Term, q: Term) -> Term:
    return Term(Sum(p, q))


def par(p: Term, q: Term, *more: Term) -> Term:
    """``p || q || ...``, associating to the left."""
    return reduce(lambda a, b: Term(Par(a, b)), more, Term(Par(p, q)))


def rep(p: Term) -> Term:
    return Term(Rep(p))


def res(c: str, p: Term) -> Term:
    return Term(Restrict(c, p))


def res_all(chans: list[str], p: Term) -> Term:
    """``res' ls p = foldr res p ls``: the first channel ends up outermost."""
    for c in reversed(chans):
        p = res(c, p)
    return p


def example_nats() -> Term:
    def body(i):
        return send("output", i, send("i", i + 1, nil()))

    return res("i", par(send("i", 0, nil()), rep(recv("i", body))))


def example_counter() -> Term:
    def handler(v):
        return csum(
            recv("rd", lambda _: send("count", v, send("init", v, nil()))),
            recv("wt", lambda i: send("init", i, nil())),
        )

    return res("init", par(send("init", 0, nil()), rep(recv("init", handler))))


def read(k: Callable[[int], Term]) -> Term:
    return send("rd", 0, recv("count", k))


def write(v: int, p: Term) -> Term:
    return send("wt", v, p)


def incr(p: Term) -> Term:
    return read(lambda v: write(v + 1, p))


def example_counter_test() -> Term:
    reporter = read(lambda v: send("output", v, nil()))
    return res_all(
        ["rd", "wt", "count"],
        par(example_counter(), incr(incr(nil())), incr(incr(reporter))),
    )
