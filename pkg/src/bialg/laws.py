"""Sampled law checks: functor laws, monad laws, floor/ceiling roundtrips and
naturality of the bundled rules.

Every check draws its inputs from a seeded generator, so a run is
reproducible from ``(check, count, seed)``.  Layers with function slots are
compared after tabulating those slots at the default sample values.
"""
from __future__ import annotations

import random
from typing import Callable

from bialg.copointed import CoPointed, ceil_co, floor_co, pmap
from bialg.core import Emit
from bialg.equiv import SampleConfig, tabulate
from bialg.free import FreeTerm, Op, Var, bind, ceil_free, floor_free, fmap_free, ret
from bialg.lang import ccs, razor, stream
from bialg.lang.ccs import ActR, ActS, Acts, Silent
from bialg.lang.razor import Amb, Step, Stopped
from bialg.lang.stream import Add, Val
from bialg.suites import Report

CHANS = ("a", "b")


def _f(x):
    return 3 * x + 1


def _g(x):
    return x + 7


# -- samplers of single layers with integer slots -------------------------


def _slot(rng):
    return rng.randrange(100)


def sample_valadd(rng):
    return Val(rng.randrange(10)) if rng.random() < 0.3 else Add(_slot(rng), _slot(rng))


def sample_razor_syntax(rng):
    r = rng.random()
    if r < 0.3:
        return Val(rng.randrange(10))
    return Add(_slot(rng), _slot(rng)) if r < 0.65 else Amb(_slot(rng), _slot(rng))


def sample_emit(rng):
    return Emit(rng.randrange(10), _slot(rng))


def sample_stop_and_go(rng):
    if rng.random() < 0.3:
        return Stopped(rng.randrange(10))
    return Step(tuple(_slot(rng) for _ in range(rng.randrange(4))))


def _offset_fn(base, k):
    return lambda v: base + k * v


def sample_ccs_syntax(rng):
    c = rng.choice(CHANS)
    match rng.randrange(7):
        case 0:
            return ccs.Send(c, rng.randrange(4), _slot(rng))
        case 1:
            return ccs.Recv(c, _offset_fn(_slot(rng), rng.randrange(1, 4)))
        case 2:
            return ccs.Sum(_slot(rng), _slot(rng))
        case 3:
            return ccs.Nil()
        case 4:
            return ccs.Par(_slot(rng), _slot(rng))
        case 5:
            return ccs.Rep(_slot(rng))
    return ccs.Restrict(c, _slot(rng))


def _sample_act(rng):
    c = rng.choice(CHANS)
    match rng.randrange(3):
        case 0:
            return ActS(c, rng.randrange(4), _slot(rng))
        case 1:
            return ActR(c, _offset_fn(_slot(rng), rng.randrange(1, 4)))
    return Silent(_slot(rng))


def sample_acts(rng):
    return Acts(tuple(_sample_act(rng) for _ in range(rng.randrange(4))))


SHAPES: dict[str, Callable] = {
    "ValAddF": sample_valadd,
    "RazorF": sample_razor_syntax,
    "BHV": sample_emit,
    "StopAndGo": sample_stop_and_go,
    "CCSF": sample_ccs_syntax,
    "Acts": sample_acts,
}


def _rng(name: str, seed: int) -> random.Random:
    return random.Random(f"laws:{name}:{seed}")


def _report(suite: str, lang: str, seed: int) -> Report:
    return Report(suite, lang, SampleConfig(seed=seed))


def functor_laws(shape: str, count: int = 100, seed: int = 0) -> Report:
    """``map id == id`` and ``map (f . g) == map f . map g``."""
    sample = SHAPES[shape]
    rng = _rng(shape, seed)
    rep = _report("functor-laws", shape, seed)
    for _ in range(count):
        s = sample(rng)
        ident = tabulate(s.map(lambda x: x)) == tabulate(s)
        comp = tabulate(s.map(lambda x: _f(_g(x)))) == tabulate(s.map(_g).map(_f))
        rep.record(ident and comp, why=repr(tabulate(s)))
    return rep


# -- free monad ------------------------------------------------------------


def sample_free(rng, depth: int = 4) -> FreeTerm:
    """A free term over the razor signature with integer metavariables."""
    if depth <= 0 or rng.random() < 0.3:
        return Var(_slot(rng))
    r = rng.random()
    if r < 0.15:
        return Op(Val(rng.randrange(10)))
    left, right = sample_free(rng, depth - 1), sample_free(rng, depth - 1)
    return Op(Add(left, right) if r < 0.6 else Amb(left, right))


def _kleisli(k: int):
    return lambda x: Op(Add(Var(x + k), Var(x * k)))


def monad_laws(count: int = 100, seed: int = 0) -> Report:
    """Left identity, right identity and associativity of ``bind``."""
    rng = _rng("monad", seed)
    rep = _report("monad-laws", "free", seed)
    f, g = _kleisli(2), _kleisli(3)
    for _ in range(count):
        m, a = sample_free(rng), _slot(rng)
        left = bind(ret(a), f) == f(a)
        right = bind(m, ret) == m
        assoc = bind(bind(m, f), g) == bind(m, lambda x: bind(f(x), g))
        rep.record(left and right and assoc, why=repr(m))
    return rep


def _sum_alg(s):
    # a ValAddF/RazorF algebra on naturals; Amb picks the larger side
    match s:
        case Val(n):
            return n
        case Add(n, m):
            return n + m
        case Amb(n, m):
            return max(n, m)


def free_roundtrips(count: int = 100, seed: int = 0) -> Report:
    """``floor . ceil == id`` on algebras and ``ceil . floor == id`` on
    Eilenberg-Moore algebras, both sampled."""
    rng = _rng("free-roundtrip", seed)
    rep = _report("floor-ceil", "free", seed)
    em = ceil_free(_sum_alg)
    back = ceil_free(floor_free(em))
    down = floor_free(ceil_free(_sum_alg))
    for _ in range(count):
        s, ft = sample_razor_syntax(rng), sample_free(rng)
        rep.record(down(s) == _sum_alg(s) and back(ft) == em(ft), why=repr(ft))
    return rep


def copointed_roundtrips(count: int = 100, seed: int = 0) -> Report:
    """``floor . ceil == id`` on coalgebras and ``ceil . floor == id`` on
    coalgebras that keep their input as the copy."""
    rng = _rng("copointed-roundtrip", seed)
    rep = _report("floor-ceil", "copointed", seed)

    def g(x):
        return Step((x, x + 1)) if x % 2 else Stopped(x)

    c = ceil_co(g)
    for _ in range(count):
        x = _slot(rng)
        down = floor_co(ceil_co(g))(x) == g(x)
        back = ceil_co(floor_co(c))(x) == c(x)
        counit_law = c(x).copy == x
        pm = pmap(_f, c(x)) == CoPointed(_f(x), g(x).map(_f))
        rep.record(down and back and counit_law and pm, why=f"x={x}")
    return rep


# -- naturality ------------------------------------------------------------


def distr_naturality(count: int = 100, seed: int = 0) -> Report:
    """``opsem_distr . fmap (fmap f) == fmap (fmap f) . opsem_distr``."""
    rng = _rng("distr", seed)
    rep = _report("naturality", "opsem_distr", seed)
    for _ in range(count):
        if rng.random() < 0.3:
            s = Val(rng.randrange(10))
        else:
            s = Add(sample_emit(rng), sample_emit(rng))
        lhs = stream.opsem_distr(s.map(lambda b: b.map(_f)))
        rhs = stream.opsem_distr(s).map(lambda t: t.map(_f))
        rep.record(lhs == rhs, why=repr(s))
    return rep


def _pair(rng, behaviour):
    x = _slot(rng)
    return CoPointed(x, behaviour(rng))


def _gsos_naturality(name, rho, sample_layer, count, seed) -> Report:
    rng = _rng(name, seed)
    rep = _report("naturality", name, seed)
    lift = lambda p: pmap(_f, p)  # noqa: E731
    for _ in range(count):
        s = sample_layer(rng)
        try:
            rhs = rho(s)
        except ValueError:
            rep.record(False, why=f"rule rejected {s!r}")
            continue
        lhs = rho(s.map(lift))
        rhs = rhs.map(lambda ft: fmap_free(_f, ft))
        rep.record(tabulate(lhs) == tabulate(rhs), why=repr(tabulate(s)))
    return rep


def _razor_layer(with_amb: bool):
    def sample(rng):
        r = rng.random()
        if r < 0.2:
            return Val(rng.randrange(10))
        p1, p2 = _pair(rng, sample_stop_and_go), _pair(rng, sample_stop_and_go)
        return Amb(p1, p2) if with_amb and r < 0.5 else Add(p1, p2)

    return sample


def _ccs_layer(rng):
    beh = sample_acts
    c = rng.choice(CHANS)
    match rng.randrange(7):
        case 0:
            return ccs.Send(c, rng.randrange(4), _pair(rng, beh))
        case 1:
            pairs = [_pair(rng, beh) for _ in range(3)]
            return ccs.Recv(c, lambda v: pairs[v % 3])
        case 2:
            return ccs.Sum(_pair(rng, beh), _pair(rng, beh))
        case 3:
            return ccs.Nil()
        case 4:
            return ccs.Par(_pair(rng, beh), _pair(rng, beh))
        case 5:
            return ccs.Rep(_pair(rng, beh))
    return ccs.Restrict(c, _pair(rng, beh))


def razor_naturality(count: int = 100, seed: int = 0, with_amb: bool = True) -> Report:
    rho = razor.rho_razor_amb if with_amb else razor.rho_razor
    name = "rho_razor_amb" if with_amb else "rho_razor"
    return _gsos_naturality(name, rho, _razor_layer(with_amb), count, seed)


def ccs_naturality(count: int = 100, seed: int = 0) -> Report:
    return _gsos_naturality("rho_ccs", ccs.rho_ccs, _ccs_layer, count, seed)


def all_laws(count: int = 100, seed: int = 0) -> list[Report]:
    reps = [functor_laws(shape, count, seed) for shape in SHAPES]
    reps += [
        monad_laws(count, seed),
        free_roundtrips(count, seed),
        copointed_roundtrips(count, seed),
        distr_naturality(count, seed),
        razor_naturality(count, seed, with_amb=False),
        razor_naturality(count, seed, with_amb=True),
        ccs_naturality(count, seed),
    ]
    return reps

