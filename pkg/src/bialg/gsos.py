"""GSOS rules and the semantics they induce.

A rule ``ρ :: S (x, B x) -> B (S* x)`` sees, for every argument, both the
argument itself and its one-step behaviour, and may answer with arbitrarily
nested syntax over those metavariables.  ``rho_to_lambda`` turns it into a
distributive law of the free monad over the copointed behaviour, from which
the operational model (a fold producing a coalgebra) and the denotational
model (an unfold producing an algebra) are read off.  Their fold and unfold
give the same trees; ``sem`` uses the fold.
"""
from __future__ import annotations

from typing import Any, Callable

from bialg.copointed import CoPointed, ceil_co, counit, floor_co, pmap
from bialg.core import Behavior, Term, ana, cata, inj, observe
from bialg.free import FreeTerm, Op, Var, ceil_free, eval_free, flatten, floor_free, fmap_free, ret

RhoRule = Callable[[Any], Any]


def rho_to_lambda(rho: RhoRule) -> Callable[[FreeTerm], CoPointed]:
    """``rhoToLambda ρ = eval alg (pmap return)``.

    The algebra rebuilds the syntactic copy from the copies of the arguments
    and, alongside it, runs ``ρ`` and flattens the doubly nested syntax.
    """

    def alg(s):
        return CoPointed(Op(s.map(counit)), rho(s).map(flatten))

    def gen(p):
        return pmap(ret, p)

    return lambda ft: eval_free(alg, gen, ft)


def opsem(rho: RhoRule) -> Callable[[Term], Any]:
    """``opsem ρ = ⌊⦅⌊pmap ⌈In⌉ . rhoToLambda ρ⌋⦆⌋``: one step of a closed term."""
    lam = rho_to_lambda(rho)
    to_term = ceil_free(inj)

    def alg(s):
        return pmap(to_term, lam(Op(s.map(Var))))

    return floor_co(lambda t: cata(alg, t))


def desem(rho: RhoRule) -> Callable[[Any], Behavior]:
    """``desem ρ = ⌊[(⌊rhoToLambda ρ . fmap ⌈out⌉⌋)]⌋``: combine denotations."""
    lam = rho_to_lambda(rho)
    with_layer = ceil_co(observe)
    coalg = floor_co(lambda ft: lam(fmap_free(with_layer, ft)))
    return floor_free(lambda ft: ana(coalg, ft))


def sem(rho: RhoRule, t: Term) -> Behavior:
    """``sem ρ t = ⦅desem ρ⦆ t``"""
    return cata(desem(rho), t)


def sem_unfold(rho: RhoRule, t: Term) -> Behavior:
    """``[(opsem ρ)] t``; equal to ``sem`` at every depth."""
    return ana(opsem(rho), t)


def copy_of(ft: FreeTerm) -> FreeTerm:
    """The metavariables of a copointed free term replaced by their copies."""
    return fmap_free(counit, ft)
