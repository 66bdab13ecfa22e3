"""Semantics derived from a simple distributive law ``S (B x) -> B (S x)``.

A law must be uniform in ``x``: it may move slot values around but never
inspect or invent them.  Nothing here can enforce that; the naturality
property tests are what catch a law that cheats.
"""
from __future__ import annotations

from typing import Any, Callable

from bialg.core import Behavior, Term, ana, cata, inj, observe

DistLaw = Callable[[Any], Any]


def opsem_simple(law: DistLaw) -> Callable[[Term], Any]:
    """``opsem λ = ⦅fmap In . λ⦆``"""

    def alg(s):
        return law(s).map(inj)

    return lambda t: cata(alg, t)


def desem_simple(law: DistLaw) -> Callable[[Any], Behavior]:
    """``desem λ = [(λ . fmap out)]``"""

    def coalg(s):
        return law(s.map(observe))

    return lambda s: ana(coalg, s)


def sem_simple(law: DistLaw, t: Term) -> Behavior:
    """The fold of the denotational algebra; coincides with unfolding opsem."""
    return cata(desem_simple(law), t)


def sem_simple_unfold(law: DistLaw, t: Term) -> Behavior:
    """Same meaning computed the other way round: ``[(opsem λ)] t``."""
    return ana(opsem_simple(law), t)
