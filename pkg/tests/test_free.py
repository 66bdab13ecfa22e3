import random

from hypothesis import given, strategies as st

from bialg.free import (
    Op, Var, bind, ceil_free, eval_free, flatten, floor_free, fmap_free, ret,
)
from bialg.laws import free_roundtrips, monad_laws, sample_free
from bialg.lang.razor import Amb
from bialg.lang.stream import Add, Val, desem_nat


def test_eval_on_var_is_gen():
    assert eval_free(desem_nat, lambda v: v * 10, Var(4)) == 40


def test_eval_one_layer():
    assert eval_free(desem_nat, lambda v: v, Op(Add(Var(1), Var(2)))) == 3


@given(st.integers(0, 10_000))
def test_eval_op_var_is_identity(seed):
    ft = sample_free(random.Random(seed))
    assert eval_free(Op, Var, ft) == ft


def test_bind_identities():
    f = lambda x: Op(Add(Var(x), Var(x)))  # noqa: E731
    assert bind(Var(3), f) == f(3)
    ft = Op(Add(Var(1), Op(Val(2))))
    assert bind(ft, Var) == ft


def test_flatten_and_fmap():
    inner = Op(Add(Var("a"), Var("b")))
    assert flatten(Op(Add(Var(inner), Var(Var("c"))))) == Op(Add(inner, Var("c")))
    assert fmap_free(str.upper, inner) == Op(Add(Var("A"), Var("B")))
    assert ret(5) == Var(5)


def test_floor_ceil_examples():
    assert floor_free(ceil_free(desem_nat))(Add(1, 2)) == 3
    assert ceil_free(desem_nat)(Var(7)) == 7
    assert ceil_free(desem_nat)(Op(Add(Var(4), Var(5)))) == desem_nat(Add(4, 5))


def test_deep_free_term_binds():
    ft = Var(0)
    for i in range(20_000):
        ft = Op(Add(ft, Var(i)))
    doubled = fmap_free(lambda x: 2 * x, ft)
    assert ceil_free(desem_nat)(doubled) == 2 * sum(range(20_000))


def test_monad_law_suite():
    rep = monad_laws(200, seed=3)
    assert rep.ok, rep.lines()


def test_roundtrip_suite():
    rep = free_roundtrips(200, seed=3)
    assert rep.ok, rep.lines()


@given(st.integers(0, 10_000))
def test_eval_is_substitute_then_fold(seed):
    ft = sample_free(random.Random(seed))
    env = lambda x: x % 7  # noqa: E731
    direct = eval_free(alg, env, ft)
    substituted = bind(ft, lambda x: Op(Val(env(x))))
    assert direct == eval_free(alg, lambda x: x, substituted)


def alg(s):
    # sum, with Amb taking the larger side
    return max(s.left, s.right) if isinstance(s, Amb) else desem_nat(s)
