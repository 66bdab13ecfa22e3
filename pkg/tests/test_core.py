import threading

import pytest

from bialg.core import (
    RECURSION_CUTOFF, Behavior, Emit, State, Term, ana, cata, identity, inj, labels,
    observe, opsem_states, prj, smap,
)
from bialg.equiv import beh_eq, gen_term, truncate
from bialg.lang.stream import Add, Val, add, desem_nat, val


def test_cata_examples():
    assert cata(desem_nat, val(3)) == 3
    assert cata(desem_nat, add(val(1), val(2))) == 3


@pytest.mark.parametrize("seed", range(20))
def test_cata_rewrap_is_identity(seed):
    t = gen_term("stream", 15, seed)
    assert cata(inj, t) == t


@pytest.mark.parametrize("seed", range(20))
def test_cata_equation(seed):
    # cata alg == alg . fmap (cata alg) . prj
    t = gen_term("stream", 15, seed)
    assert cata(desem_nat, t) == desem_nat(smap(lambda c: cata(desem_nat, c), prj(t)))


def _left_spine(n):
    t = val(1)
    for _ in range(n):
        t = Term(Add(t, val(1)))
    return t


def test_cata_deep_terms():
    assert cata(desem_nat, _left_spine(100_000)) == 100_001


def test_cata_across_cutoff_boundary():
    for n in (RECURSION_CUTOFF - 1, RECURSION_CUTOFF, RECURSION_CUTOFF + 1, 3 * RECURSION_CUTOFF):
        assert cata(desem_nat, _left_spine(n)) == n + 1


def test_cata_deep_right_spine_with_shared_children():
    shared = val(2)
    t = shared
    for _ in range(5000):
        t = add(shared, t)
    assert cata(desem_nat, t) == 2 * 5001


def test_identity_and_inj_prj():
    assert identity(4) == 4
    s = Val(3)
    assert prj(inj(s)) is s
    assert repr(val(3)) == "In(Val(n=3))"


def test_states_labels():
    assert labels(ana(opsem_states, State.X1), 3) == [1, 2, 2]


def test_states_x2_x3_equal_at_every_depth():
    for d in range(0, 33):
        assert beh_eq(ana(opsem_states, State.X2), ana(opsem_states, State.X3), d)


def test_states_x1_differs_from_x2():
    assert not beh_eq(ana(opsem_states, State.X1), ana(opsem_states, State.X2), 1)


def test_observe_states():
    layer = observe(ana(opsem_states, State.X1))
    assert layer.head == 1
    assert observe(layer.tail).head == 2


def test_constant_stream():
    zeros = ana(lambda u: Emit(0, u), None)
    assert labels(zeros, 50) == [0] * 50
    layer = observe(zeros)
    assert layer.head == 0 and isinstance(layer.tail, Behavior)


def test_observe_is_memoised():
    calls = []

    def coalg(x):
        calls.append(x)
        return Emit(x, x + 1)

    b = ana(coalg, 0)
    assert not b.forced
    first, second = observe(b), observe(b)
    assert first is second
    assert calls == [0]
    assert b.forced


def test_behavior_of_is_pre_forced():
    b = Behavior.of(Emit(1, None))
    assert b.forced and b.observe().head == 1


def test_concurrent_forcing_runs_thunk_once():
    calls = []

    def thunk():
        calls.append(1)
        return Emit(0, None)

    b = Behavior(thunk)
    threads = [threading.Thread(target=b.observe) for _ in range(8)]
    for th in threads:
        th.start()
    for th in threads:
        th.join()
    assert calls == [1]


def test_ana_is_lazy():
    # an infinite unfold costs nothing until observed
    b = ana(lambda n: Emit(n, n + 1), 0)
    assert labels(b, 5) == [0, 1, 2, 3, 4]
    assert truncate(b, 3).layer.tail.layer.tail.layer.head == 2
