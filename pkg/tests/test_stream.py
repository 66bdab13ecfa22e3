import pytest

from bialg.core import Emit, labels
from bialg.equiv import beh_eq, gen_term
from bialg.laws import distr_naturality
from bialg.lang.stream import Add, Val, add, evaluate, opsem_distr, opsem_stream, sem_stream, val


def test_opsem_distr_examples():
    assert opsem_distr(Val(5)) == Emit(5, Val(5))
    assert opsem_distr(Add(Emit(2, "a"), Emit(3, "b"))) == Emit(5, Add("a", "b"))
    assert opsem_distr(Add(Emit(0, "a"), Emit(0, "b"))) == Emit(0, Add("a", "b"))


def test_sem_stream_examples():
    assert labels(sem_stream(val(7)), 3) == [7, 7, 7]
    assert labels(sem_stream(add(val(1), add(val(2), val(3)))), 3) == [6, 6, 6]
    assert opsem_stream(val(2)).head == 2


@pytest.mark.parametrize("seed", range(50))
def test_adding_zero(seed):
    t = gen_term("stream", 15, seed)
    assert beh_eq(sem_stream(add(t, val(0))), sem_stream(t), 10)


@pytest.mark.parametrize("seed", range(50))
def test_labels_are_the_sum(seed):
    t = gen_term("stream", 20, seed)
    assert labels(sem_stream(t), 10) == [evaluate(t)] * 10


def test_negative_literal_rejected():
    with pytest.raises(ValueError):
        val(-1)


def test_big_literals_do_not_overflow():
    big = 1 << 80
    assert labels(sem_stream(add(val(big), val(big))), 2) == [2 * big] * 2


def test_naturality():
    rep = distr_naturality(200, seed=5)
    assert rep.ok, rep.lines()


def test_unknown_layer_rejected():
    with pytest.raises(TypeError):
        opsem_distr(object())
