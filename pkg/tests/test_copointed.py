from bialg.copointed import CoPointed, ceil_co, counit, fanout, floor_co, pmap
from bialg.core import Emit, State, identity, opsem_states
from bialg.laws import copointed_roundtrips


def test_pmap_laws_and_example():
    p = CoPointed(3, Emit(2, 3))
    assert pmap(identity, p) == p
    f, g = (lambda x: x + 1), (lambda x: 2 * x)
    assert pmap(lambda x: g(f(x)), p) == pmap(g, pmap(f, p))
    assert pmap(f, p) == CoPointed(4, Emit(2, 4))
    assert p.map(f) == pmap(f, p)


def test_counit():
    assert counit(CoPointed(7, None)) == 7
    p = CoPointed(3, Emit(1, 5))
    assert counit(pmap(str, p)) == str(counit(p))
    assert counit(ceil_co(opsem_states)(State.X2)) is State.X2


def test_fanout():
    assert fanout(identity, identity)(5) == (5, 5)
    assert fanout(str, lambda x: x + 1)(3)[0] == "3"
    assert fanout(identity, opsem_states)(State.X1) == (State.X1, Emit(1, State.X2))


def test_floor_ceil():
    assert floor_co(ceil_co(opsem_states))(State.X1) == Emit(1, State.X2)
    for x in range(50):
        assert ceil_co(opsem_states)(State.X3).copy is State.X3
        assert ceil_co(lambda y: Emit(y, y))(x).copy == x


def test_roundtrip_suite():
    rep = copointed_roundtrips(200, seed=1)
    assert rep.ok, rep.lines()
