from importlib import resources

import pytest
from hypothesis import given, settings, strategies as st

from bialg.equiv import SampleConfig, beh_eq
from bialg.lang import ccs
from bialg.syntax import (
    CcsSyntaxError, ELit, PNil, PPar, PRecv, PRep, PRestrict, PSend, PSum, UnboundVariable,
    elaborate, load, parse, parse_arith, pretty, tokenize,
)
from bialg.lang.razor import amb
from bialg.lang.stream import add, val


def bundled(name):
    return (resources.files("bialg") / "programs" / name).read_text(encoding="utf-8")


def test_parse_examples():
    assert isinstance(parse("0"), PNil)
    p = parse("a!(3).0 | a?(x).out!(x).0")
    assert isinstance(p, PPar)
    assert isinstance(p.left, PSend) and isinstance(p.right, PRecv)
    with pytest.raises(CcsSyntaxError) as e:
        parse("a!(3)")
    assert (e.value.line, e.value.column) == (1, 6)
    assert "'.'" in e.value.expected


def test_precedence_and_associativity():
    p = parse("a!(1).0 + b!(2).0 | c!(3).0 \\ a")
    assert isinstance(p, PRestrict) and p.chan == "a"
    assert isinstance(p.proc, PPar) and isinstance(p.proc.left, PSum)
    q = parse("0 | 0 | 0")
    assert isinstance(q.left, PPar)
    r = parse("0 + 0 + 0")
    assert isinstance(r.left, PSum)


def test_expression_precedence():
    t = load("a!(1 + 2 * 3).0")
    assert t == ccs.send("a", 7, ccs.nil())
    assert load("a!((1 + 2) * 3).0") == ccs.send("a", 9, ccs.nil())


def test_spans_and_comments():
    src = "-- nothing\n  rep(0)"
    p = parse(src)
    assert isinstance(p, PRep)
    assert (p.span.line, p.span.column) == (2, 3)
    toks = tokenize("a!(12)")
    assert [t.kind for t in toks] == ["ident", "!", "(", "nat", ")", "eof"]


def test_errors():
    with pytest.raises(CcsSyntaxError) as e:
        parse("a!(1).0 )")
    assert e.value.column == 9
    with pytest.raises(CcsSyntaxError):
        parse("a#")
    with pytest.raises(CcsSyntaxError):
        parse("5")
    with pytest.raises(CcsSyntaxError):
        parse("a.0")
    with pytest.raises(CcsSyntaxError) as e:
        parse("0\n|")
    assert e.value.line == 2


def test_elaboration():
    t = load("c?(x).d!(x+1).0")
    assert t.node.cont(2) == ccs.send("d", 3, ccs.nil())
    with pytest.raises(UnboundVariable) as e:
        load("d!(y).0")
    assert e.value.name == "y" and (e.value.line, e.value.column) == (1, 4)
    # a binder scopes over its continuation only
    with pytest.raises(UnboundVariable):
        load("a?(x).0 | b!(x).0")
    assert elaborate(parse("d!(y).0"), {"y": 5}) == ccs.send("d", 5, ccs.nil())


def test_shadowing():
    t = load("a?(x).a?(x).b!(x).0")
    assert t.node.cont(1).node.cont(2) == ccs.send("b", 2, ccs.nil())


def test_bundled_programs_match_examples():
    cfg = SampleConfig(depth=4)
    assert beh_eq(ccs.sem_ccs(load(bundled("nats.ccs"))), ccs.sem_ccs(ccs.example_nats()), 6)
    assert beh_eq(ccs.sem_ccs(load(bundled("counter.ccs"))), ccs.sem_ccs(ccs.example_counter()), 6)
    assert beh_eq(ccs.sem_ccs(load(bundled("countertest.ccs"))), ccs.sem_ccs(ccs.example_counter_test()), cfg)
    assert not beh_eq(ccs.sem_ccs(load(bundled("nats.ccs"))), ccs.sem_ccs(ccs.example_counter()), 3)


def test_nats_structure_up_to_sampling():
    t, ref = load(bundled("nats.ccs")).node, ccs.example_nats().node
    assert t.chan == ref.chan == "i"
    assert t.proc.node.left == ref.proc.node.left
    for v in (0, 1, 2, 3):
        assert t.proc.node.right.node.proc.node.cont(v) == ref.proc.node.right.node.proc.node.cont(v)


@pytest.mark.parametrize("name", ["nats.ccs", "counter.ccs", "countertest.ccs"])
def test_pretty_is_a_fixed_point(name):
    once = pretty(parse(bundled(name)))
    assert pretty(parse(once)) == once


idents = st.sampled_from(["a", "b", "out", "x1"])
exprs = st.recursive(
    st.integers(0, 20).map(str) | st.sampled_from(["x", "y"]),
    lambda e: st.tuples(e, st.sampled_from(["+", "*"]), e).map(lambda t: f"({t[0]} {t[1]} {t[2]})"),
    max_leaves=4,
)
procs = st.recursive(
    st.just("0"),
    lambda p: st.one_of(
        st.tuples(idents, exprs, p).map(lambda t: f"{t[0]}!({t[1]}).({t[2]})"),
        st.tuples(idents, p).map(lambda t: f"{t[0]}?(x).{t[0]}?(y).({t[1]})"),
        st.tuples(p, p).map(lambda t: f"({t[0]}) + ({t[1]})"),
        st.tuples(p, p).map(lambda t: f"({t[0]}) | ({t[1]})"),
        p.map(lambda q: f"rep({q})"),
        st.tuples(p, idents).map(lambda t: f"({t[0]}) \\ {t[1]}"),
    ),
    max_leaves=8,
)


def _strip(node):
    # compare trees without spans
    if isinstance(node, tuple):
        return tuple(_strip(x) for x in node)
    if hasattr(node, "__dataclass_fields__"):
        return (type(node).__name__,) + tuple(
            _strip(getattr(node, f)) for f in node.__dataclass_fields__ if f != "span"
        )
    return node


@settings(max_examples=150, deadline=None)
@given(procs)
def test_pretty_round_trips(src):
    ast = parse(src)
    text = pretty(ast)
    assert _strip(parse(text)) == _strip(ast)
    assert pretty(parse(text)) == text


def test_parse_arith():
    assert parse_arith("3") == val(3)
    assert parse_arith("val 1") == val(1)
    assert parse_arith("add(val(1), amb(2, val 3))") == add(val(1), amb(val(2), val(3)))
    with pytest.raises(CcsSyntaxError):
        parse_arith("amb(1, 2)", allow_amb=False)
    with pytest.raises(CcsSyntaxError):
        parse_arith("add(1 2)")
    with pytest.raises(CcsSyntaxError):
        parse_arith("1 1")


def test_literal_node():
    assert parse("a!(4).0").value == ELit(4, parse("a!(4).0").value.span)
