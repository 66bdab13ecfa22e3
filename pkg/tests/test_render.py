import json

import pytest

from bialg.equiv import LANGS, SampleConfig, gen_term, truncate
from bialg.lang import ccs
from bialg.render import dumps, from_json, to_json, to_text
from bialg.suites import language


@pytest.mark.parametrize("lang", LANGS)
def test_json_round_trip(lang):
    model = language(lang)
    cfg = SampleConfig(depth=3)
    for seed in range(20):
        tree = truncate(model.semantics(gen_term(lang, 8, seed)), cfg)
        text = dumps(tree)
        assert from_json(json.loads(text)) == tree
        assert dumps(from_json(json.loads(text))) == text


def test_schema_of_a_send():
    tree = truncate(ccs.sem_ccs(ccs.send("a", 1, ccs.nil())), 2)
    assert to_json(tree) == {
        "kind": "acts",
        "children": [{"kind": "send", "chan": "a", "value": 1,
                      "children": [{"kind": "acts", "children": []}]}],
    }


def test_recv_table():
    tree = truncate(ccs.sem_ccs(ccs.recv("a", lambda v: ccs.nil())), SampleConfig(depth=1, receive_samples=(0, 5)))
    (edge,) = to_json(tree)["children"]
    assert edge == {"kind": "recv", "chan": "a", "table": [[0, {"kind": "cut"}], [5, {"kind": "cut"}]]}


def test_text_rendering():
    tree = truncate(ccs.sem_ccs(ccs.send("a", 1, ccs.nil())), 2)
    assert to_text(tree) == "acts\n  send a 1\n    acts (none)"


def test_unknown_kind():
    with pytest.raises(ValueError):
        from_json({"kind": "mystery"})
