"""Rendering truncated behaviour trees as JSON and as indented text.

JSON nodes have the shape ``{"kind": ..., "chan"?, "value"?, "children" | "table"}``.
Kinds are ``cut``, ``emit``, ``stopped``, ``step`` and ``acts`` for layers,
and ``send``, ``recv`` and ``silent`` for the edges below an ``acts`` node.
A ``recv`` edge carries a ``table`` of ``[sample, subtree]`` pairs.
"""
from __future__ import annotations

import json

from bialg.core import Emit
from bialg.equiv import CUT, Node, Table
from bialg.lang.ccs import ActR, ActS, Acts, Silent
from bialg.lang.razor import Step, Stopped


def to_json(tree) -> dict:
    if tree is CUT:
        return {"kind": "cut"}
    match tree.layer:
        case Emit(head, tail):
            return {"kind": "emit", "value": head, "children": [to_json(tail)]}
        case Stopped(n):
            return {"kind": "stopped", "value": n, "children": []}
        case Step(nxt):
            return {"kind": "step", "children": [to_json(t) for t in nxt]}
        case Acts(items):
            return {"kind": "acts", "children": [_edge_json(a) for a in items]}
    raise TypeError(f"cannot render layer {tree.layer!r}")


def _edge_json(act) -> dict:
    match act:
        case ActS(chan, value, nxt):
            return {"kind": "send", "chan": chan, "value": value, "children": [to_json(nxt)]}
        case ActR(chan, Table(entries)):
            return {"kind": "recv", "chan": chan, "table": [[v, to_json(t)] for v, t in entries]}
        case Silent(nxt):
            return {"kind": "silent", "children": [to_json(nxt)]}
    raise TypeError(f"cannot render action {act!r}")


def from_json(obj: dict):
    """Inverse of ``to_json``."""
    kids = obj.get("children", [])
    match obj["kind"]:
        case "cut":
            return CUT
        case "emit":
            return Node(Emit(obj["value"], from_json(kids[0])))
        case "stopped":
            return Node(Stopped(obj["value"]))
        case "step":
            return Node(Step(tuple(from_json(k) for k in kids)))
        case "acts":
            return Node(Acts(tuple(_edge_from_json(k) for k in kids)))
    raise ValueError(f"unknown node kind {obj['kind']!r}")


def _edge_from_json(obj: dict):
    match obj["kind"]:
        case "send":
            return ActS(obj["chan"], obj["value"], from_json(obj["children"][0]))
        case "recv":
            return ActR(obj["chan"], Table(tuple((v, from_json(t)) for v, t in obj["table"])))
        case "silent":
            return Silent(from_json(obj["children"][0]))
    raise ValueError(f"unknown edge kind {obj['kind']!r}")


def dumps(tree) -> str:
    return json.dumps(to_json(tree), sort_keys=True)


def to_text(tree) -> str:
    lines: list[str] = []
    _text(to_json(tree), 0, lines)
    return "\n".join(lines)


def _text(obj: dict, indent: int, out: list[str]):
    pad = "  " * indent
    kind = obj["kind"]
    if kind == "emit":
        # streams stay flat: one label per line
        while obj["kind"] == "emit":
            out.append(f"{pad}emit {obj['value']}")
            obj = obj["children"][0]
        _text(obj, indent, out)
        return
    if kind == "recv":
        out.append(f"{pad}recv {obj['chan']}")
        for v, sub in obj["table"]:
            out.append(f"{pad}  [{v}]")
            _text(sub, indent + 2, out)
        return
    head = {
        "cut": "...",
        "stopped": f"stopped {obj.get('value')}",
        "send": f"send {obj.get('chan')} {obj.get('value')}",
    }.get(kind, kind)
    if kind == "acts" and not obj["children"]:
        head = "acts (none)"
    out.append(pad + head)
    for sub in obj.get("children", []):
        _text(sub, indent + 1, out)
