"""Property suites over generated terms, shared by the CLI and the tests."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable

from bialg import gsos, simple
from bialg.core import Term
from bialg.equiv import (
    CUT,
    Node,
    SampleConfig,
    enumerate_arith,
    gen_term,
    has_cut,
    trace_tree,
    truncate,
)
from bialg.lang import ccs, razor, stream

DEFAULT_SIZES = {"stream": 20, "razor": 12, "razor+amb": 12, "ccs": 8}


@dataclass(frozen=True)
class Language:
    name: str
    semantics: Callable[[Term], Any]     # fold of the denotational algebra
    unfolded: Callable[[Term], Any]      # unfold of the operational coalgebra
    step: Callable[[Term], Any]          # the operational coalgebra itself
    algebra: Callable[[Any], Any]        # the denotational algebra


def _simple_language(name, law):
    return Language(
        name,
        lambda t: simple.sem_simple(law, t),
        lambda t: simple.sem_simple_unfold(law, t),
        simple.opsem_simple(law),
        simple.desem_simple(law),
    )


def _gsos_language(name, rho):
    return Language(
        name,
        lambda t: gsos.sem(rho, t),
        lambda t: gsos.sem_unfold(rho, t),
        gsos.opsem(rho),
        gsos.desem(rho),
    )


LANGUAGES = {
    "stream": _simple_language("stream", stream.opsem_distr),
    "razor": _gsos_language("razor", razor.rho_razor),
    "razor+amb": _gsos_language("razor+amb", razor.rho_razor_amb),
    "ccs": _gsos_language("ccs", ccs.rho_ccs),
}


def language(name: str) -> Language:
    try:
        return LANGUAGES[name]
    except KeyError:
        raise ValueError(f"unknown language {name!r}; expected one of {sorted(LANGUAGES)}") from None


@dataclass
class Report:
    suite: str
    lang: str
    cfg: SampleConfig
    passed: int = 0
    failed: int = 0
    counterexample: str | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.passed > 0

    def record(self, ok: bool, term: Term | None = None, why: str = ""):
        if ok:
            self.passed += 1
            return
        self.failed += 1
        if self.counterexample is None:
            shown = show_term(term) if term is not None else "?"
            self.counterexample = f"{shown}{': ' + why if why else ''}"

    def lines(self) -> list[str]:
        status = "PASS" if self.ok else "FAIL"
        out = [
            f"{status} {self.suite} lang={self.lang} {self.cfg.describe()}: "
            f"{self.passed} passed, {self.failed} failed"
        ]
        out += [f"  note: {n}" for n in self.notes]
        if self.counterexample:
            out.append(f"  first counterexample: {self.counterexample}")
        return out


def _terms(lang: str, count: int, size: int, seed: int):
    for i in range(count):
        yield gen_term(lang, size, seed + i)


def coincidence(lang: str, count: int, cfg: SampleConfig, size: int | None = None) -> Report:
    """Fold route versus unfold route, compared as truncated trees."""
    model = language(lang)
    rep = Report("coincidence", lang, cfg)
    for t in _terms(lang, count, size or DEFAULT_SIZES[lang], cfg.seed):
        rep.record(truncate(model.semantics(t), cfg) == truncate(model.unfolded(t), cfg), t)
    return rep


def compositionality(lang: str, count: int, cfg: SampleConfig, size: int | None = None) -> Report:
    """``sem (In s) == desem (fmap sem s)`` to the configured depth."""
    model = language(lang)
    rep = Report("compositionality", lang, cfg)
    for t in _terms(lang, count, size or DEFAULT_SIZES[lang], cfg.seed):
        rebuilt = model.algebra(t.node.map(model.semantics))
        rep.record(truncate(model.semantics(t), cfg) == truncate(rebuilt, cfg), t)
    return rep


def full_abstraction(lang: str, count: int, cfg: SampleConfig, size: int | None = None) -> Report:
    """Truncated semantics against the trace tree of the step function."""
    model = language(lang)
    rep = Report("full-abstraction", lang, cfg)
    for t in _terms(lang, count, size or DEFAULT_SIZES[lang], cfg.seed):
        rep.record(truncate(model.semantics(t), cfg) == trace_tree(model.step, t, cfg), t)
    return rep


def stream_soundness(count: int, cfg: SampleConfig, size: int | None = None) -> Report:
    """Every label of the stream equals the plain evaluator's result."""
    rep = Report("soundness", "stream", cfg)
    for t in _terms("stream", count, size or DEFAULT_SIZES["stream"], cfg.seed):
        expected = stream.evaluate(t)
        b, ok = stream.sem_stream(t), True
        for _ in range(cfg.depth):
            layer = b.observe()
            ok = ok and layer.head == expected
            b = layer.tail
        rep.record(ok, t, f"expected {expected}")
    return rep


def razor_sums(count: int, cfg: SampleConfig, size: int | None = None) -> Report:
    """Amb-free razor terms stop at once with their sum."""
    rep = Report("oracle", "razor", cfg)
    for t in _terms("razor", count, size or DEFAULT_SIZES["razor"], cfg.seed):
        expected = Node(razor.Stopped(stream.evaluate(t)))
        rep.record(truncate(razor.sem_razor(t), cfg) == expected, t)
    return rep


def razor_exhaustive(max_size: int, literals=(0, 1, 2), depth: int | None = None) -> Report:
    """``sem_razor == razor_oracle`` on every razor+amb term up to ``max_size``."""
    terms = enumerate_arith(max_size, literals, with_amb=True)
    cfg = SampleConfig(depth=depth or max_size + 1)
    rep = Report("oracle", "razor+amb", cfg)
    rep.notes.append(f"exhaustive: {len(terms)} terms of size <= {max_size} over literals {list(literals)}")
    for t in terms:
        got = truncate(razor.sem_razor(t, allow_amb=True), cfg)
        rep.record(not has_cut(got) and got == razor.razor_oracle(t), t)
    return rep


def razor_full_abstraction_pairs(max_size: int, literals=(0, 1, 2)) -> Report:
    """Equal denotations exactly when sums agree, over all pairs of small terms."""
    terms = enumerate_arith(max_size, literals)
    cfg = SampleConfig(depth=3)
    rep = Report("full-abstraction-pairs", "razor", cfg)
    rep.notes.append(f"{len(terms)} terms, {len(terms) ** 2} ordered pairs")
    trees = [truncate(razor.sem_razor(t), cfg) for t in terms]
    sums = [stream.evaluate(t) for t in terms]
    for i, t in enumerate(terms):
        for j in range(len(terms)):
            agree = (trees[i] == trees[j]) == (sums[i] == sums[j])
            rep.record(agree, t, f"paired with {show_term(terms[j])}")
    return rep


def ccs_restriction(count: int, cfg: SampleConfig, size: int | None = None) -> Report:
    """No visible action on a restricted channel, at any depth within budget."""
    rep = Report("restriction", "ccs", cfg)
    for i, p in enumerate(_terms("ccs", count, size or DEFAULT_SIZES["ccs"], cfg.seed)):
        c = "abc"[i % 3]
        tree = truncate(ccs.sem_ccs(ccs.res(c, p)), cfg)
        rep.record(c not in _visible_channels(tree), p, f"restricted {c!r}")
    return rep


def _visible_channels(tree) -> set[str]:
    seen: set[str] = set()
    todo = [tree]
    while todo:
        node = todo.pop()
        if node is CUT:
            continue
        for act in node.layer.items:
            if isinstance(act, ccs.ActS):
                seen.add(act.chan)
                todo.append(act.next)
            elif isinstance(act, ccs.ActR):
                seen.add(act.chan)
                todo.extend(sub for _, sub in act.cont.entries)
            else:
                todo.append(act.next)
    return seen


def run_check(suite: str, lang: str, count: int, cfg: SampleConfig,
              size: int | None = None, exhaustive_size: int = 6) -> list[Report]:
    if suite == "coincidence":
        return [coincidence(lang, count, cfg, size)]
    if suite == "compositionality":
        return [compositionality(lang, count, cfg, size)]
    if suite == "full-abstraction":
        return [full_abstraction(lang, count, cfg, size)]
    if suite == "oracle":
        if lang == "stream":
            return [stream_soundness(count, cfg, size)]
        if lang == "razor":
            return [razor_sums(count, cfg, size),
                    razor_full_abstraction_pairs(min(exhaustive_size, 5))]
        if lang == "razor+amb":
            return [razor_exhaustive(exhaustive_size)]
        return [ccs_restriction(count, cfg, size)]
    if suite == "all":
        out = []
        for name in ("coincidence", "compositionality", "full-abstraction", "oracle"):
            out += run_check(name, lang, count, cfg, size, exhaustive_size)
        return out
    raise ValueError(f"unknown suite {suite!r}")


SUITES = ("coincidence", "compositionality", "full-abstraction", "oracle", "all")


# -- showing terms ---------------------------------------------------------


def show_term(t: Term, sample: int = 0) -> str:
    """Readable rendering; receive bodies are shown at one sample value."""
    match t.node:
        case stream.Val(n):
            return f"val({n})"
        case stream.Add(l, r):
            return f"add({show_term(l)}, {show_term(r)})"
        case razor.Amb(l, r):
            return f"amb({show_term(l)}, {show_term(r)})"
        case ccs.Nil():
            return "0"
        case ccs.Send(c, v, p):
            return f"{c}!({v}).{_ccs_prefix(p, sample)}"
        case ccs.Recv(c, k):
            return f"{c}?[{sample}].{_ccs_prefix(k(sample), sample)}"
        case ccs.Sum(l, r):
            return f"{_ccs_group(l, sample)} + {_ccs_group(r, sample)}"
        case ccs.Par(l, r):
            return f"{_ccs_group(l, sample)} | {_ccs_group(r, sample)}"
        case ccs.Rep(p):
            return f"rep({show_term(p, sample)})"
        case ccs.Restrict(c, p):
            return f"{_ccs_group(p, sample)} \\ {c}"
    return repr(t)


def _ccs_prefix(t: Term, sample: int) -> str:
    if isinstance(t.node, (ccs.Nil, ccs.Send, ccs.Recv, ccs.Rep)):
        return show_term(t, sample)
    return f"({show_term(t, sample)})"


_ccs_group = _ccs_prefix

