"""Acceptance criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py`` (the lines appear in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""
import time

from bialg.core import State, ana, opsem_states
from bialg.equiv import CUT, SampleConfig, beh_eq, gen_term, truncate
from bialg.laws import all_laws
from bialg.lang import ccs
from bialg.lang.razor import smallstep_layer, term_size
from bialg.suites import coincidence, razor_exhaustive, razor_full_abstraction_pairs, stream_soundness

RESULTS: list[str] = []


def verdict(name: str, ok: bool, detail: str) -> bool:
    RESULTS.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    return ok


def test_nats_reproduction():
    t0 = time.perf_counter()
    got = list(ccs.outputs(ccs.sem_ccs(ccs.example_nats()), 8))
    dt = time.perf_counter() - t0
    ok = got == list(range(8)) and dt < 1.0
    assert verdict("nats", ok, f"first 8 outputs {got} in {dt:.3f}s (need 0..7, < 1s)")


def test_counter_reproduction():
    t0 = time.perf_counter()
    values = list(ccs.outputs(ccs.sem_ccs(ccs.example_counter_test())))
    dt = time.perf_counter() - t0
    dedup = ccs.nub(values)
    ok = dedup == [4, 3, 2, 1] and set(values) == {1, 2, 3, 4} and dt < 10.0
    assert verdict(
        "counter", ok,
        f"nub {dedup}, value set {sorted(set(values))}, {len(values)} outputs in {dt:.2f}s "
        "(need [4, 3, 2, 1], < 10s)",
    )


def test_coincidence():
    t0 = time.perf_counter()
    reps = [
        coincidence("stream", 200, SampleConfig(depth=8)),
        coincidence("razor+amb", 200, SampleConfig(depth=6)),
        coincidence("ccs", 200, SampleConfig(depth=3, receive_samples=(0, 1, 2, 3))),
    ]
    dt = time.perf_counter() - t0
    ok = all(r.ok and r.passed >= 200 for r in reps) and dt < 30.0
    detail = "; ".join(f"{r.lang} {r.passed}/{r.passed + r.failed} at depth {r.cfg.depth}" for r in reps)
    assert verdict("coincidence", ok, f"{detail}; {dt:.2f}s (need zero failures, < 30s)")


def test_stream_soundness():
    rep = stream_soundness(200, SampleConfig(depth=10))
    assert verdict("stream soundness", rep.ok and rep.passed == 200,
                   f"{rep.passed}/200 terms agree with the evaluator to depth 10")


def test_razor_oracle():
    ex = razor_exhaustive(6)
    pairs = razor_full_abstraction_pairs(5)
    ok = ex.ok and pairs.ok
    assert verdict(
        "razor oracle", ok,
        f"exhaustive size<=6: {ex.passed}/{ex.passed + ex.failed}; "
        f"full-abstraction pairs size<=5: {pairs.passed}/{pairs.passed + pairs.failed}",
    )


def _empty_leaves_only(tree) -> bool:
    return tree is not CUT and all(_empty_leaves_only(k) for k in tree.layer.next)


def test_smallstep_defect():
    terms = [gen_term("razor", size, seed) for size in (1, 3, 5, 9, 15) for seed in range(40)]
    ok = all(_empty_leaves_only(truncate(ana(smallstep_layer, t), term_size(t) + 1)) for t in terms)
    assert verdict("smallstep defect", ok,
                   f"{len(terms)} sampled terms unfold to trees whose every path ends empty")


def test_states_demo():
    same = beh_eq(ana(opsem_states, State.X2), ana(opsem_states, State.X3), 32)
    differ = not beh_eq(ana(opsem_states, State.X1), ana(opsem_states, State.X2), 1)
    assert verdict("states demo", same and differ,
                   f"X2 ~ X3 at depth 32: {same}; X1 differs from X2 at depth 1: {differ}")


def test_law_suites():
    reps = all_laws(100)
    bad = [r for r in reps if not r.ok]
    total = sum(r.passed + r.failed for r in reps)
    assert verdict("law suites", not bad and all(r.passed >= 100 for r in reps),
                   f"{len(reps)} suites, {total} samples, {sum(r.failed for r in reps)} failures")


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
