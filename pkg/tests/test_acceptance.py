"""Acceptance criteria, one test each.

Every test records a single PASS/FAIL line; the lines are repeated in the
"acceptance criteria" section at the end of the pytest run.
"""

import contextlib
import io
import itertools
import json
import random
import shutil
import statistics
import time
from math import gcd

from fronts import random_front
from oracles import seifert_form_invariants
from leglab.cli import main
from leglab.diagram import PDCode, braid_to_pd, determinant, front_to_pd, mirror, signature, torus_pd
from leglab.front import FrontDiagram, connect_sum, orient, reverse_orientation, stabilize
from leglab.skein import clear_memo, homfly, homfly_bound, kauffman, kauffman_bound
from leglab.tau import bound_table, sandwich, tau_alternating, tau_from_metadata, tau_torus, whitehead_double_tau

RT = PDCode.parse("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]")


def _timed(fn, repeat=5):
    """Result of ``fn`` and the median wall time of ``repeat`` calls."""
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return out, statistics.median(times)


def _cli(*argv) -> int:
    with contextlib.redirect_stdout(io.StringIO()):
        return main(list(argv))


def test_criterion_1_front_formulas(record):
    eye, t_eye = _timed(lambda: orient(FrontDiagram.from_word("L1 R1")).invariants)
    kink, t_kink = _timed(lambda: orient(FrontDiagram.from_word("L1 X1 R1")).invariants)
    ok = (eye.tb, eye.r) == (-1, 0) and kink.tb == -2 and abs(kink.r) == 1
    ok = ok and t_eye < 1e-3 and t_kink < 1e-3
    detail = (
        f"eye (tb, r) = ({eye.tb}, {eye.r}) in {t_eye * 1e3:.3f} ms; "
        f"kink tb = {kink.tb}, |r| = {abs(kink.r)} in {t_kink * 1e3:.3f} ms"
    )
    record(1, "front formulas", ok, detail)
    assert ok, detail


def _representative(corpus, name, u):
    def go():
        inv = orient(corpus[name].front).invariants
        return inv, sandwich(inv.tb, inv.r, u)

    return _timed(go, repeat=1)


def test_criterion_2_ten_139(record, corpus):
    (inv, est), t = _representative(corpus, "k10_139", 4)
    ok = (inv.tb, inv.r) == (6, 1) and est.determined and est.value == 4 and t < 1.0
    detail = f"tb = {inv.tb}, r = {inv.r}, tau in [{est.lower}, {est.upper}], {t * 1e3:.1f} ms"
    record(2, "10_139 representative and tau", ok, detail)
    assert ok, detail


def test_criterion_3_mirror_ten_145(record, corpus):
    (inv, est), t = _representative(corpus, "m10_145", 2)
    ok = (inv.tb, inv.r) == (2, 1) and est.determined and est.value == 2
    detail = f"tb = {inv.tb}, r = {inv.r}, tau in [{est.lower}, {est.upper}]"
    record(3, "-10_145 representative and tau", ok, detail)
    assert ok, detail


def test_criterion_4_torus_bounds(record):
    pairs = [(p, q) for q in range(3, 13) for p in range(2, q) if gcd(p, q) == 1]
    bad = []
    for p, q in pairs:
        g = (p - 1) * (q - 1) // 2
        if 2 * tau_torus(p, q) - 1 != 2 * g - 1:
            bad.append((p, q))
        if 2 * tau_torus(-p, q) - 1 != -p * q + p + q - 2:
            bad.append((-p, q))
    kb = {}
    for q in (3, 5):
        kb[q] = kauffman_bound(kauffman(torus_pd(-2, q), cap=10))
    tau_b = {q: 2 * tau_torus(-2, q) - 1 for q in (3, 5)}
    ok = not bad and kb == {3: -6, 5: -10} and all(kb[q] < tau_b[q] for q in (3, 5))
    detail = (
        f"{len(pairs)} coprime pairs, mismatches {bad}; Kauffman bound (-2,3) {kb[3]} vs tau bound {tau_b[3]}, "
        f"(-2,5) {kb[5]} vs {tau_b[5]}"
    )
    record(4, "torus knot tau and Kauffman bounds", ok, detail)
    assert ok, detail


def test_criterion_5_alternating_consistency(record, corpus):
    checked, flagged, bad = [], [], []
    for name in ("trefoil_right", "trefoil_left", "figure_eight", "torus_2_5"):
        e = corpus[name]
        f = orient(e.front)
        sigma = signature(front_to_pd(f))
        tau = tau_alternating(sigma)
        report = bound_table(f.invariants, e.metadata, tau_from_metadata(e.metadata))
        if not (-sigma - 1 == 2 * tau - 1 == report.bound("signature").value == report.bound("tau").value):
            bad.append(name)
        if sigma > 0:
            flagged.append(name)
            if "tb(K) can never be positive" not in report.notes:
                bad.append(name + " (note)")
        checked.append(name)
    ok = not bad and flagged == ["trefoil_left"]
    detail = f"checked {', '.join(checked)}; sigma > 0 flagged: {flagged}; problems {bad}"
    record(5, "signature bound equals tau bound on alternating knots", ok, detail)
    assert ok, detail


def _suite(seed, n, check):
    rng = random.Random(seed)
    for _ in range(n):
        check(rng, random_front(rng))


def _parity(rng, fr):
    i = orient(fr).invariants
    assert (i.tb + i.r) % 2 == 1


def _cusps(rng, fr):
    i = orient(fr).invariants
    assert i.left_cusps == i.right_cusps


def _reversal(rng, fr):
    f = orient(fr)
    g = reverse_orientation(f)
    assert g.invariants.tb == f.invariants.tb and g.invariants.r == -f.invariants.r


def _stabilization(rng, fr):
    f = orient(fr)
    sign = rng.choice((1, -1))
    s = stabilize(f, sign).invariants
    assert (s.tb, s.r) == (f.invariants.tb - 1, f.invariants.r + sign)


def _connect_sum(rng, fr):
    f1, f2 = orient(fr), orient(random_front(rng))
    if rng.random() < 0.5:
        f2 = reverse_orientation(f2)
    s = connect_sum(f1, f2).invariants
    assert s.tb == f1.invariants.tb + f2.invariants.tb + 1
    assert s.r == f1.invariants.r + f2.invariants.r


def _writhe(rng, fr):
    f = orient(fr)
    assert front_to_pd(f).writhe == f.invariants.writhe


def test_criterion_6_property_suites(record):
    suites = [_parity, _cusps, _reversal, _stabilization, _connect_sum, _writhe]
    n = 500
    failures = []
    t0 = time.perf_counter()
    for k, check in enumerate(suites):
        try:
            _suite(1000 + k, n, check)
        except AssertionError:
            failures.append(check.__name__.lstrip("_"))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 10.0
    detail = f"{len(suites)} suites x {n} random fronts in {elapsed:.2f} s; failing: {failures or 'none'}"
    record(6, "front property suites", ok, detail)
    assert ok, detail


def _kinked_unknots():
    for k in range(1, 5):
        for signs in itertools.product((1, -1), repeat=k):
            yield braid_to_pd([s * (j + 1) for j, s in enumerate(signs)], k + 1)


def test_criterion_7_polynomial_engine(record, corpus):
    cap = 10
    t0 = time.perf_counter()
    unknots = list(_kinked_unknots())
    unknot_ok = all(homfly(pd, cap=cap) == 1 for pd in unknots)

    rt = orient(corpus["trefoil_right"].front)
    p_rt = homfly(front_to_pd(rt), cap=cap)
    mult_ok = homfly(front_to_pd(connect_sum(rt, rt)), cap=cap) == p_rt * p_rt

    memo_ok, memo_n = True, 0
    for e in corpus.values():
        pd = front_to_pd(orient(e.front))
        if len(pd) > cap:
            continue
        clear_memo()
        on = (homfly(pd, cap=cap), kauffman(pd, cap=cap))
        off = (homfly(pd, cap=cap, memo=False), kauffman(pd, cap=cap, memo=False))
        memo_ok &= on == off
        memo_n += 1

    unknot = PDCode(())
    anchors = {
        "unknot": (homfly_bound(homfly(unknot)), kauffman_bound(kauffman(unknot))),
        "left trefoil": kauffman_bound(kauffman(mirror(RT), cap=cap)),
        "right trefoil HOMFLY": homfly_bound(homfly(RT, cap=cap)),
    }
    anchors_ok = anchors == {"unknot": (-1, -1), "left trefoil": -6, "right trefoil HOMFLY": 1}
    elapsed = time.perf_counter() - t0
    ok = unknot_ok and mult_ok and memo_ok and anchors_ok and elapsed < 30.0
    detail = (
        f"{len(unknots)} kinked unknots -> 1: {unknot_ok}; trefoil#trefoil multiplicative: {mult_ok}; "
        f"memo identity on {memo_n} knots: {memo_ok}; anchors {anchors}; {elapsed:.2f} s"
    )
    record(7, "polynomial engine", ok, detail)
    assert ok, detail


def test_criterion_8_signature_engine(record, corpus):
    sig_oracle, det_oracle = seifert_form_invariants([[-1, 1], [0, -1]])
    s_rt = signature(RT)
    s_lt = signature(mirror(RT))
    f8 = front_to_pd(orient(corpus["figure_eight"].front))
    s_f8 = signature(f8)
    d_rt = determinant(RT)
    ok = s_rt == -2 == sig_oracle and s_lt == -s_rt and s_f8 == 0 and d_rt == 3 == det_oracle
    detail = f"sigma(RT) = {s_rt}, sigma(mirror) = {s_lt}, sigma(4_1) = {s_f8}, det(RT) = {d_rt} (Seifert oracle {det_oracle})"
    record(8, "signature engine", ok, detail)
    assert ok, detail


def test_criterion_9_whitehead(record):
    w = whitehead_double_tau(True)
    s = sandwich(1, 0, 1)
    ok = w.value == 1 and s.determined and s.value == w.value
    detail = f"whitehead rule {w.value}, sandwich(1, 0, 1) = {s.value}"
    record(9, "Whitehead double rule", ok, detail)
    assert ok, detail


def test_criterion_10_consistency_gate(record, corpus_dir, tmp_path):
    shipped = _cli("corpus-check", str(corpus_dir))
    dest = tmp_path / "violated"
    shutil.copytree(corpus_dir, dest)
    p = dest / "k10_139.json"
    data = json.loads(p.read_text())
    # claim a genus that the tb = 6, r = 1 representative beats
    data["metadata"]["seifert_genus_upper"] = 3
    p.write_text(json.dumps(data))
    violated = _cli("corpus-check", str(dest))
    ok = shipped == 0 and violated != 0
    detail = f"shipped corpus exit {shipped}; corpus with a violated bound exit {violated}"
    record(10, "hard consistency gate", ok, detail)
    assert ok, detail
