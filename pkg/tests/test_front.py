import json

import pytest

from leglab.diagram import braid_to_pd, front_to_pd
from leglab.front import (
    FrontDiagram,
    FrontEvent,
    MalformedFrontError,
    MultiComponentError,
    braid_front,
    check,
    connect_sum,
    load_front,
    orient,
    reverse_orientation,
    stabilize,
    validate,
)
from leglab.skein import homfly

EYE = FrontDiagram.from_word("L1 R1", "eye")
KINK = FrontDiagram.from_word("L1 X1 R1", "kink")


def inv(front):
    return orient(front).invariants


def test_word_roundtrip():
    f = FrontDiagram.from_word("L1 L3 X2 R3 R1")
    assert f.word == "L1 L3 X2 R3 R1"
    assert FrontDiagram.from_dict(f.to_dict()) == f
    assert len(f) == 5 and f.count("L") == 2


def test_event_rejects_bad_kind():
    with pytest.raises(ValueError):
        FrontEvent("Q", 1)
    assert validate(FrontDiagram.from_word("L0 R1"))[0].code == "position"


def test_eye_and_kink_are_valid():
    assert validate(EYE) == []
    assert validate(KINK) == []


def test_unclosed_front():
    v = validate(FrontDiagram.from_word("L1"))
    assert [x.code for x in v] == ["unclosed", "cusp-count"]
    assert "ends at 2, not 0" in v[0].message


def test_position_out_of_range():
    codes = [v.code for v in validate(FrontDiagram.from_word("L1 X2 R1"))]
    assert "position" in codes
    with pytest.raises(MalformedFrontError):
        check(FrontDiagram.from_word("R1"))


def test_two_eyes_is_multi_component():
    f = FrontDiagram.from_word("L1 R1 L1 R1")
    assert [v.code for v in validate(f)] == ["multi-component"]
    with pytest.raises(MultiComponentError) as err:
        orient(f)
    assert err.value.to_dict()["error"] == "multi-component"


def test_empty_front():
    assert validate(FrontDiagram("", ()))[0].code == "empty"


def test_eye_cusp_tags():
    f = orient(EYE)
    assert f.cusp_tags == {0: "up", 1: "down"}
    g = reverse_orientation(f)
    assert g.cusp_tags == {0: "down", 1: "up"}


def test_kink_cusps_share_a_direction():
    # a zigzag is crossed the same way at both cusps, which is what makes |r| = 1
    tags = set(orient(KINK).cusp_tags.values())
    assert len(tags) == 1
    assert set(reverse_orientation(orient(KINK)).cusp_tags.values()) != tags


def test_eye_invariants():
    i = inv(EYE)
    assert (i.writhe, i.tb, i.r) == (0, -1, 0)
    assert reverse_orientation(orient(EYE)).invariants.r == 0


def test_kink_invariants():
    i = inv(KINK)
    assert i.tb == -2 and abs(i.r) == 1
    assert reverse_orientation(orient(KINK)).invariants.r == -i.r


def test_stabilize_eye():
    up = stabilize(orient(EYE), 1).invariants
    down = stabilize(orient(EYE), -1).invariants
    assert (up.tb, up.r) == (-2, 1)
    assert (down.tb, down.r) == (-2, -1)
    both = stabilize(stabilize(orient(EYE), 1), -1).invariants
    assert (both.tb, both.r) == (-3, 0)
    with pytest.raises(ValueError):
        stabilize(orient(EYE), 0)


def test_connect_sum_examples(corpus):
    e = orient(EYE)
    s = connect_sum(e, e).invariants
    assert (s.tb, s.r) == (-1, 0)
    k = orient(corpus["k10_139"].front)
    kk = connect_sum(k, e).invariants
    assert (kk.tb, kk.r) == (6, 1)
    d = connect_sum(k, k).invariants
    assert (d.tb, d.r) == (13, 2)


def test_connect_sum_inserts_swallowtail_when_needed():
    # the reversed kink has no right cusp running the same way as the kink's first cusp
    k = orient(KINK)
    rk = reverse_orientation(k)
    s = connect_sum(rk, k)
    assert s.invariants.tb == -2 - 2 + 1
    assert s.invariants.r == rk.invariants.r + k.invariants.r


def test_tau_example_representatives(corpus):
    a = inv(corpus["k10_139"].front)
    b = inv(corpus["m10_145"].front)
    assert (a.tb, a.r) == (6, 1)
    assert (b.tb, b.r) == (2, 1)
    assert reverse_orientation(orient(corpus["k10_139"].front)).invariants.r == -1


def test_load_front_accepts_corpus_entries(corpus_dir, tmp_path):
    f = load_front(corpus_dir / "unknot_eye.json")
    assert f.word == "L1 R1"
    p = tmp_path / "bare.json"
    p.write_text(json.dumps(KINK.to_dict()))
    assert load_front(p) == KINK


@pytest.mark.parametrize(
    "word,strands",
    [
        ([1, 1, 1], 2),
        ([-1, -1, -1], 2),
        ([1, -2, 1, -2], 3),
        ([-1, -2, -3, 1, 2], 4),
        ([-3, -2, -1, 2, 2, 1, 1], 4),
        ([1, 1, 1, 1, 2, 1, 1, 1, 2, 2], 3),
    ],
)
def test_braid_front_matches_braid_closure(word, strands):
    f = orient(braid_front(word, strands))
    pd = braid_to_pd(word, strands)
    assert homfly(front_to_pd(f), cap=30) == homfly(pd, cap=30)
    # one right cusp per strand plus one per run of inverses
    pos = sum(1 for g in word if g > 0)
    neg = len(word) - pos
    runs = f.diagram.count("R") - strands
    assert f.invariants.tb == pos - neg - strands - runs


def test_braid_front_rejects_bad_generator():
    with pytest.raises(ValueError):
        braid_front([3], 3)
