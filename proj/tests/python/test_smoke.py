import json
import math
import pathlib

import pytest

import iconrate

FIXTURES = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def right_hand(start, end, init, final, move):
    return iconrate.Profile(right=iconrate.HandProfile(start, end, init, final, move))


def test_keyframes_and_buckets():
    assert iconrate.select_keyframes(8) == (2, 5)
    assert iconrate.select_keyframes(1) == (0, 0)
    assert iconrate.bucket_location(-0.2, 0.3) == 0
    assert iconrate.bucket_location(0.0, -0.1) == 3


def test_extract_from_fixture():
    seq = iconrate.load_sequence(str(FIXTURES / "gestures" / "clap.json"))
    assert (seq.gesture_id, seq.word, len(seq)) == ("k02", "clap", 24)
    profile = iconrate.extract_profile(seq)
    assert profile.left is not None and profile.right is not None
    assert len(profile.right.initial_handshape) == 210
    assert len(profile.right.movement) == 64
    back = iconrate.Profile.from_json(profile.to_json())
    assert back == profile


def test_hand_descriptor_scale_invariant():
    pts = [(math.cos(i * 0.7) * (1 + i / 10), math.sin(i * 0.7)) for i in range(21)]
    scaled = [(3 * x + 1, 3 * y - 2) for x, y in pts]
    a = iconrate.hand_descriptor(pts)
    b = iconrate.hand_descriptor(scaled)
    assert max(abs(u - v) for u, v in zip(a, b)) < 1e-12
    with pytest.raises(iconrate.IconrateError) as info:
        iconrate.hand_descriptor(pts[:5])
    assert info.value.code == "BadHandArity"


def test_congruency_and_cosine():
    target = right_hand(1, 2, [1, 0], [1, 0], [1, 0, 0, 0])
    other = right_hand(1, 3, [1, 0], [4, 3], [1, 0, 0, 0])
    s = iconrate.congruency(target, other)
    assert (s.location, s.total) == (0.5, 2.4)
    assert iconrate.cosine([1, 2], [2, 4]) == pytest.approx(1.0)
    with pytest.raises(iconrate.IconrateError):
        iconrate.congruency(target, iconrate.Profile(left=target.right))


def test_assign_on_golden_fixture():
    corpus = iconrate.load_corpus(str(FIXTURES / "golden" / "corpus.json"))
    table = iconrate.WordVectorTable.load(str(FIXTURES / "golden" / "wordvec.txt"))
    targets = json.loads((FIXTURES / "golden" / "targets.json").read_text())
    expected = json.loads((FIXTURES / "golden" / "expected_assignments.json").read_text())
    assert len(corpus) == 10 and len(table) == 20
    for target, want in zip(targets, expected):
        profile = iconrate.Profile.from_json(json.dumps(target["profile"]))
        got = iconrate.assign(profile, target["word"], corpus, table)
        if want["outcome"] == "assigned":
            assert isinstance(got, iconrate.Assigned)
            assert (got.neighbor_id, got.round, got.rating) == (want["neighbor_id"], want["round"], want["rating"])
        else:
            assert isinstance(got, iconrate.Unassigned)
            assert got.candidates_tested == want["candidates_tested"]


def test_neighbors_and_config():
    target = right_hand(1, 2, [1, 0], [1, 0], [1, 0, 0, 0])
    corpus = iconrate.Corpus([
        iconrate.GestureRecord("a", "near", right_hand(1, 2, [1, 0], [1, 0], [1, 0, 0, 0]), 5.0),
        iconrate.GestureRecord("b", "far", right_hand(0, 3, [1, 0], [1, 0], [1, 0, 0, 0]), 3.0),
        iconrate.GestureRecord("c", "x", right_hand(1, 2, [1, 0], [1, 0], [1, 0, 0, 0])),
    ])
    assert [n.record_id for n in iconrate.find_neighbors(target, corpus, 0)] == ["a"]
    assert [n.record_id for n in iconrate.find_neighbors(target, corpus, 1)] == ["b"]
    with pytest.raises(iconrate.IconrateError):
        iconrate.find_neighbors(target, corpus, 2)
    with pytest.raises(iconrate.IconrateError):
        iconrate.AssignConfig(tau=2.0)
    table = iconrate.WordVectorTable.parse("target 1 0\nnear 0 1\nfar 1 1\n")
    got = iconrate.assign(target, "target", corpus, table)
    assert isinstance(got, iconrate.Assigned) and (got.neighbor_id, got.rating) == ("b", 2.0)
    assert iconrate.word_similarity(table, "TARGET", "far") == pytest.approx(math.sqrt(0.5))


def test_score():
    report = iconrate.score({"a": 4.0, "b": 2.0, "c": None}, {"a": 5.0, "b": 4.5, "c": 1.0})
    assert (report.n_targets, report.n_scored, report.n_correct) == (3, 2, 1)
    assert report.accuracy == pytest.approx(0.5)
    assert iconrate.score({}, {}).accuracy is None


def test_run_cli_evaluate():
    code, out, _ = iconrate.run_cli([
        "evaluate", "--assignments", str(FIXTURES / "counts" / "assignments.json"),
        "--manual", str(FIXTURES / "counts" / "manual.txt"),
    ])
    assert code == 0
    assert "accuracy: 80.7692% (21/26)" in out
    assert iconrate.run_cli(["nonsense"])[0] == 2
