import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rpsent import belief
from rpsent.belief import (BPA, PMF, Frame, PermutationEvent, SubsetEvent,
                           enumerate_pes, enumerate_power_set,
                           project_pmf_to_bpa, validate_bpa, validate_pmf)
from rpsent.combinatorics import sa
from rpsent.entropies import max_rps_pmf
from rpsent.errors import CapExceededError, DocumentError

F = Fraction


def test_frame_rejects_duplicates_and_empty():
    with pytest.raises(ValueError):
        Frame(("a", "a"))
    with pytest.raises(ValueError):
        Frame(())


def test_subset_event_is_canonical():
    assert SubsetEvent((2, 0, 2)) == SubsetEvent((0, 2))
    assert tuple(SubsetEvent((2, 0))) == (0, 2)
    assert tuple(PermutationEvent((2, 0))) == (2, 0)


@pytest.mark.parametrize("n, count", [(1, 2), (3, 8), (8, 256)])
def test_power_set_size(n, count):
    events = enumerate_power_set(Frame.of_size(n))
    assert len(events) == count == len(set(events))


def test_power_set_order():
    assert enumerate_power_set(Frame.of_size(1)) == [SubsetEvent(()), SubsetEvent((0,))]
    events = enumerate_power_set(Frame.of_size(3))
    assert [len(e) for e in events] == sorted(len(e) for e in events)


def test_pes_small():
    assert enumerate_pes(Frame.of_size(1)) == [(), (0,)]
    assert enumerate_pes(Frame.of_size(2)) == [(), (0,), (1,), (0, 1), (1, 0)]


def test_pes_size_matches_sa():
    for n in range(1, 8):
        events = enumerate_pes(Frame.of_size(n))
        assert len(events) == sa(n) == len(set(events))
    assert len(enumerate_pes(Frame.of_size(4))) == 65


def test_enumeration_cap():
    with pytest.raises(CapExceededError):
        enumerate_pes(Frame.of_size(9))
    with pytest.raises(CapExceededError):
        enumerate_power_set(Frame.of_size(3), cap=2)


def ab():
    return Frame(("a", "b"))


def test_validate_bpa_examples():
    assert validate_bpa(BPA(ab(), {SubsetEvent((0,)): F(1)})).ok
    report = validate_bpa(BPA(ab(), {SubsetEvent(()): 0.5, SubsetEvent((0,)): 0.5}))
    assert not report.ok and "empty event" in str(report)
    report = validate_bpa(BPA(ab(), {SubsetEvent((0,)): 0.3, SubsetEvent((0, 1)): 0.69}))
    assert not report.ok and "mass sum 0.99" in str(report)


def test_validate_bpa_negative_and_tolerance():
    report = validate_bpa(BPA(ab(), {SubsetEvent((0,)): F(3, 2), SubsetEvent((1,)): F(-1, 2)}))
    assert any("negative" in p for p in report.problems)
    assert validate_bpa(BPA(ab(), {SubsetEvent((0,)): 0.5 + 5e-10, SubsetEvent((1,)): 0.5})).ok
    # exact input gets no tolerance
    assert not validate_bpa(BPA(ab(), {SubsetEvent((0,)): F(1, 2), SubsetEvent((1,)): F(1, 2) - F(1, 10 ** 12)})).ok


def test_validate_pmf_examples():
    fr = ab()
    assert validate_pmf(PMF(fr, {PermutationEvent((0,)): F(1)})).ok
    assert validate_pmf(PMF(fr, {PermutationEvent((0, 1)): 0.5, PermutationEvent((1, 0)): 0.5})).ok
    report = validate_pmf(PMF(fr, {PermutationEvent((0, 0)): F(1)}))
    assert not report.ok and "repeats" in str(report)


def test_validate_reports_unknown_index():
    report = validate_pmf(PMF(ab(), {PermutationEvent((0, 5)): F(1)}))
    assert "outside the frame" in str(report)


def test_projection_collapses_order():
    pmf = PMF(ab(), {PermutationEvent((0, 1)): 0.5, PermutationEvent((1, 0)): 0.5})
    assert project_pmf_to_bpa(pmf).masses == {SubsetEvent((0, 1)): 1.0}


def test_projection_singletons_identical():
    pmf = PMF(ab(), {PermutationEvent((0,)): F(1, 3), PermutationEvent((1,)): F(2, 3)})
    assert project_pmf_to_bpa(pmf).masses == {SubsetEvent((0,)): F(1, 3), SubsetEvent((1,)): F(2, 3)}


def test_projection_of_max_rps_n2():
    bpa = project_pmf_to_bpa(max_rps_pmf(2))
    assert bpa.masses == {SubsetEvent((0,)): F(1, 10), SubsetEvent((1,)): F(1, 10),
                          SubsetEvent((0, 1)): F(8, 10)}


@given(st.lists(st.integers(1, 20), min_size=1, max_size=12), st.integers(2, 4), st.data())
def test_projection_preserves_mass(weights, n, data):
    frame = Frame.of_size(n)
    events = [e for e in enumerate_pes(frame) if e]
    weights = weights[:len(events)]
    chosen = data.draw(st.lists(st.sampled_from(events), min_size=len(weights),
                                max_size=len(weights), unique=True))
    total = sum(weights)
    pmf = PMF(frame, {e: F(w, total) for e, w in zip(chosen, weights)})
    bpa = project_pmf_to_bpa(pmf)
    assert sum(bpa.masses.values()) == 1
    assert validate_bpa(bpa).ok
    assert SubsetEvent(()) not in bpa.masses


def test_projection_maps_empty_to_empty():
    pmf = PMF(ab(), {PermutationEvent(()): F(0), PermutationEvent((1,)): F(1)})
    assert project_pmf_to_bpa(pmf).masses[SubsetEvent(())] == 0


def test_load_json_contract(tmp_path):
    doc = tmp_path / "d.json"
    doc.write_text('{"frame": ["a","b"], "kind": "bpa", "masses": ['
                   '{"event": ["b","a"], "mass": "2/5"}, {"event": ["a"], "mass": "0.6"}]}')
    dist = belief.load(doc)
    assert isinstance(dist, BPA)
    assert dist.masses == {SubsetEvent((0, 1)): F(2, 5), SubsetEvent((0,)): 0.6}


def test_pmf_keeps_order():
    dist = belief.loads('{"frame": ["a","b"], "kind": "pmf", "masses": ['
                        '{"event": ["b","a"], "mass": "1/2"}, {"event": ["a","b"], "mass": "1/2"}]}')
    assert set(dist.masses) == {(1, 0), (0, 1)}


@pytest.mark.parametrize("text", [
    '{"frame": ["a","b"], "kind": "bpa", "masses": [{"event": ["a","b"], "mass": "1/2"},'
    ' {"event": ["b","a"], "mass": "1/2"}]}',
    '{"frame": ["a"], "kind": "pmf", "masses": [{"event": ["a"], "mass": "1/2"},'
    ' {"event": ["a"], "mass": "1/2"}]}',
    '{"frame": ["a"], "kind": "other", "masses": []}',
    '{"frame": ["a"], "kind": "pmf", "masses": [{"event": ["z"], "mass": "1"}]}',
    '{"frame": ["a"], "kind": "pmf", "masses": [{"event": ["a"], "mass": "one"}]}',
    '{"frame": ["a"], "kind": "pmf"}',
    'not json',
])
def test_parse_errors(text):
    with pytest.raises(DocumentError):
        belief.loads(text)


def test_round_trip_max_rps():
    pmf = max_rps_pmf(3)
    again = belief.loads(belief.dumps(pmf))
    assert again.masses == pmf.masses and again.frame == pmf.frame
    assert belief.dumps(again) == belief.dumps(pmf)


mass_values = st.one_of(
    st.fractions(min_value=0, max_value=1),
    st.floats(min_value=0, max_value=1, allow_nan=False))


@given(st.integers(1, 3), st.data())
def test_round_trip_is_identity(n, data):
    frame = Frame.of_size(n)
    ordered = data.draw(st.booleans())
    space = enumerate_pes(frame) if ordered else enumerate_power_set(frame)
    events = data.draw(st.lists(st.sampled_from(space), unique=True, max_size=8))
    masses = {e: data.draw(mass_values) for e in events}
    dist = (PMF if ordered else BPA)(frame, masses)
    again = belief.loads(belief.dumps(dist))
    assert type(again) is type(dist)
    assert again.masses == dist.masses
    assert all(type(again.masses[e]) is type(m) for e, m in dist.masses.items())


def test_labels_by_permutations():
    frame = Frame(("p", "q", "r"))
    pmf = PMF(frame, {PermutationEvent(p): F(1, 6) for p in itertools.permutations(range(3))})
    assert validate_pmf(pmf).ok
    assert belief.to_dict(pmf)["masses"][0]["event"] == ["p", "q", "r"]
