from __future__ import annotations

import pytest

from oracles import naive_two_connected_graphs
from twospan import (
    CorpusSpec,
    corpus_graphs,
    enumerate_2connected,
    gen_cycle_plus_chords,
    gen_ear_graph,
    is_2vcss,
    parse_instance,
    serialize,
    write_corpus,
)
from twospan.errors import (
    CountMismatchError,
    FormatError,
    SelfLoopError,
    TooLargeError,
    TooManyChordsError,
)


def test_parse_triangle():
    g = parse_instance("p ec2 3 3\ne 0 1\ne 1 2\ne 2 0")
    assert g.n == 3 and g.m == 3


def test_parse_count_mismatch():
    with pytest.raises(CountMismatchError):
        parse_instance("p ec2 3 3\ne 0 1\ne 1 2")


def test_parse_self_loop():
    with pytest.raises(SelfLoopError):
        parse_instance("p ec2 3 1\ne 0 0")


def test_parse_reports_line_numbers():
    with pytest.raises(FormatError) as err:
        parse_instance("p ec2 3 1\nq 0 1")
    assert err.value.line == 2


def test_parse_rejects_edge_before_header():
    with pytest.raises(FormatError):
        parse_instance("e 0 1\np ec2 2 1")


def test_serialize_parse_round_trip(c6_chord):
    text = serialize(c6_chord)
    again = parse_instance(text)
    assert serialize(again) == text


def test_parse_serialize_canonicalizes():
    messy = "c note\np ec2 3 3\ne 2 0\ne 0 1\ne 1 2\n"
    g = parse_instance(messy)
    assert serialize(g) == "p ec2 3 3\ne 0 1\ne 0 2\ne 1 2\n"
    # canonical text is a fixed point
    assert serialize(parse_instance(serialize(g))) == serialize(g)


def test_enumerate_counts_match_naive_filter():
    for n, expected in ((3, 1), (4, 10), (5, 238)):
        ours = list(enumerate_2connected(n))
        assert len(ours) == expected
        naive = naive_two_connected_graphs(n)
        assert len(naive) == expected
        assert {frozenset(g.edges) for g in ours} == set(naive)


def test_enumerate_triangle_only():
    graphs = list(enumerate_2connected(3))
    assert len(graphs) == 1
    assert graphs[0].edges == ((0, 1), (0, 2), (1, 2))


def test_enumerate_is_deterministic():
    a = [g.edges for g in enumerate_2connected(4)]
    b = [g.edges for g in enumerate_2connected(4)]
    assert a == b


def test_enumerate_rejects_large_n():
    with pytest.raises(TooLargeError):
        next(enumerate_2connected(8))


def test_gen_cycle_plus_chords():
    c5 = gen_cycle_plus_chords(5, 0, 1)
    assert c5.m == 5
    k4 = gen_cycle_plus_chords(4, 2, 123)
    assert k4.m == 6  # C4 has exactly two chords: this is K4
    g = gen_cycle_plus_chords(8, 3, 1)
    assert g.m == 11
    assert is_2vcss(g, g.all_edges())
    with pytest.raises(TooManyChordsError):
        gen_cycle_plus_chords(5, 6, 1)


def test_gen_cycle_plus_chords_deterministic():
    a = gen_cycle_plus_chords(9, 4, 7)
    b = gen_cycle_plus_chords(9, 4, 7)
    assert a.edges == b.edges


def test_gen_ear_graph():
    tri = gen_ear_graph(3, 5)
    assert tri.edges == ((0, 1), (1, 2), (0, 2))
    g = gen_ear_graph(6, 7)
    assert g.n == 6
    assert g.m >= 6
    assert is_2vcss(g, g.all_edges())


def test_gen_ear_graph_family_always_2connected():
    for seed in range(40):
        g = gen_ear_graph(3 + seed % 12, seed)
        assert is_2vcss(g, g.all_edges())


def test_corpus_determinism(tmp_path):
    spec = CorpusSpec(family="cycle-chords", count=5, seed=3,
                      params={"n_min": 8, "n_max": 10})
    first = write_corpus(spec, tmp_path / "a")
    second = write_corpus(spec, tmp_path / "b")
    assert [p.name for p in first] == [p.name for p in second]
    for pa, pb in zip(first, second):
        assert pa.read_bytes() == pb.read_bytes()


def test_reserved_tight_family_is_a_placeholder():
    spec = CorpusSpec(family="tight", count=1, seed=0)
    with pytest.raises(NotImplementedError):
        corpus_graphs(spec)
    with pytest.raises(ValueError):
        CorpusSpec(family="nonsense", count=1, seed=0)


def test_corpus_graphs_respect_params():
    spec = CorpusSpec(family="ear", count=6, seed=4,
                      params={"n_min": 5, "n_max": 9})
    for _, g in corpus_graphs(spec):
        assert 5 <= g.n <= 9
        assert is_2vcss(g, g.all_edges())
