import pytest
from hypothesis import assume, given, strategies as st

from hskolem import (
    HOOK,
    DegenerateOrder,
    Graph,
    MultiplicityError,
    PairSystem,
    ParseError,
    PositionSetMismatch,
    SequenceForm,
    SequenceKind,
    ShapeMismatch,
    VertexLabeling,
    edge_target_set,
    format_pairs,
    format_sequence,
    induced_edge_labels,
    nk2_graph,
    pair_system_from_json,
    pair_system_to_json,
    pairs_to_sequence,
    parse_pairs,
    parse_sequence,
    sequence_to_pairs,
    target_label_set,
)

HOOKED_EXAMPLE = "4 8 5 7 4 3 6 5 3 8 7 * 6"


class TestTargetLabelSet:
    def test_k2(self):
        assert target_label_set(2) == {1, 3}

    def test_6k2(self):
        assert target_label_set(12) == set(range(1, 12)) | {13}

    def test_p3(self):
        assert target_label_set(3) == {1, 2, 4}

    def test_degenerate(self):
        with pytest.raises(DegenerateOrder):
            target_label_set(1)

    @given(st.integers(min_value=2, max_value=500))
    def test_shape(self, p):
        labels = target_label_set(p)
        assert len(labels) == p
        assert p not in labels
        assert max(labels) == p + 1


class TestEdgeTargetSet:
    def test_fig1_6k2(self):
        assert edge_target_set(2, 1, 6) == [2, 3, 4, 5, 6, 7]

    def test_single(self):
        assert edge_target_set(1, 1, 1) == [1]

    def test_general(self):
        assert edge_target_set(3, 2, 4) == [3, 5, 7, 9]

    def test_empty(self):
        assert edge_target_set(5, 2, 0) == []

    @given(st.integers(1, 50), st.integers(1, 50), st.integers(1, 60))
    def test_progression(self, k, d, q):
        ts = edge_target_set(k, d, q)
        assert len(ts) == q
        assert all(b - a == d for a, b in zip(ts, ts[1:]))


class TestInducedEdgeLabels:
    def test_2k2(self):
        g, f = nk2_graph(2), VertexLabeling((1, 3, 2, 5))
        assert sorted(induced_edge_labels(g, f)) == [2, 3]

    def test_k2(self):
        assert induced_edge_labels(nk2_graph(1), VertexLabeling((1, 3))) == [2]

    def test_path(self):
        g = Graph(3, ((1, 2), (2, 3)))
        assert sorted(induced_edge_labels(g, VertexLabeling((1, 2, 4)))) == [1, 2]

    def test_shape_mismatch(self):
        with pytest.raises(ShapeMismatch):
            induced_edge_labels(nk2_graph(2), VertexLabeling((1, 2)))


class TestGraph:
    def test_rejects_loop(self):
        with pytest.raises(Exception):
            Graph(2, ((1, 1),))

    def test_rejects_duplicate(self):
        with pytest.raises(Exception):
            Graph(2, ((1, 2), (2, 1)))

    def test_isolated_vertices_allowed(self):
        assert Graph(4, ((1, 2),)).q == 1


class TestConversions:
    def test_paper_hooked_pairs_to_sequence(self):
        ps = PairSystem(((1, 5), (2, 10), (3, 8), (4, 11), (6, 9), (7, 13)))
        s = pairs_to_sequence(ps, SequenceKind.HOOKED, d=3)
        assert format_sequence(s) == HOOKED_EXAMPLE

    def test_hooked_skolem_order2(self):
        s = pairs_to_sequence(PairSystem(((1, 2), (3, 5))),
                              SequenceKind.HOOKED_SKOLEM)
        assert format_sequence(s) == "1 1 2 * 2"

    def test_skolem_order1(self):
        s = pairs_to_sequence(PairSystem(((1, 2),)), SequenceKind.SKOLEM)
        assert format_sequence(s) == "1 1"

    def test_position_set_mismatch(self):
        with pytest.raises(PositionSetMismatch):
            pairs_to_sequence(PairSystem(((1, 3), (2, 4))),
                              SequenceKind.HOOKED_SKOLEM)

    def test_sequence_to_pairs_simple(self):
        s = parse_sequence("1 1 2 0 2", kind=SequenceKind.HOOKED_SKOLEM)
        assert sequence_to_pairs(s).pairs == ((1, 2), (3, 5))

    def test_sequence_to_pairs_paper_example(self):
        s = parse_sequence(HOOKED_EXAMPLE, kind=SequenceKind.HOOKED, d=3)
        # sorted by value 3,4,5,6,7,8
        assert sequence_to_pairs(s).pairs == (
            (6, 9), (1, 5), (3, 8), (7, 13), (4, 11), (2, 10))

    def test_distance_violations_are_not_structural(self):
        s = parse_sequence("1 2 1 2", kind=SequenceKind.SKOLEM)
        assert sequence_to_pairs(s).pairs == ((1, 3), (2, 4))

    def test_multiplicity_error(self):
        s = SequenceForm(SequenceKind.SKOLEM, (1, 1, 1, 2))
        with pytest.raises(MultiplicityError):
            sequence_to_pairs(s)


class TestParseFormat:
    def test_compact_paper_string(self):
        s = parse_sequence("48574365387*6")
        assert len(s.entries) == 13
        assert s.entries[11] is HOOK
        assert s.kind is SequenceKind.HOOKED and s.d == 3

    def test_second_compact_paper_string(self):
        s = parse_sequence("64758463573*8")
        assert len(s.entries) == 13
        assert s.entries[11] is HOOK

    def test_tokens(self):
        s = parse_sequence("1 1 2 0 2")
        assert len(s.entries) == 5
        assert s.entries[3] is HOOK

    def test_zero_is_hook(self):
        assert parse_sequence("1 1 2 0 2") == parse_sequence("1 1 2 * 2")

    def test_bad_token(self):
        with pytest.raises(ParseError):
            parse_sequence("1 x 1")

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_sequence("   ")


@st.composite
def pair_systems(draw):
    m = draw(st.integers(min_value=1, max_value=6))
    kind = draw(st.sampled_from(list(SequenceKind)))
    if kind is SequenceKind.SKOLEM:
        positions = list(range(1, 2 * m + 1))
    else:
        positions = list(range(1, 2 * m)) + [2 * m + 1]
    perm = draw(st.permutations(positions))
    pairs = sorted((min(a, b), max(a, b)) for a, b in zip(perm[::2], perm[1::2]))
    # structural validity: each value occupies exactly two slots
    assume(len({b - a for a, b in pairs}) == len(pairs))
    d = draw(st.integers(min_value=1, max_value=4)) if kind is SequenceKind.HOOKED else 1
    return PairSystem(tuple(pairs)), kind, d


class TestRoundTrips:
    @given(pair_systems())
    def test_pairs_sequence_pairs(self, case):
        ps, kind, d = case
        s = pairs_to_sequence(ps, kind, d=d)
        back = sequence_to_pairs(s)
        assert set(back.pairs) == set(ps.pairs)
        assert pairs_to_sequence(back, kind, d=d) == s

    @given(pair_systems())
    def test_parse_format(self, case):
        ps, kind, d = case
        s = pairs_to_sequence(ps, kind, d=d)
        assert parse_sequence(format_sequence(s), kind=kind, d=d) == s

    @given(pair_systems())
    def test_json_round_trip(self, case):
        ps, _, d = case
        text = pair_system_to_json(ps, 2, d)
        back, k, d_back = pair_system_from_json(text)
        assert back == ps and k == 2 and d_back == d

    def test_pair_text_round_trip(self):
        ps = PairSystem(((1, 3), (2, 5)))
        assert parse_pairs(format_pairs(ps)) == ps
