import json

import pytest
from helpers import all_dyck

from dyckstats import (
    HeightTooLowError,
    NotReflectableError,
    SegmentKind,
    UP,
    decompose_standard,
    parse_path,
    reflect_blocks,
    reflect_segment,
    residue_class,
    residue_shift,
    segment_residue_counts,
    up_steps_at_residue,
)

# 20-step path whose standard form at m=3 walks through every segment kind:
# initial, above/under blocks on both cut lines, one upward and one downward
# link, and a terminal tail.
WITNESS = "UUUDDUUUUUDDUDDDUDDD"
WITNESS_SEGMENTS = [
    ("initial", None, "UU"),
    ("above-block", 1, "UD"),
    ("under-block", 1, "DU"),
    ("upward-link", 1, "UUU"),
    ("above-block", 2, "UD"),
    ("under-block", 2, "DU"),
    ("downward-link", 2, "DDD"),
    ("above-block", 1, "UD"),
    ("terminal", None, "DD"),
]

EXPECTED_CENSUS = {
    SegmentKind.ABOVE_BLOCK: (1, 0),
    SegmentKind.UNDER_BLOCK: (0, 1),
    SegmentKind.UPWARD_LINK: (1, 1),
    SegmentKind.DOWNWARD_LINK: (0, 0),
    SegmentKind.INITIAL: (0, 1),
    SegmentKind.TERMINAL: (0, 0),
}


def segment_altitudes(seg):
    alts = []
    altitude = seg.start_altitude
    for s in seg.steps:
        altitude += 1 if s is UP else -1
        alts.append(altitude)
    return alts


def check_segment_shape(seg, m):
    """Definition-level invariants of each segment kind."""
    alts = segment_altitudes(seg)
    kind = seg.kind
    if kind is SegmentKind.INITIAL:
        assert seg.start_altitude == 0
        assert seg.steps[-1] is UP and alts[-1] == m - 1
        assert all(a < m - 1 for a in alts[:-1])
        return
    if kind is SegmentKind.TERMINAL:
        assert seg.start_altitude == m - 1
        assert seg.steps[0] is not UP
        assert alts[-1] == 0
        assert all(a < m - 1 for a in alts)
        return
    line_alt = m * seg.line - 1
    assert seg.start_altitude == line_alt
    if kind is SegmentKind.ABOVE_BLOCK:
        upper = m * (seg.line + 1) - 1
        assert seg.steps[0] is UP and seg.steps[-1] is not UP
        assert alts[-1] == line_alt
        assert all(line_alt < a < upper for a in alts[:-1])
    elif kind is SegmentKind.UNDER_BLOCK:
        lower = m * (seg.line - 1) - 1
        assert seg.steps[0] is not UP and seg.steps[-1] is UP
        assert alts[-1] == line_alt
        assert all(lower < a < line_alt for a in alts[:-1])
    elif kind is SegmentKind.UPWARD_LINK:
        upper = m * (seg.line + 1) - 1
        assert seg.steps[0] is UP and seg.steps[-1] is UP
        assert alts[-1] == upper
        assert all(line_alt < a < upper for a in alts[:-1])
    else:
        assert seg.line >= 2
        lower = m * (seg.line - 1) - 1
        assert seg.steps[0] is not UP and seg.steps[-1] is not UP
        assert alts[-1] == lower
        assert all(lower < a < line_alt for a in alts[:-1])


def eligible(n, m):
    return (p for p in all_dyck(n) if p.height() >= m - 1)


class TestDecomposition:
    def test_minimal_example(self):
        sf = decompose_standard(parse_path("UUDD"), 2)
        got = [(s.kind.value, s.line, s.word()) for s in sf.segments]
        assert got == [("initial", None, "U"), ("above-block", 1, "UD"), ("terminal", None, "D")]

    def test_witness_path(self):
        sf = decompose_standard(parse_path(WITNESS), 3)
        got = [(s.kind.value, s.line, s.word()) for s in sf.segments]
        assert got == WITNESS_SEGMENTS

    def test_height_too_low(self):
        with pytest.raises(HeightTooLowError):
            decompose_standard(parse_path("UDUD"), 3)

    @pytest.mark.parametrize("m", [2, 3, 4])
    @pytest.mark.parametrize("n", range(1, 8))
    def test_reassembly_and_shapes(self, m, n):
        for p in eligible(n, m):
            sf = decompose_standard(p, m)
            assert sf.reassemble() == p
            assert sf.segments[0].kind is SegmentKind.INITIAL
            assert sf.segments[-1].kind is SegmentKind.TERMINAL
            for seg in sf.segments:
                check_segment_shape(seg, m)

    def test_height_exactly_m_minus_one_has_no_links(self):
        m = 3
        for n in range(2, 7):
            for p in all_dyck(n):
                if p.height() != m - 1 or not p.is_primitive():
                    continue
                kinds = {s.kind for s in decompose_standard(p, m).segments}
                assert SegmentKind.UPWARD_LINK not in kinds
                assert SegmentKind.DOWNWARD_LINK not in kinds
                assert all(s.line in (None, 1) for s in decompose_standard(p, m).segments)

    def test_json(self):
        sf = decompose_standard(parse_path("UUDD"), 2)
        raw = json.loads(sf.to_json())
        assert raw == [
            {"kind": "initial", "line": None, "steps": "U"},
            {"kind": "above-block", "line": 1, "steps": "UD"},
            {"kind": "terminal", "line": None, "steps": "D"},
        ]


class TestReflection:
    def collect_blocks(self, m, max_n):
        for n in range(1, max_n + 1):
            for p in eligible(n, m):
                for seg in decompose_standard(p, m).segments:
                    if seg.kind in (SegmentKind.ABOVE_BLOCK, SegmentKind.UNDER_BLOCK):
                        yield seg

    def test_minimal_flip(self):
        seg = decompose_standard(parse_path("UUDD"), 2).segments[1]
        flipped = reflect_segment(seg)
        assert flipped.kind is SegmentKind.UNDER_BLOCK
        assert flipped.word() == "DU"
        assert flipped.line == seg.line

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_involutive_and_length_preserving(self, m):
        for seg in self.collect_blocks(m, 7):
            flipped = reflect_segment(seg)
            assert len(flipped) == len(seg)
            assert flipped.kind is not seg.kind
            assert reflect_segment(flipped) == seg
            check_segment_shape(flipped, m)

    def test_links_not_reflectable(self):
        sf = decompose_standard(parse_path(WITNESS), 3)
        for seg in sf.segments:
            if seg.kind in (SegmentKind.ABOVE_BLOCK, SegmentKind.UNDER_BLOCK):
                continue
            with pytest.raises(NotReflectableError):
                reflect_segment(seg)


class TestBlockReflectionMap:
    def test_minimal_example(self):
        assert reflect_blocks(parse_path("UUDD"), 2).word() == "UDUD"

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_low_paths_fixed(self, m):
        for n in range(5):
            for p in all_dyck(n):
                if p.height() < m - 1:
                    assert reflect_blocks(p, m) == p

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    @pytest.mark.parametrize("n", range(9))
    def test_involution(self, m, n):
        for p in all_dyck(n):
            assert reflect_blocks(reflect_blocks(p, m), m) == p

    @pytest.mark.parametrize("m", [2, 3])
    def test_involution_and_transport_at_ten(self, m):
        for p in all_dyck(10):
            q = reflect_blocks(p, m)
            assert reflect_blocks(q, m) == p
            if p.height() >= m - 1:
                j, k = residue_class(p, m)
                assert residue_class(q, m) == (k + 1, j - 1)

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    @pytest.mark.parametrize("n", range(9))
    def test_class_transport(self, m, n):
        for p in eligible(n, m):
            j, k = residue_class(p, m)
            assert j >= 1
            assert residue_class(reflect_blocks(p, m), m) == (k + 1, j - 1)


class TestResidueClass:
    def test_example(self):
        assert residue_class(parse_path("UUDD"), 2) == (1, 1)

    def test_low_paths_have_zero_class(self):
        m = 4
        for n in range(5):
            for p in all_dyck(n):
                if p.height() <= m - 2:
                    assert residue_class(p, m) == (0, 0)

    def test_witness_classes(self):
        p = parse_path(WITNESS)
        assert residue_class(p, 3) == (4, 4)
        assert residue_class(reflect_blocks(p, 3), 3) == (5, 3)


class TestClassShift:
    def test_identity_class_is_fixed(self):
        m = 3
        fixed = [
            p
            for n in range(2, 7)
            for p in eligible(n, m)
            if residue_class(p, m) == (1, 0)
        ]
        assert fixed
        for p in fixed:
            assert residue_shift(p, m) == p

    def test_low_path_rejected(self):
        with pytest.raises(HeightTooLowError):
            residue_shift(parse_path("UD"), 3)

    @pytest.mark.parametrize("m", [2, 3, 4])
    @pytest.mark.parametrize("n", range(8))
    def test_transport_and_images(self, m, n):
        by_zero: dict[int, set] = {}
        for p in all_dyck(n):
            by_zero.setdefault(residue_class(p, m).k, set()).add(p)
        images: dict[int, set] = {}
        for p in eligible(n, m):
            j, k = residue_class(p, m)
            q = residue_shift(p, m)
            assert residue_class(q, m) == (k + 1, j - 1)
            images.setdefault(j, set()).add(q)
        for j, img in images.items():
            target = {
                q for q in by_zero.get(j - 1, set()) if residue_class(q, m).j >= 1
            }
            assert img == target

    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_size_identities(self, m):
        # paths with j marked-top up steps are as many as those with j-1
        # marked-zero up steps, for every j >= 2
        for n in range(1, 9):
            tops: dict[int, int] = {}
            zeros: dict[int, int] = {}
            for p in all_dyck(n):
                j, k = residue_class(p, m)
                tops[j] = tops.get(j, 0) + 1
                zeros[k] = zeros.get(k, 0) + 1
            top_j = max(tops)
            for j in range(2, top_j + 1):
                assert tops.get(j, 0) == zeros.get(j - 1, 0)


class TestSegmentCensuses:
    @pytest.mark.parametrize("m", [2, 3, 4])
    @pytest.mark.parametrize("n", range(1, 8))
    def test_per_segment_counts(self, m, n):
        for p in eligible(n, m):
            for seg in decompose_standard(p, m).segments:
                assert segment_residue_counts(seg, m) == EXPECTED_CENSUS[seg.kind]

    @pytest.mark.parametrize("m", [2, 3, 4, 5])
    def test_zero_columns_nearly_agree(self, m):
        # paths with no marked-zero up step split into those with no marked-top
        # step and those with exactly one
        for n in range(1, 9):
            zero_col = sum(
                1 for p in all_dyck(n) if up_steps_at_residue(p, m, {0}) == 0
            )
            top0 = sum(
                1 for p in all_dyck(n) if up_steps_at_residue(p, m, {m - 1}) == 0
            )
            top1 = sum(
                1 for p in all_dyck(n) if up_steps_at_residue(p, m, {m - 1}) == 1
            )
            assert zero_col == top0 + top1
