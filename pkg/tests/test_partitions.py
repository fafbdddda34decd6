import itertools

import pytest
from hypothesis import given, settings, strategies as st

from isoschub.partitions import (
    Partition,
    horizontal_strips,
    is_horizontal_strip,
    partitions_of,
    partitions_up_to,
    pieri_multiplicity,
    rho,
    rho_complement,
    strict_subsets,
)


@st.composite
def partition_strategy(draw, max_weight=12, max_part=8):
    w = draw(st.integers(min_value=0, max_value=max_weight))
    parts = []
    cap = max_part
    while w > 0 and cap > 0:
        p = draw(st.integers(min_value=1, max_value=min(cap, w)))
        parts.append(p)
        cap = p
        w -= p
    return Partition(parts)


class TestPartitionType:
    def test_canonical_form_drops_zeros(self):
        assert Partition((3, 2, 0, 0)) == Partition((3, 2))
        assert Partition(()) == Partition([0, 0])

    def test_rejects_increasing(self):
        with pytest.raises(ValueError):
            Partition((1, 2))

    def test_rejects_negatives(self):
        with pytest.raises(ValueError):
            Partition((3, -1))

    def test_weight_length(self):
        p = Partition((4, 2, 1))
        assert p.weight == 7 and p.length == 3

    def test_strictness(self):
        assert Partition((4, 2, 1)).is_strict()
        assert not Partition((2, 2)).is_strict()
        assert Partition(()).is_strict()

    def test_parse_and_str(self):
        assert Partition.parse("3,2,1") == Partition((3, 2, 1))
        assert Partition.parse("") == Partition()
        assert str(Partition((3, 2, 1))) == "3,2,1"

    @settings(max_examples=50, deadline=None)
    @given(partition_strategy())
    def test_conjugate_involution(self, p):
        assert p.conjugate().conjugate() == p
        assert p.conjugate().weight == p.weight


class TestRho:
    def test_empty(self):
        assert rho(0) == Partition()

    def test_three(self):
        assert rho(3) == Partition((3, 2, 1))

    def test_nine(self):
        assert rho(9) == Partition(range(9, 0, -1))
        assert rho(9).weight == 45


class TestRhoComplement:
    def test_paper_example(self):
        assert rho_complement((9, 6, 3, 2), 9) == Partition((8, 7, 5, 4, 1))

    def test_empty(self):
        assert rho_complement((), 3) == Partition((3, 2, 1))

    def test_small(self):
        assert rho_complement((3, 1), 3) == Partition((2,))

    def test_rejects_nonstrict(self):
        with pytest.raises(ValueError):
            rho_complement((2, 2), 4)

    def test_rejects_oversized(self):
        with pytest.raises(ValueError):
            rho_complement((4,), 3)
        with pytest.raises(ValueError):
            rho_complement((3, 3), 3)  # not strict either way

    def test_involution_up_to_8(self):
        for k in range(0, 9):
            for I in strict_subsets(k):
                assert rho_complement(rho_complement(I, k), k) == I


def brute_force_strips(I, r, max_part):
    """Oracle: filter all partitions of |I|+r by the strip conditions."""
    I = Partition(I)
    out = []
    for J in partitions_of(I.weight + r, max_part=max_part):
        if not J.contains(I):
            continue
        if all(J.part(p + 1) <= I.part(p) for p in range(1, len(J) + 1)):
            out.append(J)
    out.sort(key=tuple, reverse=True)
    return out


class TestHorizontalStrips:
    def test_one_box(self):
        assert horizontal_strips((1,), 1, 2) == [
            Partition((2,)),
            Partition((1, 1)),
        ]

    def test_identity_case(self):
        assert horizontal_strips((), 0, 5) == [Partition(())]

    def test_empty_base_single_row(self):
        assert horizontal_strips((), 3, 5) == [Partition((3,))]
        assert horizontal_strips((), 3, 2) == []

    def test_derived_example_against_oracle(self):
        got = horizontal_strips((3, 1), 2, 4)
        want = brute_force_strips((3, 1), 2, 4)
        assert got == want
        assert got == [
            Partition((4, 2)),
            Partition((4, 1, 1)),
            Partition((3, 3)),
            Partition((3, 2, 1)),
        ]

    @settings(max_examples=40, deadline=None)
    @given(partition_strategy(max_weight=8, max_part=5), st.integers(0, 4))
    def test_matches_brute_force(self, I, r):
        max_part = (I[0] if I else 0) + r
        assert horizontal_strips(I, r, max_part) == brute_force_strips(
            I, r, max_part
        )

    def test_all_outputs_are_strips(self):
        for J in horizontal_strips((4, 2, 1), 3, 6):
            assert is_horizontal_strip((4, 2, 1), J)


class TestPieriMultiplicity:
    def test_two_components(self):
        assert pieri_multiplicity((3, 1), (4, 2)) == (2, False)

    def test_first_column_box(self):
        assert pieri_multiplicity((1,), (1, 1)) == (0, True)

    def test_second_column_box(self):
        assert pieri_multiplicity((1,), (2,)) == (1, False)

    def test_rejects_non_strip(self):
        with pytest.raises(ValueError):
            pieri_multiplicity((1,), (3, 3))

    def test_rejects_nonstrict_inner(self):
        with pytest.raises(ValueError):
            pieri_multiplicity((2, 2), (3, 2))

    def test_characterizations_agree_exhaustively(self):
        # the card-formula and component counts are compared inside
        # pieri_multiplicity; sweep all strips from strict inners
        inners = [
            I
            for w in range(0, 11)
            for I in partitions_of(w, max_part=6)
            if I.is_strict()
        ]
        checked = 0
        for I in inners:
            for r in range(0, 6):
                for J in horizontal_strips(I, r, (I[0] if I else 0) + r):
                    pieri_multiplicity(I, J)
                    checked += 1
        assert checked > 1000


class TestEnumerationHelpers:
    def test_partitions_of(self):
        assert len(partitions_of(5)) == 7
        assert partitions_of(3) == [
            Partition((3,)),
            Partition((2, 1)),
            Partition((1, 1, 1)),
        ]

    def test_partitions_up_to_includes_empty(self):
        out = partitions_up_to(2)
        assert Partition(()) in out and len(out) == 4

    def test_strict_subsets_count(self):
        assert len(strict_subsets(4)) == 16
        assert all(I.is_strict() for I in strict_subsets(5))
