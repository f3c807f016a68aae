import pytest

from sutarski import (
    FREE,
    LatticeError,
    LatticeSpec,
    Slice,
    is_i_slice,
    leq,
    slice_points,
)


class TestLeq:
    def test_coordinatewise(self):
        assert leq((1, 2), (2, 2))

    def test_antichain_both_ways(self):
        assert not leq((2, 1), (1, 2))
        assert not leq((1, 2), (2, 1))

    def test_reflexive_example(self):
        assert leq((2, 2), (2, 2))

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(LatticeError):
            leq((1, 2), (1, 2, 3))

    def test_partial_order_axioms_exhaustive(self):
        # Reflexivity and antisymmetry over the full n <= 4, k <= 3 grid.
        for n in range(1, 5):
            for k in range(1, 4):
                pts = list(LatticeSpec(n, k).points())
                for x in pts:
                    assert leq(x, x)
                    for y in pts:
                        if leq(x, y) and leq(y, x):
                            assert x == y

    def test_transitivity_exhaustive(self):
        for n, k in [(3, 3), (4, 2), (4, 1)]:
            pts = list(LatticeSpec(n, k).points())
            for x in pts:
                ups = [y for y in pts if leq(x, y)]
                for y in ups:
                    for z in pts:
                        if leq(y, z):
                            assert leq(x, z)


class TestLatticeSpec:
    def test_rejects_nonpositive(self):
        with pytest.raises(LatticeError):
            LatticeSpec(0, 2)
        with pytest.raises(LatticeError):
            LatticeSpec(2, 0)

    def test_rejects_oversized_grid(self):
        with pytest.raises(LatticeError):
            LatticeSpec(2, 70)  # 2^70 overflows the native index range

    def test_canonical_enumeration_order(self):
        assert list(LatticeSpec(2, 2).points()) == [(1, 1), (2, 1), (1, 2), (2, 2)]

    def test_index_roundtrip(self):
        spec = LatticeSpec(3, 3)
        for i, x in enumerate(spec.points()):
            assert spec.index(x) == i
            assert spec.point_at(i) == x

    def test_point_validation(self):
        spec = LatticeSpec(3, 2)
        spec.validate_point((3, 1))
        with pytest.raises(LatticeError):
            spec.validate_point((4, 1))
        with pytest.raises(LatticeError):
            spec.validate_point((1, 1, 1))
        assert not spec.contains((0, 1))

    def test_bounds(self):
        spec = LatticeSpec(3, 2)
        assert spec.bottom == (1, 1)
        assert spec.top == (3, 3)
        assert spec.size == 9


class TestSlice:
    def test_of_and_str(self):
        s = Slice.of(FREE, 2)
        assert s.entries == (None, 2)
        assert str(s) == "(*, 2)"

    def test_full(self):
        assert Slice.full(3).entries == (None, None, None)

    def test_rejects_bad_entries(self):
        with pytest.raises(LatticeError):
            Slice.of(0, FREE)
        with pytest.raises(LatticeError):
            Slice(())

    def test_dims(self):
        s = Slice.of(FREE, 1, FREE)
        assert s.free_dims() == (1, 3)
        assert s.fixed_dims() == (2,)
        assert s.num_free == 2

    def test_contains(self):
        s = Slice.of(FREE, 2)
        assert s.contains((1, 2))
        assert not s.contains((1, 1))
        assert not s.contains((1, 2, 3))

    def test_spec_slice_validation(self):
        spec = LatticeSpec(2, 2)
        spec.validate_slice(Slice.of(FREE, 2))
        with pytest.raises(LatticeError):
            spec.validate_slice(Slice.of(FREE, 3))
        with pytest.raises(LatticeError):
            spec.validate_slice(Slice.of(FREE))

    def test_slice_enumeration_count_and_order(self):
        spec = LatticeSpec(2, 2)
        slices = list(spec.slices())
        assert len(slices) == 9  # (n+1)^k
        assert slices[0] == Slice.full(2)
        assert [s.sort_key() for s in slices] == sorted(s.sort_key() for s in slices)


class TestSlicePoints:
    def test_one_free_dimension(self):
        spec = LatticeSpec(2, 2)
        assert list(slice_points(spec, Slice.of(FREE, 1))) == [(1, 1), (2, 1)]

    def test_fully_fixed(self):
        spec = LatticeSpec(2, 2)
        assert list(slice_points(spec, Slice.of(2, 2))) == [(2, 2)]

    def test_full_lattice_slice(self):
        spec = LatticeSpec(3, 2)
        pts = list(slice_points(spec, Slice.full(2)))
        assert len(pts) == 9
        assert pts == list(spec.points())

    def test_counts_membership_distinctness_exhaustive(self):
        for n in range(1, 4):
            for k in range(1, 4):
                spec = LatticeSpec(n, k)
                for s in spec.slices():
                    pts = list(slice_points(spec, s))
                    assert len(pts) == n**s.num_free
                    assert len(set(pts)) == len(pts)
                    for x in pts:
                        assert spec.contains(x)
                        assert s.contains(x)

    def test_first_free_dimension_varies_fastest(self):
        spec = LatticeSpec(2, 3)
        pts = list(slice_points(spec, Slice.of(FREE, 2, FREE)))
        assert pts == [(1, 2, 1), (2, 2, 1), (1, 2, 2), (2, 2, 2)]


class TestIsISlice:
    def test_prefix_free(self):
        assert is_i_slice(Slice.of(FREE, FREE, 3), 2)

    def test_fixed_inside_prefix(self):
        assert not is_i_slice(Slice.of(FREE, 1, FREE), 2)

    def test_all_free_slice_is_every_i_slice(self):
        s = Slice.full(2)
        assert is_i_slice(s, 1) and is_i_slice(s, 2)

    def test_index_out_of_range(self):
        with pytest.raises(LatticeError):
            is_i_slice(Slice.full(2), 3)
        with pytest.raises(LatticeError):
            is_i_slice(Slice.full(2), 0)
