from domain.bitsets import bits_of, format_mask, full_mask, is_subset, lowest_bit, mask_of, popcount


def test_mask_roundtrip_keeps_order() -> None:
    mask = mask_of([5, 0, 2])
    assert mask == 0b100101
    assert bits_of(mask) == [0, 2, 5]
    assert format_mask(mask) == "{0,2,5}"
    assert format_mask(0) == "{}"


def test_full_mask_and_subsets() -> None:
    assert full_mask(0) == 0
    assert full_mask(4) == 0b1111
    assert is_subset(mask_of([1, 3]), full_mask(4))
    assert not is_subset(mask_of([1, 4]), full_mask(4))
    assert is_subset(0, 0)


def test_lowest_bit_and_popcount() -> None:
    assert lowest_bit(mask_of([3, 7])) == 3
    assert popcount(mask_of(range(10))) == 10
    assert popcount(0) == 0
