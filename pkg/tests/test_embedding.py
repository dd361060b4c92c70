import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from selfauth.embedding import EmbedKey, bit_position, embed, extract, serialize_ll
from selfauth.errors import (
    CapacityMismatch,
    DimensionMismatch,
    InvalidKey,
    OddPlaneLength,
    RangeViolation,
)

keys = st.integers(2, 7)


def embed_bitwise(blue, payload, s):
    """Reference placement: one bit at a time through bit_position."""
    out = [int(v) & 0xF0 for v in blue]
    for i, byte in enumerate(payload):
        for k in range(8):
            pixel, slot = bit_position(i, k, s)
            out[pixel] |= ((int(byte) >> k) & 1) << slot
    return out


@st.composite
def cover_and_payload(draw, max_len=64):
    n = draw(st.integers(0, max_len))
    blue = draw(arrays(np.uint8, 2 * n))
    payload = draw(arrays(np.uint8, n))
    return blue, payload


def test_bit_position_examples():
    assert bit_position(0, 0, 4) == (0, 0)
    assert bit_position(5, 6, 3) == (11, 0)
    assert bit_position(5, 6, EmbedKey(3)) == (11, 0)


def test_bit_position_slots_are_a_permutation():
    for s in range(2, 8):
        for i in range(101):
            for half in (0, 4):
                pixels = {bit_position(i, k, s)[0] for k in range(half, half + 4)}
                slots = {bit_position(i, k, s)[1] for k in range(half, half + 4)}
                assert pixels == {2 * i + half // 4}
                assert slots == {0, 1, 2, 3}


def test_bit_position_rejects_bad_bit():
    with pytest.raises(ValueError):
        bit_position(0, 8, 4)


@pytest.mark.parametrize("s", [1, 8, 0, -3])
def test_key_range(s):
    with pytest.raises(InvalidKey):
        EmbedKey(s)


def test_default_key():
    assert EmbedKey().s == 4


@pytest.mark.parametrize("s", range(2, 8))
def test_zero_payload_clears_low_nibbles(s):
    assert embed([0xAB, 0xCD], [0x00], s).tolist() == [0xA0, 0xC0]


@pytest.mark.parametrize("s", range(2, 8))
def test_ones_payload_fills_low_nibbles(s):
    assert embed([0xA0, 0xB0], [0xFF], s).tolist() == [0xAF, 0xBF]


def test_hand_evaluated_placement():
    assert embed([0x00, 0x00], [0b0110_0011], 4).tolist() == [0x03, 0x06]
    assert extract([0x03, 0x06], 4).tolist() == [0b0110_0011]


def test_rotation_applies_from_second_byte():
    # byte 1 under s=4 rotates its nibbles by one slot: 0b0001 -> 0b0010
    out = embed(np.zeros(4, np.uint8), [0, 0b0001_0001], 4)
    assert out.tolist() == [0, 0, 0b0010, 0b0010]


def test_wrong_key_changes_recovered_byte():
    # i=2: slot rotation is 0 under s=2 and 2 under s=3
    payload = np.zeros(3, np.uint8)
    payload[2] = 0b0000_0001
    stego = embed(np.zeros(6, np.uint8), payload, 2)
    assert extract(stego, 2).tolist() == payload.tolist()
    assert extract(stego, 3).tolist() != payload.tolist()


def test_preserves_2d_shape():
    blue = np.arange(16, dtype=np.uint8).reshape(4, 4)
    out = embed(blue, np.arange(8), 5)
    assert out.shape == (4, 4)
    assert extract(out, 5).tolist() == list(range(8))


@pytest.mark.parametrize("n_payload", [0, 1, 3, 5, 8])
def test_capacity_mismatch(n_payload):
    with pytest.raises(CapacityMismatch):
        embed(np.zeros(8, np.uint8), np.zeros(n_payload, np.uint8), 4)


def test_extract_odd_plane():
    with pytest.raises(OddPlaneLength):
        extract(np.zeros(5, np.uint8), 4)


def test_serialize_ll():
    assert serialize_ll([1, 2], [3, 4]).tolist() == [1, 2, 3, 4]
    assert serialize_ll([[1, 2], [5, 6]], [[3, 4], [7, 8]]).tolist() == [1, 2, 5, 6, 3, 4, 7, 8]
    assert serialize_ll([], []).tolist() == []


def test_serialize_ll_errors():
    with pytest.raises(DimensionMismatch):
        serialize_ll([1, 2], [3])
    with pytest.raises(RangeViolation):
        serialize_ll([256], [0])
    with pytest.raises(RangeViolation):
        serialize_ll([0], [-1])


@given(cover_and_payload(), keys)
def test_matches_bitwise_reference(cp, s):
    blue, payload = cp
    assert embed(blue, payload, s).tolist() == embed_bitwise(blue, payload, s)


@given(cover_and_payload(), keys)
def test_round_trip(cp, s):
    blue, payload = cp
    assert np.array_equal(extract(embed(blue, payload, s), s), payload)


@given(cover_and_payload(), keys)
def test_high_nibble_preserved_and_distortion_bounded(cp, s):
    blue, payload = cp
    out = embed(blue, payload, s)
    assert not ((out ^ blue) & 0xF0).any()
    assert (np.abs(out.astype(int) - blue.astype(int)) <= 15).all()


@given(cover_and_payload(), keys)
def test_every_low_nibble_bit_is_overwritten(cp, s):
    blue, payload = cp
    # output does not depend on the cover's low nibble at all
    assert np.array_equal(embed(blue, payload, s), embed(blue | 0x0F, payload, s))
