"""Keyed low-nibble embedding of the LL digest into the blue plane.

Payload byte ``i`` lives in blue pixels ``2i`` (bits 0-3) and ``2i+1``
(bits 4-7). Within each pixel's low nibble the four bits are rotated by
``i mod s`` slots, where ``s`` is the secret key. Bits 4-7 of every blue
pixel are never touched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CapacityMismatch,
    DimensionMismatch,
    InvalidKey,
    OddPlaneLength,
    RangeViolation,
)

KEY_MIN, KEY_MAX = 2, 7
DEFAULT_KEY = 4


@dataclass(frozen=True)
class EmbedKey:
    s: int = DEFAULT_KEY

    def __post_init__(self):
        if isinstance(self.s, bool) or not isinstance(self.s, (int, np.integer)):
            raise InvalidKey(f"key must be an integer, got {self.s!r}")
        if not KEY_MIN <= self.s <= KEY_MAX:
            raise InvalidKey(f"key s={self.s} outside [{KEY_MIN}, {KEY_MAX}]")


def _key(key) -> EmbedKey:
    return key if isinstance(key, EmbedKey) else EmbedKey(int(key))


def bit_position(byte_index: int, bit_index: int, key: EmbedKey | int) -> tuple[int, int]:
    """Map bit ``bit_index`` of payload byte ``byte_index`` to ``(pixel, slot)``.

    ``slot`` is the bit position (0-3) inside the pixel's low nibble.
    """
    if not 0 <= bit_index <= 7:
        raise ValueError(f"bit index {bit_index} outside [0, 7]")
    s = _key(key).s
    pixel = 2 * byte_index + bit_index // 4
    slot = ((bit_index % 4) + (byte_index % s)) % 4
    return pixel, slot


def _rotations(n: int, s: int) -> np.ndarray:
    return (np.arange(n, dtype=np.int64) % s) % 4


def _rotl4(nibbles: np.ndarray, r: np.ndarray) -> np.ndarray:
    return ((nibbles << r) | (nibbles >> ((4 - r) % 4))) & 0xF


def _rotr4(nibbles: np.ndarray, r: np.ndarray) -> np.ndarray:
    return ((nibbles >> r) | (nibbles << ((4 - r) % 4))) & 0xF


def _as_bytes(values, what: str) -> np.ndarray:
    arr = np.asarray(values)
    if arr.dtype != np.uint8:
        arr = arr.astype(np.int64)
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise RangeViolation(f"{what} values must lie in [0, 255]")
    return arr.astype(np.uint8).ravel()


def embed(blue, payload, key: EmbedKey | int = DEFAULT_KEY) -> np.ndarray:
    """Overwrite the low nibbles of ``blue`` with ``payload``.

    ``blue`` may be flat or 2D; the result has the same shape and dtype uint8.
    Requires ``blue.size == 2 * len(payload)`` exactly.
    """
    blue_arr = np.asarray(blue)
    shape = blue_arr.shape
    flat = _as_bytes(blue_arr, "blue")
    data = _as_bytes(payload, "payload").astype(np.int64)
    if flat.size != 2 * data.size:
        raise CapacityMismatch(
            f"blue plane of {flat.size} pixels cannot carry exactly "
            f"{data.size} payload bytes at 4 bits/pixel"
        )
    r = _rotations(data.size, _key(key).s)
    nibbles = np.empty(flat.size, dtype=np.int64)
    nibbles[0::2] = _rotl4(data & 0xF, r)
    nibbles[1::2] = _rotl4(data >> 4, r)
    out = (flat & 0xF0) | nibbles.astype(np.uint8)
    return out.reshape(shape)


def extract(blue, key: EmbedKey | int = DEFAULT_KEY) -> np.ndarray:
    """Recover the payload bytes hidden in ``blue``'s low nibbles."""
    flat = _as_bytes(blue, "blue").astype(np.int64)
    if flat.size % 2:
        raise OddPlaneLength(f"blue plane length {flat.size} is odd")
    n = flat.size // 2
    r = _rotations(n, _key(key).s)
    lo = _rotr4(flat[0::2] & 0xF, r)
    hi = _rotr4(flat[1::2] & 0xF, r)
    return (lo | (hi << 4)).astype(np.uint8)


def serialize_ll(ll_red, ll_green) -> np.ndarray:
    """Concatenate the red LL then the green LL, each row-major."""
    red = np.asarray(ll_red)
    green = np.asarray(ll_green)
    if red.shape != green.shape:
        raise DimensionMismatch(
            f"LL planes differ in shape: red {red.shape}, green {green.shape}"
        )
    return np.concatenate([_as_bytes(red, "LL"), _as_bytes(green, "LL")])
