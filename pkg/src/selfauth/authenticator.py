"""Encode and verify pipelines.

Encoding hides the LL subbands of red and green in the blue plane. Verifying
recomputes them from the candidate's red/green, extracts what the blue plane
carries, and compares byte by byte. Each mismatching byte implicates one 2x2
source block and two blue carrier pixels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .embedding import DEFAULT_KEY, EmbedKey, embed, extract, serialize_ll
from .image_io import RgbImage, write_pgm
from .wavelet import forward_2d, inverse_2d


class BlockMismatch(NamedTuple):
    channel: str  # "R" or "G"
    row: int
    col: int
    carriers: tuple[int, int]

    def to_dict(self) -> dict:
        return {
            "channel": self.channel,
            "row": self.row,
            "col": self.col,
            "carriers": list(self.carriers),
        }


@dataclass(frozen=True, eq=False)
class VerificationReport:
    authentic: bool
    total_payload_bytes: int
    mismatched_bytes: int
    tamper_map: np.ndarray  # (height, width) uint8, 1 = suspect
    blocks: list[BlockMismatch] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "authentic": self.authentic,
            "total_payload_bytes": self.total_payload_bytes,
            "mismatched_bytes": self.mismatched_bytes,
            "blocks": [b.to_dict() for b in self.blocks],
        }


def expected_payload(img: RgbImage) -> np.ndarray:
    img.require_even()
    ll_red = forward_2d(img.red).ll
    ll_green = forward_2d(img.green).ll
    return serialize_ll(ll_red, ll_green)


def encode(cover: RgbImage, key: EmbedKey | int = DEFAULT_KEY) -> RgbImage:
    cover.require_even()
    red_bands = forward_2d(cover.red)
    green_bands = forward_2d(cover.green)
    payload = serialize_ll(red_bands.ll, green_bands.ll)

    # red/green pass through; the synthesis step must give them back unchanged
    red = inverse_2d(red_bands)
    green = inverse_2d(green_bands)
    if not (np.array_equal(red, cover.red) and np.array_equal(green, cover.green)):
        raise RuntimeError("wavelet synthesis failed to reproduce red/green")

    blue = embed(cover.blue, payload, key)
    return RgbImage(cover.width, cover.height, red, green, blue)


def _locate(indices: np.ndarray, width: int, height: int):
    """Channel flag, block row and block col for each mismatched payload index."""
    half_w = width // 2
    per_channel = half_w * (height // 2)
    is_green = indices >= per_channel
    j = np.where(is_green, indices - per_channel, indices)
    return is_green, j // half_w, j % half_w


def verify(candidate: RgbImage, key: EmbedKey | int = DEFAULT_KEY) -> VerificationReport:
    """Check ``candidate`` against the digest it carries.

    Authentic means every payload byte matches; there is no tolerance here.
    """
    expected = expected_payload(candidate)
    actual = extract(candidate.blue, key)
    bad = np.flatnonzero(expected != actual)

    w, h = candidate.width, candidate.height
    is_green, rows, cols = _locate(bad, w, h)
    tamper = np.zeros((h, w), dtype=np.uint8)
    for dr in (0, 1):
        for dc in (0, 1):
            tamper[2 * rows + dr, 2 * cols + dc] = 1
    flat = tamper.reshape(-1)
    flat[2 * bad] = 1
    flat[2 * bad + 1] = 1

    blocks = [
        BlockMismatch("G" if g else "R", r, c, (2 * i, 2 * i + 1))
        for i, g, r, c in zip(bad.tolist(), is_green.tolist(), rows.tolist(), cols.tolist())
    ]

    return VerificationReport(
        authentic=bad.size == 0,
        total_payload_bytes=int(expected.size),
        mismatched_bytes=int(bad.size),
        tamper_map=tamper,
        blocks=blocks,
    )


def tamper_mask_to_pgm(report: VerificationReport) -> bytes:
    """Render the tamper map as a binary P5 graymap (0 clean, 255 suspect)."""
    return write_pgm(np.where(report.tamper_map != 0, 255, 0).astype(np.uint8))
