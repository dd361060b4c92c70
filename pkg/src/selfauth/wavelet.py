"""One-level 2D Haar transform via integer lifting.

The averaging/differencing pair ``low = floor((a+b)/2)``, ``high = a - b`` is
exactly invertible on integers, so synthesis reproduces the input plane
bit-for-bit. The forward transform runs rows then columns; the inverse runs
columns then rows.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, OddDimensions


def forward_pair(a, b):
    """Return ``(low, high)`` for a sample pair. Works on ints or int arrays."""
    return (a + b) // 2, a - b


def inverse_pair(low, high):
    a = low + (high + 1) // 2
    return a, a - high


@dataclass(frozen=True, eq=False)
class SubbandSet:
    """The four half-resolution subbands of one plane.

    ``ll`` is the low-resolution sub-image and always fits in a byte when the
    input was a byte plane. ``hl`` comes from the horizontal detail half after
    the column low-pass, ``lh`` from the horizontal low half after the column
    high-pass, ``hh`` from high-pass in both directions.
    """

    ll: np.ndarray
    hl: np.ndarray
    lh: np.ndarray
    hh: np.ndarray

    @property
    def half_height(self) -> int:
        return self.ll.shape[0]

    @property
    def half_width(self) -> int:
        return self.ll.shape[1]


def _as_plane(plane, width: int | None, height: int | None) -> np.ndarray:
    arr = np.asarray(plane)
    if arr.ndim == 1:
        if width is None or height is None:
            raise ValueError("flat planes need explicit width and height")
        if arr.size != width * height:
            raise DimensionMismatch(
                f"plane length {arr.size} != {width}x{height}"
            )
        arr = arr.reshape(height, width)
    elif arr.ndim == 2:
        if (width is not None and arr.shape[1] != width) or (
            height is not None and arr.shape[0] != height
        ):
            raise DimensionMismatch(
                f"plane shape {arr.shape} disagrees with {width}x{height}"
            )
    else:
        raise ValueError(f"plane must be 1D or 2D, got {arr.ndim}D")
    return arr.astype(np.int32)


def forward_2d(plane, width: int | None = None, height: int | None = None) -> SubbandSet:
    """Decompose a byte plane into LL/HL/LH/HH.

    ``plane`` is either a 2D ``(height, width)`` array or a flat row-major
    sequence accompanied by ``width`` and ``height``.
    """
    p = _as_plane(plane, width, height)
    h, w = p.shape
    if h % 2 or w % 2:
        raise OddDimensions(f"plane is {w}x{h}; even dimensions are required")

    low, high = forward_pair(p[:, 0::2], p[:, 1::2])
    ll, lh = forward_pair(low[0::2, :], low[1::2, :])
    hl, hh = forward_pair(high[0::2, :], high[1::2, :])
    return SubbandSet(ll=ll, hl=hl, lh=lh, hh=hh)


def inverse_2d(sb: SubbandSet) -> np.ndarray:
    """Reconstruct the ``(2*half_height, 2*half_width)`` plane as uint8."""
    shape = np.shape(sb.ll)
    for name in ("hl", "lh", "hh"):
        if np.shape(getattr(sb, name)) != shape:
            raise DimensionMismatch(
                f"subband {name} has shape {np.shape(getattr(sb, name))}, ll has {shape}"
            )
    hh_, hw = shape
    ll, hl, lh, hh = (np.asarray(x, dtype=np.int32) for x in (sb.ll, sb.hl, sb.lh, sb.hh))

    low = np.empty((2 * hh_, hw), dtype=np.int32)
    high = np.empty_like(low)
    low[0::2, :], low[1::2, :] = inverse_pair(ll, lh)
    high[0::2, :], high[1::2, :] = inverse_pair(hl, hh)

    out = np.empty((2 * hh_, 2 * hw), dtype=np.int32)
    out[:, 0::2], out[:, 1::2] = inverse_pair(low, high)
    if out.size and (out.min() < 0 or out.max() > 255):
        raise ValueError("subbands do not reconstruct a byte plane")
    return out.astype(np.uint8)
