"""PPM/PGM codec and the in-memory RGB image model.

Only maxval 255 is supported. The writer always emits the canonical header
``P6\\n<w> <h>\\n255\\n`` so output is byte-for-byte reproducible.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np

from .errors import (
    MalformedHeader,
    OddDimensions,
    RangeViolation,
    Truncated,
    UnsupportedFormat,
)

PathLike = Union[str, "os.PathLike[str]"]

_WHITESPACE = b" \t\n\r\v\f"


def _frozen_plane(values, height: int, width: int) -> np.ndarray:
    arr = np.asarray(values)
    if arr.size != width * height:
        raise ValueError(
            f"plane has {arr.size} samples, expected {width}x{height}={width * height}"
        )
    if arr.dtype != np.uint8:
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise RangeViolation("plane samples must lie in [0, 255]")
        arr = arr.astype(np.uint8)
    arr = np.array(arr.reshape(height, width), dtype=np.uint8, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class RgbImage:
    """Three 8-bit planes of shape ``(height, width)``, row-major.

    Planes are copied on construction and marked read-only, so instances can be
    shared freely.
    """

    width: int
    height: int
    red: np.ndarray
    green: np.ndarray
    blue: np.ndarray

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ValueError("image dimensions must be positive")
        for name in ("red", "green", "blue"):
            plane = _frozen_plane(getattr(self, name), self.height, self.width)
            object.__setattr__(self, name, plane)

    @classmethod
    def from_array(cls, pixels: np.ndarray) -> "RgbImage":
        """Build from an ``(H, W, 3)`` array."""
        pixels = np.asarray(pixels)
        if pixels.ndim != 3 or pixels.shape[2] != 3:
            raise ValueError(f"expected (H, W, 3) array, got shape {pixels.shape}")
        h, w, _ = pixels.shape
        return cls(w, h, pixels[..., 0], pixels[..., 1], pixels[..., 2])

    def to_array(self) -> np.ndarray:
        return np.stack([self.red, self.green, self.blue], axis=-1)

    @property
    def planes(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return self.red, self.green, self.blue

    def replace(self, **planes: np.ndarray) -> "RgbImage":
        """Return a copy with some of ``red``/``green``/``blue`` swapped out."""
        fields = {"red": self.red, "green": self.green, "blue": self.blue}
        fields.update(planes)
        return RgbImage(self.width, self.height, **fields)

    def require_even(self) -> None:
        if self.width % 2 or self.height % 2:
            raise OddDimensions(
                f"image is {self.width}x{self.height}; even dimensions are required"
            )

    def __eq__(self, other):
        if not isinstance(other, RgbImage):
            return NotImplemented
        return (
            self.width == other.width
            and self.height == other.height
            and all(np.array_equal(a, b) for a, b in zip(self.planes, other.planes))
        )

    __hash__ = None

    def __repr__(self):
        return f"RgbImage(width={self.width}, height={self.height})"


class _HeaderReader:
    def __init__(self, data: bytes):
        self.data = data
        self.pos = 0

    def skip_space(self) -> None:
        data = self.data
        while self.pos < len(data):
            c = data[self.pos : self.pos + 1]
            if c == b"#":
                end = data.find(b"\n", self.pos)
                self.pos = len(data) if end < 0 else end + 1
            elif c in _WHITESPACE:
                self.pos += 1
            else:
                return

    def token(self) -> bytes:
        self.skip_space()
        start = self.pos
        data = self.data
        while (
            self.pos < len(data)
            and data[self.pos : self.pos + 1] not in _WHITESPACE
            and data[self.pos : self.pos + 1] != b"#"
        ):
            self.pos += 1
        if start == self.pos:
            raise MalformedHeader("unexpected end of header")
        return data[start : self.pos]

    def integer(self, what: str) -> int:
        tok = self.token()
        if not tok.isdigit():
            raise MalformedHeader(f"bad {what}: {tok!r}")
        return int(tok)


def _parse_header(data: bytes, allowed: tuple[bytes, ...]):
    if len(data) < 2:
        raise MalformedHeader("file too short for a netpbm header")
    magic = data[:2]
    if magic not in allowed:
        raise UnsupportedFormat(f"unsupported magic {magic!r}")
    reader = _HeaderReader(data)
    reader.pos = 2
    if reader.pos < len(data) and data[2:3] not in _WHITESPACE + b"#":
        raise MalformedHeader("magic number must be followed by whitespace")
    width = reader.integer("width")
    height = reader.integer("height")
    maxval = reader.integer("maxval")
    if width < 1 or height < 1:
        raise MalformedHeader(f"invalid dimensions {width}x{height}")
    if maxval != 255:
        raise UnsupportedFormat(f"maxval {maxval} not supported (only 255)")
    return magic, width, height, reader


def _binary_samples(data: bytes, reader: _HeaderReader, count: int) -> np.ndarray:
    # exactly one whitespace byte separates the header from the raster
    if reader.pos >= len(data) or data[reader.pos : reader.pos + 1] not in _WHITESPACE:
        raise Truncated("missing raster data")
    start = reader.pos + 1
    raster = data[start : start + count]
    if len(raster) < count:
        raise Truncated(f"expected {count} samples, found {len(raster)}")
    return np.frombuffer(raster, dtype=np.uint8)


def _ascii_samples(data: bytes, reader: _HeaderReader, count: int) -> np.ndarray:
    body = data[reader.pos :]
    lines = [line.split(b"#", 1)[0] for line in body.splitlines()]
    tokens = b" ".join(lines).split()
    if len(tokens) < count:
        raise Truncated(f"expected {count} samples, found {len(tokens)}")
    try:
        values = np.array([int(t) for t in tokens[:count]], dtype=np.int64)
    except ValueError as exc:
        raise MalformedHeader(f"non-numeric sample in ASCII raster: {exc}") from None
    if values.size and (values.min() < 0 or values.max() > 255):
        raise RangeViolation("ASCII sample exceeds maxval 255")
    return values.astype(np.uint8)


def read_ppm(data: bytes) -> RgbImage:
    """Decode a P6 or P3 pixmap with maxval 255."""
    magic, width, height, reader = _parse_header(data, (b"P6", b"P3"))
    count = 3 * width * height
    if magic == b"P6":
        samples = _binary_samples(data, reader, count)
    else:
        samples = _ascii_samples(data, reader, count)
    return RgbImage.from_array(samples.reshape(height, width, 3))


def write_ppm(img: RgbImage, format: Literal["P6", "P3"] = "P6") -> bytes:
    header = f"{format}\n{img.width} {img.height}\n255\n".encode("ascii")
    interleaved = img.to_array()
    if format == "P6":
        return header + interleaved.tobytes()
    if format == "P3":
        rows = (
            " ".join(str(int(v)) for v in row.ravel()) for row in interleaved
        )
        return header + "\n".join(rows).encode("ascii") + b"\n"
    raise UnsupportedFormat(f"cannot write format {format!r}")


def read_pgm(data: bytes) -> np.ndarray:
    """Decode a P5 graymap into an ``(H, W)`` uint8 array."""
    _, width, height, reader = _parse_header(data, (b"P5",))
    return _binary_samples(data, reader, width * height).reshape(height, width).copy()


def write_pgm(plane: np.ndarray) -> bytes:
    plane = np.asarray(plane)
    if plane.ndim != 2:
        raise ValueError("PGM plane must be two-dimensional")
    height, width = plane.shape
    header = f"P5\n{width} {height}\n255\n".encode("ascii")
    return header + plane.astype(np.uint8).tobytes()


def load_ppm(path: PathLike) -> RgbImage:
    with open(path, "rb") as fh:
        return read_ppm(fh.read())


def save_ppm(img: RgbImage, path: PathLike, format: Literal["P6", "P3"] = "P6") -> None:
    with open(path, "wb") as fh:
        fh.write(write_ppm(img, format))
