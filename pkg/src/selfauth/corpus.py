"""Natural 512x512 test images built from scikit-image's bundled samples.

Needs the optional ``scikit-image`` dependency. Images larger than 512 on the
short side are center-cropped to a square and downsampled; smaller ones are
upsampled.
"""

from __future__ import annotations

import numpy as np

from .image_io import RgbImage

SAMPLES = (
    "astronaut",
    "chelsea",
    "coffee",
    "rocket",
    "immunohistochemistry",
    "retina",
    "hubble_deep_field",
)


def _square(pixels: np.ndarray, size: int) -> np.ndarray:
    from skimage.transform import resize

    h, w = pixels.shape[:2]
    side = min(h, w)
    top, left = (h - side) // 2, (w - side) // 2
    crop = pixels[top : top + side, left : left + side, :3]
    if side == size:
        return crop.astype(np.uint8)
    out = resize(crop, (size, size), order=1, anti_aliasing=side > size,
                 preserve_range=True)
    return np.clip(np.rint(out), 0, 255).astype(np.uint8)


def natural_image(name: str, size: int = 512) -> RgbImage:
    from skimage import data

    return RgbImage.from_array(_square(getattr(data, name)(), size))


def natural_corpus(size: int = 512, names=SAMPLES) -> dict[str, RgbImage]:
    return {name: natural_image(name, size) for name in names}
