"""Image quality measures: MSE, PSNR, image fidelity and standard deviation.

MSE and IF pool all three channels, i.e. MSE divides by ``3*W*H``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, ZeroReference
from .image_io import RgbImage

PEAK = 255


@dataclass(frozen=True)
class QualityMetrics:
    mse: float
    psnr: float
    image_fidelity: float
    std_dev_orig: float
    std_dev_stego: float


def _diff(orig: RgbImage, stego: RgbImage) -> np.ndarray:
    if (orig.width, orig.height) != (stego.width, stego.height):
        raise DimensionMismatch(
            f"images differ in size: {orig.width}x{orig.height} vs "
            f"{stego.width}x{stego.height}"
        )
    return orig.to_array().astype(np.int64) - stego.to_array().astype(np.int64)


def mse(orig: RgbImage, stego: RgbImage) -> float:
    d = _diff(orig, stego)
    return float(np.sum(d * d)) / d.size


def psnr(mse_value: float) -> float:
    if mse_value < 0:
        raise ValueError("MSE cannot be negative")
    if mse_value == 0:
        return math.inf
    return 10.0 * math.log10(PEAK * PEAK / mse_value)


def image_fidelity(orig: RgbImage, stego: RgbImage) -> float:
    d = _diff(orig, stego)
    ref = orig.to_array().astype(np.int64)
    energy = int(np.sum(ref * ref))
    if energy == 0:
        raise ZeroReference("image fidelity is undefined for an all-zero original")
    return 1.0 - int(np.sum(d * d)) / energy


def std_dev(img: RgbImage) -> float:
    """Population standard deviation over every sample of every channel."""
    return float(np.std(img.to_array().astype(np.float64)))


def measure(orig: RgbImage, stego: RgbImage) -> QualityMetrics:
    """All metrics at once; IF is NaN when the original is all zero."""
    m = mse(orig, stego)
    try:
        fidelity = image_fidelity(orig, stego)
    except ZeroReference:
        fidelity = math.nan
    return QualityMetrics(
        mse=m,
        psnr=psnr(m),
        image_fidelity=fidelity,
        std_dev_orig=std_dev(orig),
        std_dev_stego=std_dev(stego),
    )
