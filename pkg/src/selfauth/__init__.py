"""Self-authenticating color images.

The red and green channels are summarized by their one-level Haar LL
subbands; that digest is hidden in the low nibbles of the blue channel under
a small secret key, and later recomputed and compared to detect and localize
tampering.
"""

from .authenticator import (
    BlockMismatch,
    VerificationReport,
    encode,
    tamper_mask_to_pgm,
    verify,
)
from .embedding import EmbedKey, bit_position, embed, extract, serialize_ll
from .errors import *  # noqa: F401,F403
from .image_io import RgbImage, load_ppm, read_pgm, read_ppm, save_ppm, write_pgm, write_ppm
from .metrics import QualityMetrics, image_fidelity, measure, mse, psnr, std_dev
from .wavelet import SubbandSet, forward_2d, forward_pair, inverse_2d, inverse_pair

__version__ = "0.1.0"
