"""Raw-pixel substrate: load/save, CIELAB conversion, cropping, resizing.

Images are numpy arrays of shape (height, width, 3): uint8 for RGB,
float64 for Lab.  All functions are pure; none mutate their inputs.
"""

import io
from dataclasses import dataclass

import numpy as np
from PIL import Image as PilImage, UnidentifiedImageError

from .errors import ImageFormatError
from .kernels import resize_bilinear

# sRGB -> XYZ (D65, 2 degree observer).  The reference white is taken as the
# row sums of this exact matrix so that (255,255,255) maps to L=100, a=b=0
# without residual.
_RGB_TO_XYZ = np.array(
    [
        [0.4123907992659595, 0.3575843393838780, 0.1804807884018343],
        [0.2126390058715104, 0.7151686787677559, 0.0721923153607337],
        [0.0193308187155918, 0.1191947797946259, 0.9505321522496606],
    ]
)
_WHITE = _RGB_TO_XYZ.sum(axis=1)
_DELTA = 6.0 / 29.0


@dataclass(frozen=True)
class BBox:
    """Axis-aligned pixel rectangle: top-left corner plus extent."""

    x: int
    y: int
    w: int
    h: int

    def __post_init__(self):
        if self.w < 1 or self.h < 1:
            raise ValueError(f"bbox extent must be >= 1, got {self.w}x{self.h}")
        if self.x < 0 or self.y < 0:
            raise ValueError(f"bbox corner must be non-negative, got ({self.x},{self.y})")

    def check_within(self, width, height):
        if self.x + self.w > width or self.y + self.h > height:
            raise ValueError(
                f"bbox ({self.x},{self.y},{self.w},{self.h}) exceeds image {width}x{height}"
            )


def _as_image(arr):
    arr = np.asarray(arr)
    if arr.ndim != 3 or arr.shape[2] != 3 or arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"expected (h,w,3) image array, got shape {arr.shape}")
    return arr


def load_image(path) -> np.ndarray:
    """Decode a PNG or JPEG file to an (h,w,3) uint8 array.

    Alpha channels are dropped; grayscale is expanded to three channels.
    Raises FileNotFoundError for missing paths and ImageFormatError for
    files that are not decodable images.
    """
    with open(path, "rb") as fh:
        data = fh.read()
    try:
        with PilImage.open(io.BytesIO(data)) as im:
            if im.format not in ("PNG", "JPEG"):
                raise ImageFormatError(f"{path}: unsupported format {im.format!r}")
            return np.asarray(im.convert("RGB"), dtype=np.uint8)
    except UnidentifiedImageError as exc:
        raise ImageFormatError(f"{path}: not a decodable image") from exc


def save_png(img, path):
    img = _as_image(img)
    PilImage.fromarray(np.ascontiguousarray(img.astype(np.uint8)), "RGB").save(path, "PNG")


def png_bytes(img) -> bytes:
    img = _as_image(img)
    buf = io.BytesIO()
    PilImage.fromarray(np.ascontiguousarray(img.astype(np.uint8)), "RGB").save(buf, "PNG")
    return buf.getvalue()


def rgb_to_lab(img) -> np.ndarray:
    """Per-pixel sRGB -> linear -> XYZ (D65) -> CIELAB, float64 output."""
    img = _as_image(img)
    c = img.astype(np.float64) / 255.0
    linear = np.where(c <= 0.04045, c / 12.92, ((c + 0.055) / 1.055) ** 2.4)
    xyz = linear @ _RGB_TO_XYZ.T
    t = xyz / _WHITE
    f = np.where(t > _DELTA**3, np.cbrt(t), t / (3.0 * _DELTA**2) + 4.0 / 29.0)
    lab = np.empty_like(f)
    lab[:, :, 0] = 116.0 * f[:, :, 1] - 16.0
    lab[:, :, 1] = 500.0 * (f[:, :, 0] - f[:, :, 1])
    lab[:, :, 2] = 200.0 * (f[:, :, 1] - f[:, :, 2])
    return lab


def crop(img, box: BBox) -> np.ndarray:
    img = _as_image(img)
    box.check_within(img.shape[1], img.shape[0])
    return img[box.y : box.y + box.h, box.x : box.x + box.w].copy()


def resize(img, w: int, h: int) -> np.ndarray:
    """Bilinear resize to (w,h) using half-pixel-center sampling."""
    img = _as_image(img)
    if w < 1 or h < 1:
        raise ValueError(f"target size must be >= 1, got {w}x{h}")
    if (img.shape[1], img.shape[0]) == (w, h):
        return img.copy()
    return resize_bilinear(np.ascontiguousarray(img, dtype=np.uint8), w, h)
