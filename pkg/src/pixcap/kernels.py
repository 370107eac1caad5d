"""Hot numeric kernels: numba-jitted inner loops with pure-numpy fallbacks.

The backend is chosen once at import time from the PIXCAP_KERNELS env var:
``PIXCAP_KERNELS=numpy`` forces the fallback path, anything else (or unset)
uses numba when it is importable.  Both paths perform identical arithmetic
in identical order, so results are bitwise equal; tests and the benchmark
in benchmarks/bench_kernels.py compare them directly.
"""

import os

import numpy as np
from scipy import ndimage

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba installed
    HAVE_NUMBA = False

_FORCED = os.environ.get("PIXCAP_KERNELS", "").strip().lower()
BACKEND = "numpy" if (_FORCED == "numpy" or not HAVE_NUMBA) else "numba"

_FOUR_CONN = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=np.intp)


# ---------------------------------------------------------------------------
# SLIC assignment step
# ---------------------------------------------------------------------------

def slic_assign_numpy(lab, cx, cy, cl, ca, cb, radius, w2, labels, best):
    """One SLIC assignment sweep over all centers, vectorized per window.

    `labels`/`best` hold the incoming assignment and its distance; a pixel
    only moves to a center at strictly smaller distance, and centers are
    scanned in index order, so the lowest index wins ties.  Updated in place.
    """
    h, w = labels.shape
    xs = np.arange(w, dtype=np.float64)
    ys = np.arange(h, dtype=np.float64)
    for j in range(cx.shape[0]):
        x0 = max(0, int(np.floor(cx[j] - radius)))
        x1 = min(w - 1, int(np.ceil(cx[j] + radius)))
        y0 = max(0, int(np.floor(cy[j] - radius)))
        y1 = min(h - 1, int(np.ceil(cy[j] + radius)))
        if x0 > x1 or y0 > y1:
            continue
        sub = lab[y0 : y1 + 1, x0 : x1 + 1]
        dl = sub[:, :, 0] - cl[j]
        da = sub[:, :, 1] - ca[j]
        db = sub[:, :, 2] - cb[j]
        dx = xs[x0 : x1 + 1] - cx[j]
        dy = ys[y0 : y1 + 1] - cy[j]
        d2 = (dl * dl + da * da + db * db) + (
            dx[None, :] * dx[None, :] + dy[:, None] * dy[:, None]
        ) * w2
        win_best = best[y0 : y1 + 1, x0 : x1 + 1]
        win_labels = labels[y0 : y1 + 1, x0 : x1 + 1]
        better = d2 < win_best
        win_best[better] = d2[better]
        win_labels[better] = j


if HAVE_NUMBA:

    @njit(cache=True)
    def _slic_assign_numba(lab, cx, cy, cl, ca, cb, radius, w2, labels, best):
        h, w = labels.shape
        for j in range(cx.shape[0]):
            x0 = max(0, int(np.floor(cx[j] - radius)))
            x1 = min(w - 1, int(np.ceil(cx[j] + radius)))
            y0 = max(0, int(np.floor(cy[j] - radius)))
            y1 = min(h - 1, int(np.ceil(cy[j] + radius)))
            for y in range(y0, y1 + 1):
                dy = y - cy[j]
                for x in range(x0, x1 + 1):
                    dl = lab[y, x, 0] - cl[j]
                    da = lab[y, x, 1] - ca[j]
                    db = lab[y, x, 2] - cb[j]
                    dx = x - cx[j]
                    d2 = (dl * dl + da * da + db * db) + (dx * dx + dy * dy) * w2
                    if d2 < best[y, x]:
                        best[y, x] = d2
                        labels[y, x] = j


# ---------------------------------------------------------------------------
# Connected components (4-connectivity) over a label map
# ---------------------------------------------------------------------------

def label_components_numpy(labels):
    """Per-label 4-connected components via scipy, ids in raster order."""
    comp = np.full(labels.shape, -1, dtype=np.int32)
    next_id = 0
    for value in np.unique(labels):
        mask = labels == value
        lbl, n = ndimage.label(mask, structure=_FOUR_CONN)
        comp[mask] = lbl[mask] - 1 + next_id
        next_id += n
    return _canonicalize(comp)


if HAVE_NUMBA:

    @njit(cache=True)
    def _label_components_numba(labels):
        h, w = labels.shape
        comp = np.full((h, w), -1, dtype=np.int32)
        stack = np.empty(h * w, dtype=np.int64)
        count = 0
        for sy in range(h):
            for sx in range(w):
                if comp[sy, sx] >= 0:
                    continue
                value = labels[sy, sx]
                comp[sy, sx] = count
                stack[0] = sy * w + sx
                top = 1
                while top > 0:
                    top -= 1
                    p = stack[top]
                    py = p // w
                    px = p % w
                    if py > 0 and comp[py - 1, px] < 0 and labels[py - 1, px] == value:
                        comp[py - 1, px] = count
                        stack[top] = p - w
                        top += 1
                    if py < h - 1 and comp[py + 1, px] < 0 and labels[py + 1, px] == value:
                        comp[py + 1, px] = count
                        stack[top] = p + w
                        top += 1
                    if px > 0 and comp[py, px - 1] < 0 and labels[py, px - 1] == value:
                        comp[py, px - 1] = count
                        stack[top] = p - 1
                        top += 1
                    if px < w - 1 and comp[py, px + 1] < 0 and labels[py, px + 1] == value:
                        comp[py, px + 1] = count
                        stack[top] = p + 1
                        top += 1
                count += 1
        return comp


def _canonicalize(comp):
    """Renumber component ids by first occurrence in raster order."""
    flat = comp.ravel()
    values, first = np.unique(flat, return_index=True)
    order = np.argsort(first, kind="stable")
    remap = np.empty(values.shape[0], dtype=np.int32)
    remap[order] = np.arange(values.shape[0], dtype=np.int32)
    lookup = np.empty(int(values.max()) + 1, dtype=np.int32)
    lookup[values] = remap
    return lookup[comp]


# ---------------------------------------------------------------------------
# Bilinear resize (uint8 RGB)
# ---------------------------------------------------------------------------

def _source_coords(dst, src, n_dst):
    # half-pixel centers convention; clamp so the 4-tap stencil stays in range
    coords = (np.arange(n_dst, dtype=np.float64) + 0.5) * (src / dst) - 0.5
    return np.clip(coords, 0.0, src - 1.0)


def resize_bilinear_numpy(img, out_w, out_h):
    h, w = img.shape[:2]
    sx = _source_coords(out_w, w, out_w)
    sy = _source_coords(out_h, h, out_h)
    x0 = np.floor(sx).astype(np.int64)
    y0 = np.floor(sy).astype(np.int64)
    x1 = np.minimum(x0 + 1, w - 1)
    y1 = np.minimum(y0 + 1, h - 1)
    fx = sx - x0
    fy = sy - y0
    pix = img.astype(np.float64)
    p00 = pix[y0[:, None], x0[None, :]]
    p01 = pix[y0[:, None], x1[None, :]]
    p10 = pix[y1[:, None], x0[None, :]]
    p11 = pix[y1[:, None], x1[None, :]]
    wfx = fx[None, :, None]
    wfy = fy[:, None, None]
    val = (1.0 - wfy) * ((1.0 - wfx) * p00 + wfx * p01) + wfy * ((1.0 - wfx) * p10 + wfx * p11)
    return np.floor(val + 0.5).astype(np.uint8)


if HAVE_NUMBA:

    @njit(cache=True)
    def _resize_bilinear_numba(img, out_w, out_h):
        h, w = img.shape[:2]
        out = np.empty((out_h, out_w, 3), dtype=np.uint8)
        for oy in range(out_h):
            sy = (oy + 0.5) * (h / out_h) - 0.5
            if sy < 0.0:
                sy = 0.0
            if sy > h - 1.0:
                sy = h - 1.0
            y0 = int(np.floor(sy))
            y1 = min(y0 + 1, h - 1)
            fy = sy - y0
            for ox in range(out_w):
                sx = (ox + 0.5) * (w / out_w) - 0.5
                if sx < 0.0:
                    sx = 0.0
                if sx > w - 1.0:
                    sx = w - 1.0
                x0 = int(np.floor(sx))
                x1 = min(x0 + 1, w - 1)
                fx = sx - x0
                for c in range(3):
                    p00 = float(img[y0, x0, c])
                    p01 = float(img[y0, x1, c])
                    p10 = float(img[y1, x0, c])
                    p11 = float(img[y1, x1, c])
                    val = (1.0 - fy) * ((1.0 - fx) * p00 + fx * p01) + fy * (
                        (1.0 - fx) * p10 + fx * p11
                    )
                    out[oy, ox, c] = np.uint8(np.floor(val + 0.5))
        return out


# ---------------------------------------------------------------------------
# Backend dispatch
# ---------------------------------------------------------------------------

def _label_components_numba_canonical(labels):
    return _canonicalize(_label_components_numba(labels))


if BACKEND == "numba":
    slic_assign = _slic_assign_numba
    label_components = _label_components_numba_canonical
    resize_bilinear = _resize_bilinear_numba
else:
    slic_assign = slic_assign_numpy
    label_components = label_components_numpy
    resize_bilinear = resize_bilinear_numpy


def backends():
    """(name, assign, components, resize) tuples for every available backend."""
    available = [("numpy", slic_assign_numpy, label_components_numpy, resize_bilinear_numpy)]
    if HAVE_NUMBA:
        available.append(
            ("numba", _slic_assign_numba, _label_components_numba_canonical, _resize_bilinear_numba)
        )
    return available
