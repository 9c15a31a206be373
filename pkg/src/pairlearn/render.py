"""Deterministic rasterization of stimulus objects and pairs.

Rendering is a pure function of (object spec, half width, half height)
for a pinned render-config version: masks are computed by exact analytic
inclusion tests on the pixel grid (no anti-aliasing, no trig on arbitrary
angles), so identical inputs produce bit-identical rasters across runs
and platforms.

Geometry, all relative to the half-canvas:
  * the object's bounding radius is 0.40 * min(W, H) for large objects
    and half that for small ones (2:1 linear extent, >=10% margin);
  * the center shape is inscribed in a circle of 0.72 * bounding radius;
  * appendages occupy the remaining annulus;
  * textures are canvas-anchored with dot radius H/32 and stripe period
    H/8 at 45 degrees, keeping all three patterns discriminable down to
    the 32x32 minimum half size.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import RenderResolutionError
from .pairs import PairSpec, TestPair
from .space import ObjectSpec

RENDER_CONFIG_VERSION = "rc-1"

MIN_HALF_SIZE = 32
OBJECT_RADIUS_FRAC = 0.40
SIZE_RATIO = 2.0
CENTER_RADIUS_FRAC = 0.72
DOT_RADIUS_FRAC = 1.0 / 32.0
TEXTURE_PERIOD_FRAC = 1.0 / 8.0

BACKGROUND_RGB = (255, 255, 255)
OUTLINE_RGB = (40, 40, 40)
COLOR_RGB = {
    "red": (214, 40, 40),
    "blue": (38, 84, 217),
    "green": (42, 157, 84),
    "yellow": (244, 201, 36),
}

_SQRT2_HALF = math.sqrt(2.0) / 2.0
_SQRT3_HALF = math.sqrt(3.0) / 2.0

# Unit-circle positions used for shape vertices and appendage anchors.
# Hard constants (no trig at render time) keep rasters platform-stable.
_DIRS_4 = ((1.0, 0.0), (0.0, -1.0), (-1.0, 0.0), (0.0, 1.0))
_DIRS_4_DIAG = (
    (_SQRT2_HALF, -_SQRT2_HALF),
    (-_SQRT2_HALF, -_SQRT2_HALF),
    (-_SQRT2_HALF, _SQRT2_HALF),
    (_SQRT2_HALF, _SQRT2_HALF),
)
_DIRS_8 = _DIRS_4 + _DIRS_4_DIAG
_TRIANGLE = ((0.0, -1.0), (-_SQRT3_HALF, 0.5), (_SQRT3_HALF, 0.5))
_HEXAGON = (
    (0.0, -1.0),
    (-_SQRT3_HALF, -0.5),
    (-_SQRT3_HALF, 0.5),
    (0.0, 1.0),
    (_SQRT3_HALF, 0.5),
    (_SQRT3_HALF, -0.5),
)


@dataclass(frozen=True)
class RenderedPair:
    """A paired raster and its two bit-exact half crops (uint8 RGB)."""

    paired_image: np.ndarray  # (H, 2W, 3)
    left_half: np.ndarray  # (H, W, 3)
    right_half: np.ndarray  # (H, W, 3)
    render_config_version: str = RENDER_CONFIG_VERSION


@dataclass(frozen=True)
class RenderedTestPair:
    """Rendered test pair with per-side membership flags for scoring."""

    left_image: np.ndarray
    right_image: np.ndarray
    left_is_member: bool
    right_is_member: bool


def _grid(W: int, H: int) -> tuple[np.ndarray, np.ndarray]:
    ys = np.arange(H, dtype=np.float64) + 0.5
    xs = np.arange(W, dtype=np.float64) + 0.5
    return np.meshgrid(xs, ys)


def _circle_mask(xx, yy, cx, cy, r):
    return (xx - cx) ** 2 + (yy - cy) ** 2 <= r * r


def _polygon_mask(xx, yy, vertices) -> np.ndarray:
    """Filled convex polygon, either winding order."""
    n = len(vertices)
    # Shoelace sign decides which side of each directed edge is inside.
    area2 = sum(
        vertices[i][0] * vertices[(i + 1) % n][1] - vertices[(i + 1) % n][0] * vertices[i][1]
        for i in range(n)
    )
    sign = -1.0 if area2 >= 0.0 else 1.0
    mask = np.ones_like(xx, dtype=bool)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        mask &= sign * ((xx - x0) * (y1 - y0) - (yy - y0) * (x1 - x0)) >= 0.0
    return mask


def _center_shape_mask(shape: str, xx, yy, cx, cy, r) -> np.ndarray:
    if shape == "circle":
        return _circle_mask(xx, yy, cx, cy, r)
    if shape == "square":
        s = r * _SQRT2_HALF
        return (np.abs(xx - cx) <= s) & (np.abs(yy - cy) <= s)
    if shape == "triangle":
        verts = [(cx + r * ux, cy + r * uy) for ux, uy in _TRIANGLE]
        return _polygon_mask(xx, yy, verts)
    if shape == "hexagon":
        verts = [(cx + r * ux, cy + r * uy) for ux, uy in _HEXAGON]
        return _polygon_mask(xx, yy, verts)
    raise ValueError(f"no renderer for center shape {shape!r}")


def _appendage_mask(kind: str, xx, yy, cx, cy, r_in, r_out) -> np.ndarray:
    """Appendages living in the annulus between the center shape and the bound."""
    mask = np.zeros_like(xx, dtype=bool)
    band = r_out - r_in
    if kind == "spikes":
        half_base = 0.30 * band
        for ux, uy in _DIRS_8:
            bx, by = cx + r_in * ux, cy + r_in * uy  # base center on the inner circle
            ax, ay = cx + r_out * ux, cy + r_out * uy  # apex on the outer circle
            px, py = -uy, ux  # perpendicular
            verts = [
                (bx + half_base * px, by + half_base * py),
                (ax, ay),
                (bx - half_base * px, by - half_base * py),
            ]
            mask |= _polygon_mask(xx, yy, verts)
    elif kind == "stubs":
        half_w = 0.55 * band
        for ux, uy in _DIRS_4:
            bx, by = cx + r_in * ux, cy + r_in * uy
            ex, ey = cx + (r_out - 0.1 * band) * ux, cy + (r_out - 0.1 * band) * uy
            px, py = -uy, ux
            verts = [
                (bx + half_w * px, by + half_w * py),
                (ex + half_w * px, ey + half_w * py),
                (ex - half_w * px, ey - half_w * py),
                (bx - half_w * px, by - half_w * py),
            ]
            mask |= _polygon_mask(xx, yy, verts)
    elif kind == "loops":
        ro = 0.5 * band
        ri = 0.5 * ro
        mid = (r_in + r_out) / 2.0
        for ux, uy in _DIRS_4_DIAG:
            lx, ly = cx + mid * ux, cy + mid * uy
            mask |= _circle_mask(xx, yy, lx, ly, ro) & ~_circle_mask(xx, yy, lx, ly, ri)
    elif kind == "nub":
        ux, uy = 0.0, -1.0  # single bump on top
        nx, ny = cx + (r_in + 0.35 * band) * ux, cy + (r_in + 0.35 * band) * uy
        mask |= _circle_mask(xx, yy, nx, ny, 0.6 * band)
    else:
        raise ValueError(f"no renderer for appendage {kind!r}")
    return mask


def _erode(mask: np.ndarray, steps: int) -> np.ndarray:
    """Binary erosion with a plus-shaped structuring element."""
    out = mask
    for _ in range(steps):
        shrunk = out.copy()
        shrunk[1:, :] &= out[:-1, :]
        shrunk[:-1, :] &= out[1:, :]
        shrunk[:, 1:] &= out[:, :-1]
        shrunk[:, :-1] &= out[:, 1:]
        out = shrunk
    return out


def _pattern_mask(pattern: str, xx, yy, H: int) -> np.ndarray:
    """Canvas-anchored texture mask: True where the fill color is painted."""
    if pattern == "plain":
        return np.ones_like(xx, dtype=bool)
    period = H * TEXTURE_PERIOD_FRAC
    if pattern == "striped":
        return np.mod(xx + yy, period) < period / 2.0
    if pattern == "dotted":
        radius = H * DOT_RADIUS_FRAC
        dx = np.mod(xx, period) - period / 2.0
        dy = np.mod(yy, period) - period / 2.0
        return dx * dx + dy * dy <= radius * radius
    raise ValueError(f"no renderer for pattern {pattern!r}")


def render_object(obj: ObjectSpec, W: int, H: int) -> np.ndarray:
    """Render one object on a white W x H half-canvas as uint8 RGB."""
    if W < MIN_HALF_SIZE or H < MIN_HALF_SIZE:
        raise RenderResolutionError(
            f"half canvas must be at least {MIN_HALF_SIZE}x{MIN_HALF_SIZE}, got {W}x{H}"
        )
    xx, yy = _grid(W, H)
    cx, cy = W / 2.0, H / 2.0
    r_out = OBJECT_RADIUS_FRAC * min(W, H)
    if obj.size == "small":
        r_out /= SIZE_RATIO
    r_center = CENTER_RADIUS_FRAC * r_out

    center = _center_shape_mask(obj.center_shape, xx, yy, cx, cy, r_center)
    border_px = max(1, round(H / 32))
    interior = _erode(center, border_px)
    border = center & ~interior
    appendage = _appendage_mask(obj.appendage_shape, xx, yy, cx, cy, r_center, r_out) & ~center
    texture = _pattern_mask(obj.pattern, xx, yy, H)

    img = np.empty((H, W, 3), dtype=np.uint8)
    img[...] = BACKGROUND_RGB
    color = COLOR_RGB.get(obj.color)
    if color is None:
        # Palette extensions hash the name onto a stable dark-ish RGB.
        h = int.from_bytes(obj.color.encode(), "little")
        color = (32 + h % 192, 32 + (h // 7) % 192, 32 + (h // 49) % 192)
    img[appendage] = color
    img[interior & texture] = color
    img[border] = OUTLINE_RGB
    return img


def render_two(left: ObjectSpec, right: ObjectSpec, W: int, H: int) -> RenderedPair:
    """Render two objects into one paired image of width 2W plus exact half crops."""
    left_img = render_object(left, W, H)
    right_img = render_object(right, W, H)
    paired = np.concatenate([left_img, right_img], axis=1)
    return RenderedPair(
        paired_image=paired,
        left_half=paired[:, :W].copy(),
        right_half=paired[:, W:].copy(),
    )


def render_pair(p: PairSpec, W: int, H: int) -> RenderedPair:
    """Render a learning pair; deterministic per the module contract."""
    return render_two(p.left, p.right, W, H)


def render_test_pair(tp: TestPair, W: int, H: int) -> RenderedTestPair:
    rp = render_two(tp.left, tp.right, W, H)
    return RenderedTestPair(
        left_image=rp.left_half,
        right_image=rp.right_half,
        left_is_member=tp.left_is_member,
        right_is_member=tp.right_is_member,
    )


def foreground_bbox(img: np.ndarray) -> tuple[int, int, int, int]:
    """Bounding box (y0, y1, x0, x1) of non-background pixels, inclusive-exclusive."""
    fg = np.any(img != np.array(BACKGROUND_RGB, dtype=np.uint8), axis=2)
    ys, xs = np.nonzero(fg)
    if ys.size == 0:
        return (0, 0, 0, 0)
    return (int(ys.min()), int(ys.max()) + 1, int(xs.min()), int(xs.max()) + 1)
