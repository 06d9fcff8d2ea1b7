"""Deterministic renderings of slipfaces: heatmaps and profile fans.

Profiles superimpose the graphs y = s(x, b), one curve per b in the chosen
range; heatmaps paint the raw values over a box.  Output is plain text in
all three formats (ascii art, ASCII-PGM, SVG with integer coordinates and no
fonts), so byte equality against golden files is meaningful on every
platform.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .slipface import Slipface, sf_eval_grid

__all__ = ["RenderSpec", "render"]

_FORMATS = ("ascii", "svg", "pgm")
_MODES = ("heatmap", "profiles")

_PALETTE = (
    "#1b6ca8",
    "#c0392b",
    "#27ae60",
    "#8e44ad",
    "#d35400",
    "#16a085",
    "#7f8c8d",
    "#2c3e50",
)


@dataclass(frozen=True)
class RenderSpec:
    a_lo: int
    a_hi: int
    b_lo: int
    b_hi: int
    fmt: str = "ascii"
    mode: str = "heatmap"

    def __post_init__(self):
        if self.a_hi < self.a_lo or self.b_hi < self.b_lo:
            raise ValueError("render ranges must be nonempty")
        if self.fmt not in _FORMATS:
            raise ValueError(f"format must be one of {_FORMATS}")
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}")


def render(s: Slipface, spec: RenderSpec) -> str:
    g = sf_eval_grid(s, spec.a_lo, spec.a_hi, spec.b_lo, spec.b_hi)
    fn = _DISPATCH[(spec.fmt, spec.mode)]
    return fn(g, spec)


def _ascii_heatmap(g: np.ndarray, spec: RenderSpec) -> str:
    wv = max(len(str(int(v))) for v in (g.max(), g.min()))
    wa = max(len(str(spec.a_lo)), len(str(spec.a_hi)))
    lines = [f"heatmap a={spec.a_lo}..{spec.a_hi} b={spec.b_lo}..{spec.b_hi}"]
    for i in range(g.shape[0] - 1, -1, -1):
        a = spec.a_lo + i
        row = " ".join(f"{int(v):>{wv}}" for v in g[i])
        lines.append(f"{a:>{wa}} | {row}")
    return "\n".join(lines) + "\n"


def _profile_canvas(g: np.ndarray, spec: RenderSpec):
    # canvas[y][x] = set of b-indices whose curve passes through (x, y)
    ymax = int(g.max())
    nx = g.shape[0]
    cells: dict[tuple[int, int], list[int]] = {}
    for j in range(g.shape[1]):
        for i in range(nx):
            y = int(g[i, j])
            cells.setdefault((i, y), []).append(j)
    return ymax, cells


def _ascii_profiles(g: np.ndarray, spec: RenderSpec) -> str:
    ymax, cells = _profile_canvas(g, spec)
    wy = len(str(ymax))
    lines = [f"profiles a={spec.a_lo}..{spec.a_hi} b={spec.b_lo}..{spec.b_hi}"]
    for y in range(ymax, -1, -1):
        chars = []
        for i in range(g.shape[0]):
            js = cells.get((i, y))
            if js is None:
                chars.append(" ")
            elif len(js) == 1:
                chars.append(str((spec.b_lo + js[0]) % 10))
            else:
                chars.append("*")
        lines.append(f"{y:>{wy}} |" + "".join(chars).rstrip())
    return "\n".join(lines) + "\n"


def _pgm_heatmap(g: np.ndarray, spec: RenderSpec) -> str:
    mx = max(1, int(g.max()))
    lines = ["P2", f"{g.shape[1]} {g.shape[0]}", str(mx)]
    for i in range(g.shape[0] - 1, -1, -1):
        lines.append(" ".join(str(int(v)) for v in g[i]))
    return "\n".join(lines) + "\n"


def _pgm_profiles(g: np.ndarray, spec: RenderSpec) -> str:
    ymax, cells = _profile_canvas(g, spec)
    h, w = ymax + 1, g.shape[0]
    img = [[0] * w for _ in range(h)]
    for (i, y), _ in cells.items():
        img[ymax - y][i] = 1
    lines = ["P2", f"{w} {h}", "1"]
    for row in img:
        lines.append(" ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


_CELL = 10


def _svg_open(w: int, h: int) -> list[str]:
    return [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<rect width="{w}" height="{h}" fill="#ffffff"/>',
    ]


def _svg_heatmap(g: np.ndarray, spec: RenderSpec) -> str:
    na, nb = g.shape
    mx = max(1, int(g.max()))
    out = _svg_open(nb * _CELL, na * _CELL)
    for i in range(na - 1, -1, -1):
        y = (na - 1 - i) * _CELL
        for j in range(nb):
            # dark for large values
            lvl = 255 - int(g[i, j]) * 255 // mx
            out.append(
                f'<rect x="{j * _CELL}" y="{y}" width="{_CELL}" '
                f'height="{_CELL}" fill="rgb({lvl},{lvl},{lvl})"/>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _svg_profiles(g: np.ndarray, spec: RenderSpec) -> str:
    na, nb = g.shape
    ymax = int(g.max())
    w = max(1, (na - 1) * _CELL)
    h = max(1, ymax * _CELL)
    out = _svg_open(w, h)
    for j in range(nb):
        pts = " ".join(
            f"{i * _CELL},{(ymax - int(g[i, j])) * _CELL}" for i in range(na)
        )
        color = _PALETTE[(spec.b_lo + j) % len(_PALETTE)]
        out.append(
            f'<polyline points="{pts}" fill="none" stroke="{color}" '
            f'stroke-width="2"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


_DISPATCH = {
    ("ascii", "heatmap"): _ascii_heatmap,
    ("ascii", "profiles"): _ascii_profiles,
    ("pgm", "heatmap"): _pgm_heatmap,
    ("pgm", "profiles"): _pgm_profiles,
    ("svg", "heatmap"): _svg_heatmap,
    ("svg", "profiles"): _svg_profiles,
}
