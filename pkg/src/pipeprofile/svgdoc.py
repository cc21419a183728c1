"""Minimal deterministic SVG 1.1 writer.

Elements are emitted in call order with a fixed attribute order and fixed
coordinate formatting, so equal drawing programs produce byte-identical
documents.  Coordinates are paper millimeters (the viewBox unit is mm).
"""

from __future__ import annotations

from xml.sax.saxutils import escape

#: Palette indices 0-15; anything else renders black.
PALETTE = (
    "#000000", "#ff0000", "#a08000", "#008000", "#008080", "#0000ff",
    "#800080", "#404040", "#808080", "#b0b0b0", "#800000", "#c06000",
    "#804000", "#004000", "#000080", "#400080",
)

THIN = 0.25
MAIN = 0.6

DASHED = "3 1.5"
DASH_DOT = "6 1.2 0.6 1.2"


def palette_color(index: int) -> str:
    return PALETTE[index] if 0 <= index < len(PALETTE) else PALETTE[0]


def fmt(v: float) -> str:
    text = f"{v:.3f}"
    return "0.000" if text == "-0.000" else text


class SvgDoc:
    def __init__(self):
        self.elements: list[str] = []
        self.min_x = self.min_y = self.max_x = self.max_y = None

    def _cover(self, x: float, y: float) -> None:
        if self.min_x is None:
            self.min_x = self.max_x = x
            self.min_y = self.max_y = y
            return
        self.min_x = min(self.min_x, x)
        self.max_x = max(self.max_x, x)
        self.min_y = min(self.min_y, y)
        self.max_y = max(self.max_y, y)

    def _stroke(self, color: str, width: float, dash: str | None) -> str:
        style = f'stroke="{color}" stroke-width="{fmt(width)}"'
        if dash:
            style += f' stroke-dasharray="{dash}"'
        return style

    def line(self, x1: float, y1: float, x2: float, y2: float,
             color: str = "#000000", width: float = THIN,
             dash: str | None = None) -> None:
        self._cover(x1, y1)
        self._cover(x2, y2)
        self.elements.append(
            f'<line x1="{fmt(x1)}" y1="{fmt(y1)}" x2="{fmt(x2)}" y2="{fmt(y2)}" '
            f'{self._stroke(color, width, dash)}/>')

    def polyline(self, points, color: str = "#000000", width: float = THIN,
                 dash: str | None = None) -> None:
        if len(points) < 2:
            return
        for x, y in points:
            self._cover(x, y)
        coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)
        self.elements.append(
            f'<polyline points="{coords}" fill="none" '
            f'{self._stroke(color, width, dash)}/>')

    def polygon(self, points, color: str = "#000000", width: float = THIN,
                fill: str = "none") -> None:
        for x, y in points:
            self._cover(x, y)
        coords = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in points)
        self.elements.append(
            f'<polygon points="{coords}" fill="{fill}" '
            f'{self._stroke(color, width, None)}/>')

    def rect(self, x: float, y: float, w: float, h: float,
             color: str = "#000000", width: float = THIN,
             fill: str = "none") -> None:
        self._cover(x, y)
        self._cover(x + w, y + h)
        self.elements.append(
            f'<rect x="{fmt(x)}" y="{fmt(y)}" width="{fmt(w)}" height="{fmt(h)}" '
            f'fill="{fill}" {self._stroke(color, width, None)}/>')

    def ellipse(self, cx: float, cy: float, rx: float, ry: float,
                color: str = "#000000", width: float = THIN,
                fill: str = "none") -> None:
        self._cover(cx - rx, cy - ry)
        self._cover(cx + rx, cy + ry)
        self.elements.append(
            f'<ellipse cx="{fmt(cx)}" cy="{fmt(cy)}" rx="{fmt(rx)}" ry="{fmt(ry)}" '
            f'fill="{fill}" {self._stroke(color, width, None)}/>')

    def dot(self, cx: float, cy: float, r: float, color: str = "#000000") -> None:
        self._cover(cx - r, cy - r)
        self._cover(cx + r, cy + r)
        self.elements.append(
            f'<circle cx="{fmt(cx)}" cy="{fmt(cy)}" r="{fmt(r)}" fill="{color}"/>')

    def text(self, x: float, y: float, content: str, size: float,
             color: str = "#000000", anchor: str = "start",
             rotate: float | None = None, italic: bool = False) -> None:
        # crude extent estimate, good enough for the viewBox
        w = len(content) * size * 0.65
        if rotate is None:
            x0 = {"start": x, "middle": x - w / 2, "end": x - w}[anchor]
            self._cover(x0, y - size)
            self._cover(x0 + w, y)
        else:
            self._cover(x - size, y - w)
            self._cover(x + size, y + w)
        attrs = f'x="{fmt(x)}" y="{fmt(y)}" font-size="{fmt(size)}" fill="{color}"'
        attrs += ' font-family="sans-serif"'
        if anchor != "start":
            attrs += f' text-anchor="{anchor}"'
        if italic:
            attrs += ' font-style="italic"'
        if rotate is not None:
            attrs += f' transform="rotate({fmt(rotate)} {fmt(x)} {fmt(y)})"'
        self.elements.append(f"<text {attrs}>{escape(content)}</text>")

    def to_bytes(self, margin: float = 10.0) -> bytes:
        if self.min_x is None:
            self.min_x = self.min_y = 0.0
            self.max_x = self.max_y = 1.0
        x0 = self.min_x - margin
        y0 = self.min_y - margin
        w = (self.max_x - self.min_x) + 2 * margin
        h = (self.max_y - self.min_y) + 2 * margin
        head = (
            '<?xml version="1.0" encoding="UTF-8"?>\n'
            f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{fmt(w)}mm" height="{fmt(h)}mm" '
            f'viewBox="{fmt(x0)} {fmt(y0)} {fmt(w)} {fmt(h)}">\n'
        )
        body = "\n".join(self.elements)
        return (head + body + "\n</svg>\n").encode("utf-8")


__all__ = ["DASHED", "DASH_DOT", "MAIN", "PALETTE", "SvgDoc", "THIN", "fmt",
           "palette_color"]
