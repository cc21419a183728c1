"""Deterministic SVG generation of the whole profile drawing.

Geometry is stored in natural coordinates and mapped through two
independent scales (horizontal 1:500..1:1500, vertical 1:100..1:500),
so circles become ellipses and vertical exaggeration is the normal state
of affairs.  Rendering the same profile twice yields identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import datatable, linkage
from .model import (
    AboveGroundKind,
    Kind,
    LineKind,
    NaturalPoint,
    PipelineKind,
    Profile,
    ProfileError,
    SectionKind,
    SurfaceRole,
    UtilitySection,
    axis_x_of,
    DIAMETER_GLYPH,
    DIAMETER_TOKEN,
    validate,
)
from .svgdoc import DASHED, DASH_DOT, MAIN, THIN, SvgDoc, palette_color

ROW_HEIGHT = 5.0      # paper mm; GOST fixes this, configurable here
HEADER_WIDTH = 35.0   # paper mm, header column


@dataclass(frozen=True)
class ScalePair:
    scale_h: int
    scale_v: int

    def __post_init__(self):
        if not 500 <= self.scale_h <= 1500:
            raise ProfileError(f"horizontal scale 1:{self.scale_h} outside 1:500..1:1500",
                               rule="scale-h-range")
        if not 100 <= self.scale_v <= 500:
            raise ProfileError(f"vertical scale 1:{self.scale_v} outside 1:100..1:500",
                               rule="scale-v-range")


@dataclass(frozen=True)
class PaperPoint:
    x: float
    y: float


def to_paper(point: NaturalPoint, scales: ScalePair, anchor: PaperPoint) -> PaperPoint:
    """Natural mm to paper mm; paper Y grows downward."""
    return PaperPoint(anchor.x + point.x / scales.scale_h,
                      anchor.y - point.y / scales.scale_v)


def from_paper(point: PaperPoint, scales: ScalePair, anchor: PaperPoint) -> NaturalPoint:
    return NaturalPoint((point.x - anchor.x) * scales.scale_h,
                        (anchor.y - point.y) * scales.scale_v)


@dataclass(frozen=True)
class EllipseSpec:
    center: NaturalPoint
    semi_h: float      # paper mm
    semi_v: float
    stroke: float
    filled: bool


def section_ellipse(section: UtilitySection, scales: ScalePair, r_min: float,
                    cable_drawn_diameter: float = 2.0) -> EllipseSpec:
    """Drawing parameters of a section symbol.

    Pipe sections map their real diameter through both scales; cables and
    ducts use the configured paper diameter as the smaller ellipse extent.
    An over-stretched ellipse gets its short axis raised to ``r_min`` of
    the long one.
    """
    if section.kind == SectionKind.PIPE_SECTION:
        d = float(section.diameter)
        semi_h = d / (2 * scales.scale_h)
        semi_v = d / (2 * scales.scale_v)
    else:
        semi_min = cable_drawn_diameter / 2
        if scales.scale_h >= scales.scale_v:
            semi_h = semi_min
            semi_v = semi_min * scales.scale_h / scales.scale_v
        else:
            semi_v = semi_min
            semi_h = semi_min * scales.scale_v / scales.scale_h
    big = max(semi_h, semi_v)
    semi_h = max(semi_h, r_min * big)
    semi_v = max(semi_v, r_min * big)
    return EllipseSpec(center=section.center, semi_h=semi_h, semi_v=semi_v,
                       stroke=THIN, filled=section.kind == SectionKind.CABLE_SECTION)


def casing_ellipse_semis(diameter: float, scales: ScalePair, r_min: float) -> tuple[float, float]:
    semi_h = diameter / (2 * scales.scale_h)
    semi_v = diameter / (2 * scales.scale_v)
    big = max(semi_h, semi_v)
    return max(semi_h, r_min * big), max(semi_v, r_min * big)


def _split_excluding(points: list[NaturalPoint], gaps) -> list[list[NaturalPoint]]:
    """Sub-chains of a polyline outside the given disjoint sorted intervals."""
    runs: list[list[NaturalPoint]] = []
    current = list(points)
    for gap in gaps:
        before, after = _cut_chain(current, gap.x_lo, gap.x_hi)
        if len(before) >= 2:
            runs.append(before)
        current = after
        if len(current) < 2:
            current = []
            break
    if len(current) >= 2:
        runs.append(current)
    return runs


def _cut_chain(points: list[NaturalPoint], lo: float, hi: float):
    """Split a chain at [lo, hi]: returns (part left of lo, part right of hi)."""
    if not points:
        return [], []
    left = [p for p in points if p.x < lo]
    if left and left[-1].x < lo <= points[-1].x:
        try:
            left.append(NaturalPoint(lo, datatable.elevation_at(_as_line(points), lo)))
        except ProfileError:
            pass
    right = [p for p in points if p.x > hi]
    if right and points[0].x <= hi < right[0].x:
        try:
            right.insert(0, NaturalPoint(hi, datatable.elevation_at(_as_line(points), hi)))
        except ProfileError:
            pass
    return left, right


def _as_line(points: list[NaturalPoint]):
    from .model import Polyline
    return Polyline(points=points, color=0)


class _Renderer:
    def __init__(self, profile: Profile):
        self.p = profile
        s = profile.settings
        self.scales = ScalePair(s.build.scale_h, s.build.scale_v)
        self.anchor = PaperPoint(0.0, 0.0)
        self.doc = SvgDoc()
        self.table = datatable.build_table(profile)

        xs: list[float] = [s.table.top_right_of_header.x]
        for role in SurfaceRole:
            line = profile.surfaces.get(role)
            if line is not None:
                xs += [line.x_min, line.x_max]
        for pipe in profile.pipes.values():
            xs += [pipe.axis.x_min, pipe.axis.x_max]
        for ref, _ in profile.iter_objects():
            if ref.kind in (Kind.ABOVE_GROUND, Kind.SECTION, Kind.TURN_POINT,
                            Kind.WELL, Kind.CASING):
                xs.append(axis_x_of(profile, ref))
        self.x_lo, self.x_hi = (min(xs), max(xs)) if xs else (0.0, 0.0)

        top = self.mp(s.table.top_right_of_header)
        self.table_top = top.y
        self.table_right_of_header = top.x
        body_min = 0.0 if s.table.has_header else s.table.min_headerless_length / self.scales.scale_h
        self.body_right = max(self.mx(self.x_hi), top.x + body_min)
        self.table_left = top.x - (HEADER_WIDTH if s.table.has_header else 0.0)
        self.table_bottom = top.y + ROW_HEIGHT * len(datatable.ROW_LABELS)

    # coordinate helpers -----------------------------------------------------
    def mp(self, p: NaturalPoint) -> PaperPoint:
        return to_paper(p, self.scales, self.anchor)

    def mx(self, x: float) -> float:
        return self.anchor.x + x / self.scales.scale_h

    def my(self, y: float) -> float:
        return self.anchor.y - y / self.scales.scale_v

    def ground_y(self, x: float) -> float:
        surface = self.p.surfaces.project_surface
        if surface is not None and surface.covers(x):
            return surface.y_at(x)
        return self.p.settings.build.conditional_ground_level

    def casing_axis_y(self, casing) -> float:
        pipe = linkage.pipe_under_casing(self.p, casing)
        if pipe is None:
            return self.p.settings.build.conditional_pipe_bottom_level
        return pipe.axis.y_at(casing.center_x)

    def object_anchor_elevation(self, ref) -> float:
        obj = self.p.resolve(ref)
        if ref.kind == Kind.SECTION:
            return obj.center.y
        if ref.kind == Kind.WELL:
            return linkage.well_extents(self.p, obj).top
        if ref.kind == Kind.CASING:
            return self.casing_axis_y(obj)
        return self.ground_y(axis_x_of(self.p, ref))

    # drawing passes ----------------------------------------------------------
    def render(self) -> bytes:
        self.draw_aux_scale()
        self.draw_surfaces()
        self.draw_sections()
        self.draw_pipes()
        self.draw_wells()
        self.draw_casings()
        self.draw_texts_and_leaders()
        self.draw_dimensions()
        self.draw_elevation_marks()
        self.draw_table()
        self.draw_scale_designation()
        return self.doc.to_bytes()

    def draw_aux_scale(self) -> None:
        aux = self.p.settings.aux_scale
        if not aux.enabled:
            return
        build = self.p.settings.build
        top_level = build.conditional_ground_level
        bottom_level = math.floor(build.conditional_pipe_bottom_level / aux.division) \
            * aux.division
        x = self.table_left - 8.0
        color = palette_color(aux.color)
        self.doc.line(x, self.my(top_level), x, self.my(bottom_level), color, THIN)
        level = bottom_level
        while level <= top_level:
            y = self.my(level)
            self.doc.line(x, y, x + 2.0, y, color, THIN)
            self.doc.text(x - 1.0, y + aux.font.height / 3,
                          datatable.format_m(level), aux.font.height, color,
                          anchor="end", italic=aux.font.slant)
            level += aux.division

    def draw_surfaces(self) -> None:
        colors = self.p.settings.build.surface_colors
        gw = self.p.surfaces.groundwater
        if gw is not None:
            self.doc.polyline([(self.mx(pt.x), self.my(pt.y)) for pt in gw.points],
                              palette_color(colors.groundwater), THIN, DASH_DOT)
        nat = self.p.surfaces.natural_surface
        if nat is not None:
            self.doc.polyline([(self.mx(pt.x), self.my(pt.y)) for pt in nat.points],
                              palette_color(colors.natural), THIN, DASHED)
        proj = self.p.surfaces.project_surface
        if proj is not None:
            gaps = linkage.embed_cut_intervals(self.p)
            for run in _split_excluding(proj.points, gaps):
                self.doc.polyline([(self.mx(pt.x), self.my(pt.y)) for pt in run],
                                  palette_color(colors.project), THIN)
        for oid in sorted(self.p.above_ground):
            self.draw_above_ground(self.p.above_ground[oid])

    def draw_above_ground(self, obj) -> None:
        color = palette_color(obj.color)
        y0 = self.my(self.ground_y(obj.axis_x))
        x_lo = self.mx(obj.axis_x - obj.width / 2)
        x_hi = self.mx(obj.axis_x + obj.width / 2)
        if obj.kind == AboveGroundKind.ROAD:
            self.doc.line(x_lo, y0, x_hi, y0, color, MAIN)
            self.doc.line(x_lo, y0 - 1.0, x_hi, y0 - 1.0, color, THIN)
        elif obj.kind == AboveGroundKind.RAILWAY:
            self.doc.rect(x_lo, y0 - 2.0, x_hi - x_lo, 2.0, color, THIN)
            step = 1.5
            x = x_lo + step
            while x < x_hi:
                self.doc.line(x - step, y0, x, y0 - 2.0, color, THIN)
                x += step
        else:
            h = (obj.height or 0) / self.scales.scale_v
            self.doc.line(x_lo, y0, x_lo, y0 - h, color, MAIN)
            self.doc.line(x_hi, y0, x_hi, y0 - h, color, MAIN)
            self.doc.line(x_lo, y0 - h, x_hi, y0 - h, color, MAIN)
            if obj.kind == AboveGroundKind.TRESTLE2:
                self.doc.line(x_lo, y0 - h + 0.8, x_hi, y0 - h + 0.8, color, MAIN)
        if obj.label:
            self.doc.text(self.mx(obj.axis_x) + 0.9, self.table_top - 1.0, obj.label,
                          self.p.settings.build.font.height, color, rotate=-90.0,
                          italic=self.p.settings.build.font.slant)

    def draw_sections(self) -> None:
        s = self.p.settings
        r_min = s.build.min_ellipse_axis_ratio
        for sid in sorted(self.p.sections):
            section = self.p.sections[sid]
            spec = section_ellipse(section, self.scales, r_min,
                                   s.sections.cable_drawn_diameter)
            c = self.mp(spec.center)
            color = palette_color(section.color)
            fill = color if spec.filled else "none"
            self.doc.ellipse(c.x, c.y, spec.semi_h, spec.semi_v, color, spec.stroke,
                             fill=fill)
            if section.kind == SectionKind.TELEPHONE_DUCT:
                self.doc.dot(c.x, c.y, s.sections.duct_dot_diameter / 2, color)
            if section.casing is not None:
                rh, rv = casing_ellipse_semis(section.casing.diameter, self.scales, r_min)
                self.doc.ellipse(c.x, c.y, rh, rv, color, THIN)
            self.draw_section_symbol(section, c.x, color)

    def draw_section_symbol(self, section, x: float, color: str) -> None:
        """Over-table designation mark of a crossing section."""
        s = self.p.settings.sections
        y = self.table_top - 1.5
        if section.kind == SectionKind.PIPE_SECTION:
            half = s.pipe_symbol_length / 2
            self.doc.line(x - half, y, x + half, y, color, MAIN)
        elif section.kind == SectionKind.CABLE_SECTION:
            half = s.cable_symbol_length / 2
            self.doc.line(x - half, y, x + half, y, color, THIN)
            self.doc.polyline([(x + half - s.arrow_leg, y - s.arrow_span / 2),
                               (x + half, y), (x + half - s.arrow_leg, y + s.arrow_span / 2)],
                              color, THIN)
        else:
            half = s.duct_symbol_length / 2
            self.doc.line(x - half, y, x + half, y, color, THIN)
            self.doc.dot(x, y, s.duct_dot_diameter / 2, color)
        if section.label:
            self.doc.text(x + 0.9, y - 1.0, section.label,
                          self.p.settings.build.font.height, color, rotate=-90.0)

    def _well_spans(self, pipe) -> list:
        spans = []
        for wid in sorted(self.p.wells):
            well = self.p.wells[wid]
            if pipe.axis.covers(well.axis_x):
                spans.append(linkage.CutInterval(well.axis_x - well.width / 2,
                                                 well.axis_x + well.width / 2, (wid,)))
        spans.sort(key=lambda iv: (iv.x_lo, iv.x_hi))
        merged = []
        for iv in spans:
            if merged and iv.x_lo <= merged[-1].x_hi:
                last = merged[-1]
                merged[-1] = linkage.CutInterval(last.x_lo, max(last.x_hi, iv.x_hi),
                                                 last.ids + iv.ids)
            else:
                merged.append(iv)
        return merged

    def draw_pipes(self) -> None:
        sewer = self.p.settings.build.pipeline_kind == PipelineKind.SEWER
        for pid in sorted(self.p.pipes):
            pipe = self.p.pipes[pid]
            d = linkage.pipe_outer_diameter(self.p, pipe)
            color = palette_color(pipe.color)
            for sign in (+1.0, -1.0):
                offset_points = [NaturalPoint(pt.x, pt.y + sign * d / 2)
                                 for pt in pipe.axis.points]
                chains = ([offset_points] if not sewer
                          else _split_excluding(offset_points, self._well_spans(pipe)))
                for chain in chains:
                    self.doc.polyline([(self.mx(pt.x), self.my(pt.y)) for pt in chain],
                                      color, MAIN)
            if sewer:
                for iv in self._well_spans(pipe):
                    for wid in iv.ids:
                        axis_x = self.p.wells[wid].axis_x
                        if pipe.axis.covers(axis_x):
                            y = self.my(linkage.pipe_bottom_at(self.p, pipe, axis_x))
                            x = self.mx(axis_x)
                            self.doc.line(x, y, x, y - 1.5, color, MAIN)

    def draw_wells(self) -> None:
        for wid in sorted(self.p.wells):
            well = self.p.wells[wid]
            extents = linkage.well_extents(self.p, well)
            x_lo = self.mx(well.axis_x - well.width / 2)
            x_hi = self.mx(well.axis_x + well.width / 2)
            y_top = self.my(extents.top)
            y_bot = self.my(extents.bottom)
            color = palette_color(well.color)
            width = MAIN if well.line_kind == LineKind.SOLID_MAIN else THIN
            self.doc.rect(x_lo, y_top, x_hi - x_lo, y_bot - y_top, color, width)
            font = self.p.settings.build.font
            self.doc.text(self.mx(well.axis_x), y_top - well.depth_label_offset,
                          datatable.format_m(extents.depth), font.height, color,
                          anchor="middle", italic=font.slant)

    def draw_casings(self) -> None:
        r_min = self.p.settings.build.min_ellipse_axis_ratio
        for cid in sorted(self.p.casings):
            casing = self.p.casings[cid]
            d = linkage.casing_drawn_diameter(self.p, casing)
            y_axis = self.casing_axis_y(casing)
            color = palette_color(casing.color)
            x_lo = self.mx(casing.center_x - casing.length / 2)
            x_hi = self.mx(casing.center_x + casing.length / 2)
            semi_v = casing_ellipse_semis(d, self.scales, r_min)[1]
            y_c = self.my(y_axis)
            self.doc.rect(x_lo, y_c - semi_v, x_hi - x_lo, 2 * semi_v, color, THIN)

    def draw_texts_and_leaders(self) -> None:
        for tid in sorted(self.p.texts):
            text = self.p.texts[tid]
            origin = self.mp(text.origin)
            color = palette_color(text.color)
            for i, line in enumerate(text.lines):
                self.doc.text(origin.x, origin.y + i * text.line_step,
                              line.replace(DIAMETER_TOKEN, DIAMETER_GLYPH),
                              text.font.height, color, italic=text.font.slant)
        for lid in sorted(self.p.leaders):
            leader = self.p.leaders[lid]
            text = self.p.resolve(leader.text_ref)
            color = palette_color(text.color)
            anchor = self.leader_anchor(leader.target)
            tip = PaperPoint(anchor.x + leader.offset.dx, anchor.y - leader.offset.dy)
            origin = self.mp(text.origin)
            self.doc.line(origin.x, origin.y, tip.x, tip.y, color, THIN)
            self.doc.dot(tip.x, tip.y, 0.4, color)

    def leader_anchor(self, target) -> PaperPoint:
        obj = self.p.resolve(target)
        if target.kind == Kind.SECTION:
            return self.mp(obj.center)
        if target.kind == Kind.CASING:
            return PaperPoint(self.mx(obj.center_x), self.my(self.casing_axis_y(obj)))
        extents = linkage.well_extents(self.p, obj)
        return PaperPoint(self.mx(obj.axis_x), self.my(extents.bottom))

    def draw_dimensions(self) -> None:
        s = self.p.settings.dimensions
        color = palette_color(s.color)
        half_tick = s.tick_length / 2 * math.cos(math.pi / 4)
        for did in sorted(self.p.dimensions):
            dim = self.p.dimensions[did]
            dim_y = self.table_top - dim.dim_line_offset
            xs = []
            for ref in dim.refs:
                x = self.mx(axis_x_of(self.p, ref))
                xs.append(x)
                start_y = self.my(self.object_anchor_elevation(ref))
                self.doc.line(x, start_y, x, dim_y, color, THIN)
                self.doc.line(x - half_tick, dim_y + half_tick,
                              x + half_tick, dim_y - half_tick, color, MAIN)
            xs.sort()
            self.doc.line(xs[0], dim_y, xs[-1], dim_y, color, THIN)
            for i, value in enumerate(datatable.dimension_texts(self.p, dim)):
                mid = (xs[i] + xs[i + 1]) / 2
                self.doc.text(mid, dim_y - dim.text_offsets[i], value,
                              s.font.height, color, anchor="middle",
                              italic=s.font.slant)

    def draw_elevation_marks(self) -> None:
        s = self.p.settings.elevation_marks
        color = palette_color(s.color)
        width = MAIN if s.line_kind == LineKind.SOLID_MAIN else THIN
        leg = s.arrow_leg * math.cos(math.pi / 4)
        for mid in sorted(self.p.elevation_marks):
            mark = self.p.elevation_marks[mid]
            section = self.p.resolve(mark.section_ref)
            base = self.mp(section.center)
            tip = PaperPoint(base.x, base.y - mark.arrow_shift)
            self.doc.line(base.x, base.y, tip.x, tip.y, color, THIN)
            self.doc.line(tip.x - leg, tip.y - leg, tip.x, tip.y, color, width)
            self.doc.line(tip.x, tip.y, tip.x + leg, tip.y - leg, color, width)
            shelf_y = tip.y - mark.shelf_lift
            self.doc.line(tip.x, tip.y, tip.x, shelf_y, color, width)
            direction = 1.0 if mark.shelf_dir.name == "RIGHT" else -1.0
            shelf_end = tip.x + direction * 8.0
            self.doc.line(tip.x, shelf_y, shelf_end, shelf_y, color, width)
            anchor = "start" if direction > 0 else "end"
            self.doc.text(tip.x + direction * 1.0, shelf_y - 0.7,
                          datatable.format_m(section.center.y), s.font.height,
                          color, anchor=anchor, italic=s.font.slant)

    # table ----------------------------------------------------------------
    def draw_table(self) -> None:
        s = self.p.settings.table
        font = s.font
        left, right = self.table_left, self.body_right
        top, bottom = self.table_top, self.table_bottom
        rows = len(datatable.ROW_LABELS)
        for i in range(rows + 1):
            y = top + i * ROW_HEIGHT
            self.doc.line(left, y, right, y, "#000000", MAIN)
        self.doc.line(left, top, left, bottom, "#000000", MAIN)
        self.doc.line(right, top, right, bottom, "#000000", MAIN)
        if s.has_header:
            self.doc.line(self.table_right_of_header, top,
                          self.table_right_of_header, bottom, "#000000", MAIN)
            for i, label in enumerate(datatable.ROW_LABELS):
                self.doc.text(left + 1.0, top + (i + 1) * ROW_HEIGHT - 1.5, label,
                              min(font.height, 1.8), "#000000", italic=font.slant)
        self.fill_table_rows()

    def _row_text_y(self, row: int) -> float:
        return self.table_top + (row + 1) * ROW_HEIGHT - 1.2

    def _rotated_cell(self, row: int, x: float, value: str, font) -> None:
        self.doc.text(self.mx(x) + font.height / 3, self._row_text_y(row), value,
                      font.height, "#000000", rotate=-90.0, italic=font.slant)

    def fill_table_rows(self) -> None:
        table = self.table
        font = self.p.settings.table.font
        for x in sorted(table.pipe_bottom):
            self._rotated_cell(0, x, table.pipe_bottom[x], font)
        for x in sorted(table.project_elev):
            self._rotated_cell(1, x, table.project_elev[x], font)
        for x in sorted(table.natural_elev):
            self._rotated_cell(2, x, table.natural_elev[x], font)

        for cell in table.pipe_designation:
            mid = (self.mx(cell.x_lo) + self.mx(cell.x_hi)) / 2
            self.doc.text(mid, self._row_text_y(3), cell.text, font.height,
                          "#000000", anchor="middle", italic=font.slant)

        if table.base:
            mid = (self.table_right_of_header + self.body_right) / 2
            self.doc.text(mid, self._row_text_y(4), table.base, font.height,
                          "#000000", anchor="middle", italic=font.slant)

        row5_top = self.table_top + 5 * ROW_HEIGHT
        for cell in table.length_slope:
            x_lo, x_hi = self.mx(cell.x_lo), self.mx(cell.x_hi)
            self.doc.line(x_lo, row5_top, x_lo, row5_top + ROW_HEIGHT, "#000000", THIN)
            self.doc.line(x_hi, row5_top, x_hi, row5_top + ROW_HEIGHT, "#000000", THIN)
            self.doc.line(x_lo, row5_top + ROW_HEIGHT, x_hi, row5_top, "#000000", THIN)
            mid = (x_lo + x_hi) / 2
            self.doc.text(mid - 0.8, row5_top + 2.0, cell.length_text, font.height,
                          "#000000", anchor="middle", italic=font.slant)
            self.doc.text(mid + 0.8, row5_top + ROW_HEIGHT - 0.8, cell.slope_text,
                          font.height, "#000000", anchor="middle", italic=font.slant)

        row6_top = self.table_top + 6 * ROW_HEIGHT
        for cell in table.distance:
            x_lo, x_hi = self.mx(cell.x_lo), self.mx(cell.x_hi)
            for x in (x_lo, x_hi):
                self.doc.line(x, row6_top, x, row6_top + ROW_HEIGHT, "#000000", THIN)
            self.doc.text((x_lo + x_hi) / 2, self._row_text_y(6), cell.text,
                          font.height, "#000000", anchor="middle", italic=font.slant)

        for x in sorted(table.designations):
            self.doc.text(self.mx(x), self._row_text_y(7), table.designations[x],
                          font.height, "#000000", anchor="middle", italic=font.slant)

        for tid in sorted(self.p.turn_points):
            tp = self.p.turn_points[tid]
            if tp.over_table_text:
                self.doc.text(self.mx(tp.x) + 0.9, self.table_top - 1.0,
                              tp.over_table_text,
                              self.p.settings.build.font.height,
                              palette_color(self.p.settings.turn_point_color),
                              rotate=-90.0)

    def draw_scale_designation(self) -> None:
        build = self.p.settings.build
        label = f"1:{build.scale_h} / 1:{build.scale_v}"
        if self.x_hi > self.x_lo:
            x = (self.mx(self.x_lo) + self.mx(self.x_hi)) / 2
        else:
            x = self.table_right_of_header
        font = self.p.settings.table.font
        self.doc.text(x, self.my(build.conditional_ground_level), label,
                      font.height, "#000000", anchor="middle", italic=font.slant)


def render_svg(profile: Profile) -> bytes:
    """The complete drawing as SVG bytes; byte-deterministic for equal input."""
    violations = validate(profile)
    if violations:
        raise ProfileError(f"cannot render invalid profile: {violations[0]}",
                           rule="invalid-profile")
    return _Renderer(profile).render()


__all__ = ["EllipseSpec", "HEADER_WIDTH", "PaperPoint", "ROW_HEIGHT", "ScalePair",
           "casing_ellipse_semis", "from_paper", "render_svg", "section_ellipse",
           "to_paper"]
