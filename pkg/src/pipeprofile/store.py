"""Compact binary prototype files, catalogs, and BOM export.

A prototype file stores the parameter set only; the drawing is always
regenerated from it.  Layout (little-endian throughout):

    "PNS1" magic, u16 version, then tagged sections
    section = u8 tag, u32 payload length, payload

Unknown tags are skipped by length, which is the whole versioning story.
Settings and defaults are written as deltas against the factory values,
group by group, so a fresh profile costs a few dozen bytes.  Strings are
u16-length-prefixed UTF-8; coordinates are f64 so that edited geometry
round-trips exactly; catalog-style dimensions (diameters, walls, widths)
are i32 whole millimeters.
"""

from __future__ import annotations

import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .model import (
    AboveGroundKind,
    AboveGroundObject,
    Casing,
    CasingLink,
    CasingLinkKind,
    ChainDimension,
    ElevationMark,
    FontSetting,
    Kind,
    Leader,
    LineKind,
    NaturalPoint,
    ObjectRef,
    PaperOffset,
    Pipe,
    PipeSpecRecord,
    PipeType,
    PipelineKind,
    Polyline,
    Profile,
    ProfileError,
    SectionCasing,
    SectionKind,
    ShelfDir,
    SlopeUnit,
    SurfaceRole,
    SurfaceSet,
    TextNote,
    TurnPoint,
    UtilitySection,
    Well,
    WellKind,
    factory_defaults,
    factory_settings,
    validate,
)

MAGIC = b"PNS1"
FORMAT_VERSION = 1

SEC_SETTINGS = 1
SEC_DEFAULTS = 2
SEC_MISC = 3
SEC_ABOVE_GROUND = 4
SEC_SECTIONS = 5
SEC_TURN_POINTS = 6
SEC_WELLS = 7
SEC_CASINGS = 8
SEC_PIPE_TYPES = 9
SEC_PIPES = 10
SEC_TEXTS = 11
SEC_LEADERS = 12
SEC_DIMENSIONS = 13
SEC_ELEVATION_MARKS = 14

_SPEC_FIELDS = ("position_designation", "designation", "unit_mass", "note",
                "type_mark_doc", "name_and_characteristic", "unit_of_measure",
                "manufacturer", "product_code")


class StoreError(ProfileError):
    rule = "store-error"


class BadMagicError(StoreError):
    rule = "bad-magic"


class UnsupportedVersionError(StoreError):
    rule = "unsupported-version"


class TruncatedError(StoreError):
    rule = "truncated"

    def __init__(self, offset: int, want: int):
        super().__init__(f"file truncated at offset {offset} (needed {want} bytes)")
        self.offset = offset


class Writer:
    def __init__(self):
        self.buf = bytearray()

    def u8(self, v: int):
        self.buf += struct.pack("<B", v)

    def u16(self, v: int):
        self.buf += struct.pack("<H", v)

    def u32(self, v: int):
        self.buf += struct.pack("<I", v)

    def i32(self, v: int):
        self.buf += struct.pack("<i", int(v))

    def f64(self, v: float):
        self.buf += struct.pack("<d", v)

    def flag(self, v: bool):
        self.u8(1 if v else 0)

    def text(self, s: str):
        raw = s.encode("utf-8")
        self.u16(len(raw))
        self.buf += raw

    def point(self, p: NaturalPoint):
        self.f64(p.x)
        self.f64(p.y)

    def font(self, f: FontSetting):
        self.f64(f.height)
        self.f64(f.widening)
        self.flag(f.slant)

    def ref(self, r: ObjectRef):
        self.u8(r.kind.value)
        self.u32(r.id)

    def polyline(self, line: Polyline):
        self.u32(len(line.points))
        for p in line.points:
            self.point(p)
        self.u8(line.color)


class Reader:
    def __init__(self, data: bytes, start: int = 0, end: int | None = None):
        self.data = data
        self.pos = start
        self.end = len(data) if end is None else end

    def _take(self, n: int) -> bytes:
        if self.pos + n > self.end:
            raise TruncatedError(self.pos, n)
        chunk = self.data[self.pos:self.pos + n]
        self.pos += n
        return chunk

    def u8(self) -> int:
        return struct.unpack("<B", self._take(1))[0]

    def u16(self) -> int:
        return struct.unpack("<H", self._take(2))[0]

    def u32(self) -> int:
        return struct.unpack("<I", self._take(4))[0]

    def i32(self) -> int:
        return struct.unpack("<i", self._take(4))[0]

    def f64(self) -> float:
        return struct.unpack("<d", self._take(8))[0]

    def flag(self) -> bool:
        return self.u8() != 0

    def text(self) -> str:
        n = self.u16()
        return self._take(n).decode("utf-8")

    def point(self) -> NaturalPoint:
        return NaturalPoint(self.f64(), self.f64())

    def font(self) -> FontSetting:
        return FontSetting(self.f64(), self.f64(), self.flag())

    def ref(self) -> ObjectRef:
        return ObjectRef(Kind(self.u8()), self.u32())

    def polyline(self) -> Polyline:
        n = self.u32()
        points = [self.point() for _ in range(n)]
        return Polyline(points=points, color=self.u8())

    def exhausted(self) -> bool:
        return self.pos >= self.end


# ---------------------------------------------------------------------------
# Settings and defaults (delta-coded against factory values)
# ---------------------------------------------------------------------------

def _write_settings(w: Writer, profile: Profile) -> None:
    s, base = profile.settings, factory_settings()
    groups = (
        ("table", lambda: _write_table_settings(w, s.table)),
        ("aux_scale", lambda: _write_aux_settings(w, s.aux_scale)),
        ("build", lambda: _write_build_settings(w, s.build)),
        ("sections", lambda: _write_section_settings(w, s.sections)),
        (None, lambda: (w.u8(s.turn_point_color), w.i32(s.conditional_pipe_diameter))),
        ("dimensions", lambda: _write_dim_settings(w, s.dimensions)),
        ("elevation_marks", lambda: _write_mark_settings(w, s.elevation_marks)),
    )
    mask = 0
    for bit, (name, _) in enumerate(groups):
        if name is None:
            differs = (s.turn_point_color != base.turn_point_color
                       or s.conditional_pipe_diameter != base.conditional_pipe_diameter)
        else:
            differs = getattr(s, name) != getattr(base, name)
        if differs:
            mask |= 1 << bit
    w.u8(mask)
    for bit, (_, write) in enumerate(groups):
        if mask & (1 << bit):
            write()


def _read_settings(r: Reader, profile: Profile) -> None:
    s = profile.settings
    mask = r.u8()
    if mask & 1:
        s.table = _read_table_settings(r)
    if mask & 2:
        s.aux_scale = _read_aux_settings(r)
    if mask & 4:
        s.build = _read_build_settings(r)
    if mask & 8:
        s.sections = _read_section_settings(r)
    if mask & 16:
        s.turn_point_color = r.u8()
        s.conditional_pipe_diameter = r.i32()
    if mask & 32:
        s.dimensions = _read_dim_settings(r)
    if mask & 64:
        s.elevation_marks = _read_mark_settings(r)


def _write_table_settings(w, t):
    w.point(t.top_right_of_header)
    w.flag(t.has_header)
    w.i32(t.min_headerless_length)
    w.font(t.font)
    w.u8(t.slope_unit.value)


def _read_table_settings(r):
    from .model import TableSettings
    return TableSettings(r.point(), r.flag(), r.i32(), r.font(), SlopeUnit(r.u8()))


def _write_aux_settings(w, a):
    w.flag(a.enabled)
    w.i32(a.division)
    w.u8(a.color)
    w.font(a.font)


def _read_aux_settings(r):
    from .model import AuxScaleSettings
    return AuxScaleSettings(r.flag(), r.i32(), r.u8(), r.font())


def _write_build_settings(w, b):
    w.u16(b.scale_h)
    w.u16(b.scale_v)
    w.u8(b.pipeline_kind.value)
    w.text(b.base_soil)
    w.f64(b.min_ellipse_axis_ratio)
    w.f64(b.conditional_ground_level)
    w.f64(b.conditional_pipe_bottom_level)
    w.u8(b.surface_colors.project)
    w.u8(b.surface_colors.natural)
    w.u8(b.surface_colors.groundwater)
    w.font(b.font)


def _read_build_settings(r):
    from .model import BuildSettings, SurfaceColors
    return BuildSettings(
        scale_h=r.u16(), scale_v=r.u16(), pipeline_kind=PipelineKind(r.u8()),
        base_soil=r.text(), min_ellipse_axis_ratio=r.f64(),
        conditional_ground_level=r.f64(), conditional_pipe_bottom_level=r.f64(),
        surface_colors=SurfaceColors(r.u8(), r.u8(), r.u8()), font=r.font())


def _write_section_settings(w, c):
    for v in (c.cable_drawn_diameter, c.pipe_symbol_length, c.cable_symbol_length,
              c.duct_symbol_length, c.arrow_leg, c.arrow_span, c.duct_dot_diameter):
        w.f64(v)


def _read_section_settings(r):
    from .model import SectionSymbolSettings
    return SectionSymbolSettings(*(r.f64() for _ in range(7)))


def _write_dim_settings(w, d):
    w.flag(d.has_leader)
    w.flag(d.leader_to_shelf_end)
    w.f64(d.tick_length)
    w.font(d.font)
    w.u8(d.color)


def _read_dim_settings(r):
    from .model import DimensionSettings
    return DimensionSettings(r.flag(), r.flag(), r.f64(), r.font(), r.u8())


def _write_mark_settings(w, m):
    w.u8(m.line_kind.value)
    w.f64(m.arrow_leg)
    w.font(m.font)
    w.u8(m.color)


def _read_mark_settings(r):
    from .model import ElevationMarkSettings
    return ElevationMarkSettings(LineKind(r.u8()), r.f64(), r.font(), r.u8())


def _write_defaults(w: Writer, profile: Profile) -> None:
    d, base = profile.defaults, factory_defaults()
    names = ("above_ground", "section", "well", "casing", "pipe", "text",
             "dimension_text_offset", "elevation_mark")
    mask = 0
    for bit, name in enumerate(names):
        if getattr(d, name) != getattr(base, name):
            mask |= 1 << bit
    w.u8(mask)
    if mask & 1:
        g = d.above_ground
        w.u8(g.kind.value); w.u8(g.color); w.i32(g.width); w.i32(g.height)
    if mask & 2:
        g = d.section
        w.u8(g.kind.value); w.i32(g.diameter); w.i32(g.wall); w.u8(g.color)
        w.flag(g.casing is not None)
        if g.casing is not None:
            w.i32(g.casing.diameter); w.i32(g.casing.wall); w.i32(g.casing.length)
    if mask & 4:
        g = d.well
        w.u8(g.kind.value); w.i32(g.width); w.i32(g.overshoot_below_pipe)
        w.f64(g.depth_label_offset); w.u8(g.color); w.u8(g.line_kind.value)
    if mask & 8:
        g = d.casing
        w.u8(g.link.kind.value); w.f64(g.link.value)
        w.i32(g.wall); w.i32(g.length); w.u8(g.color)
    if mask & 16:
        g = d.pipe
        w.u8(g.color)
        w.flag(g.type_ref is not None)
        if g.type_ref is not None:
            w.ref(g.type_ref)
    if mask & 32:
        g = d.text
        w.font(g.font); w.f64(g.line_step); w.u8(g.color)
    if mask & 64:
        w.f64(d.dimension_text_offset)
    if mask & 128:
        g = d.elevation_mark
        w.f64(g.arrow_shift); w.u8(g.shelf_dir.value); w.f64(g.shelf_lift)


def _read_defaults(r: Reader, profile: Profile) -> None:
    from .model import (AboveGroundDefaults, CasingDefaults, ElevationMarkDefaults,
                        PipeDefaults, SectionDefaults, TextDefaults, WellDefaults)
    d = profile.defaults
    mask = r.u8()
    if mask & 1:
        d.above_ground = AboveGroundDefaults(AboveGroundKind(r.u8()), r.u8(),
                                             r.i32(), r.i32())
    if mask & 2:
        kind, diameter, wall, color = SectionKind(r.u8()), r.i32(), r.i32(), r.u8()
        casing = SectionCasing(r.i32(), r.i32(), r.i32()) if r.flag() else None
        d.section = SectionDefaults(kind, diameter, wall, casing, color)
    if mask & 4:
        d.well = WellDefaults(WellKind(r.u8()), r.i32(), r.i32(), r.f64(),
                              r.u8(), LineKind(r.u8()))
    if mask & 8:
        d.casing = CasingDefaults(CasingLink(CasingLinkKind(r.u8()), r.f64()),
                                  r.i32(), r.i32(), r.u8())
    if mask & 16:
        color = r.u8()
        type_ref = r.ref() if r.flag() else None
        d.pipe = PipeDefaults(color, type_ref)
    if mask & 32:
        d.text = TextDefaults(r.font(), r.f64(), r.u8())
    if mask & 64:
        d.dimension_text_offset = r.f64()
    if mask & 128:
        d.elevation_mark = ElevationMarkDefaults(r.f64(), ShelfDir(r.u8()), r.f64())


# ---------------------------------------------------------------------------
# Object records
# ---------------------------------------------------------------------------

def _write_above_ground(w: Writer, o: AboveGroundObject) -> None:
    w.u32(o.id)
    w.u8(o.kind.value)
    w.f64(o.axis_x)
    w.text(o.label)
    w.u8(o.color)
    mask = (1 if o.height is not None else 0) | (2 if o.width is not None else 0)
    w.u8(mask)
    if o.height is not None:
        w.i32(o.height)
    if o.width is not None:
        w.i32(o.width)


def _read_above_ground(r: Reader) -> AboveGroundObject:
    oid, kind, axis_x, label, color = r.u32(), AboveGroundKind(r.u8()), r.f64(), r.text(), r.u8()
    mask = r.u8()
    height = r.i32() if mask & 1 else None
    width = r.i32() if mask & 2 else None
    return AboveGroundObject(oid, kind, axis_x, label, color, height, width)


def _write_section(w: Writer, o: UtilitySection) -> None:
    w.u32(o.id)
    w.u8(o.kind.value)
    w.point(o.center)
    w.u8(o.color)
    mask = ((1 if o.diameter is not None else 0) | (2 if o.wall is not None else 0)
            | (4 if o.label is not None else 0) | (8 if o.casing is not None else 0))
    w.u8(mask)
    if o.diameter is not None:
        w.i32(o.diameter)
    if o.wall is not None:
        w.i32(o.wall)
    if o.label is not None:
        w.text(o.label)
    if o.casing is not None:
        w.i32(o.casing.diameter); w.i32(o.casing.wall); w.i32(o.casing.length)


def _read_section(r: Reader) -> UtilitySection:
    oid, kind, center, color = r.u32(), SectionKind(r.u8()), r.point(), r.u8()
    mask = r.u8()
    diameter = r.i32() if mask & 1 else None
    wall = r.i32() if mask & 2 else None
    label = r.text() if mask & 4 else None
    casing = SectionCasing(r.i32(), r.i32(), r.i32()) if mask & 8 else None
    return UtilitySection(oid, kind, center, color, diameter, wall, label, casing)


def _write_turn_point(w: Writer, o: TurnPoint) -> None:
    w.u32(o.id); w.f64(o.x); w.text(o.over_table_text); w.text(o.designation)


def _read_turn_point(r: Reader) -> TurnPoint:
    return TurnPoint(r.u32(), r.f64(), r.text(), r.text())


def _write_well(w: Writer, o: Well) -> None:
    w.u32(o.id); w.u8(o.kind.value); w.f64(o.axis_x); w.i32(o.width)
    w.i32(o.overshoot_below_pipe); w.f64(o.depth_label_offset)
    w.text(o.designation); w.u8(o.color); w.u8(o.line_kind.value)


def _read_well(r: Reader) -> Well:
    return Well(r.u32(), WellKind(r.u8()), r.f64(), r.i32(), r.i32(), r.f64(),
                r.text(), r.u8(), LineKind(r.u8()))


def _write_casing(w: Writer, o: Casing) -> None:
    w.u32(o.id); w.f64(o.center_x)
    w.u8(o.link.kind.value); w.f64(o.link.value)
    w.i32(o.wall); w.i32(o.length); w.u8(o.color)


def _read_casing(r: Reader) -> Casing:
    return Casing(r.u32(), r.f64(), CasingLink(CasingLinkKind(r.u8()), r.f64()),
                  r.i32(), r.i32(), r.u8())


def _write_pipe_type(w: Writer, o: PipeType) -> None:
    w.u32(o.id); w.i32(o.outer_diameter)
    w.text(o.name); w.text(o.material); w.text(o.insulation)
    mask = 0
    for bit, name in enumerate(_SPEC_FIELDS):
        if getattr(o.spec, name) is not None:
            mask |= 1 << bit
    w.u16(mask)
    for name in _SPEC_FIELDS:
        value = getattr(o.spec, name)
        if value is None:
            continue
        if name == "unit_mass":
            w.f64(value)
        else:
            w.text(value)


def _read_pipe_type(r: Reader) -> PipeType:
    oid, outer = r.u32(), r.i32()
    name, material, insulation = r.text(), r.text(), r.text()
    mask = r.u16()
    spec = PipeSpecRecord()
    for bit, field_name in enumerate(_SPEC_FIELDS):
        if mask & (1 << bit):
            setattr(spec, field_name, r.f64() if field_name == "unit_mass" else r.text())
    return PipeType(oid, outer, name, material, insulation, spec)


def _write_pipe(w: Writer, o: Pipe) -> None:
    w.u32(o.id); w.ref(o.type_ref); w.u8(o.color); w.polyline(o.axis)


def _read_pipe(r: Reader) -> Pipe:
    oid, type_ref, color = r.u32(), r.ref(), r.u8()
    return Pipe(oid, type_ref, r.polyline(), color)


def _write_text(w: Writer, o: TextNote) -> None:
    w.u32(o.id)
    w.u16(len(o.lines))
    for line in o.lines:
        w.text(line)
    w.font(o.font); w.f64(o.line_step); w.u8(o.color); w.point(o.origin)


def _read_text(r: Reader) -> TextNote:
    oid = r.u32()
    lines = [r.text() for _ in range(r.u16())]
    return TextNote(oid, lines, r.font(), r.f64(), r.u8(), r.point())


def _write_leader(w: Writer, o: Leader) -> None:
    w.u32(o.id); w.ref(o.text_ref); w.ref(o.target)
    w.f64(o.offset.dx); w.f64(o.offset.dy)


def _read_leader(r: Reader) -> Leader:
    return Leader(r.u32(), r.ref(), r.ref(), PaperOffset(r.f64(), r.f64()))


def _write_dimension(w: Writer, o: ChainDimension) -> None:
    w.u32(o.id)
    w.u16(len(o.refs))
    for ref in o.refs:
        w.ref(ref)
    w.f64(o.dim_line_offset)
    w.u16(len(o.text_offsets))
    for off in o.text_offsets:
        w.f64(off)


def _read_dimension(r: Reader) -> ChainDimension:
    oid = r.u32()
    refs = [r.ref() for _ in range(r.u16())]
    dim_line_offset = r.f64()
    text_offsets = [r.f64() for _ in range(r.u16())]
    return ChainDimension(oid, refs, dim_line_offset, text_offsets)


def _write_mark(w: Writer, o: ElevationMark) -> None:
    w.u32(o.id); w.ref(o.section_ref)
    w.f64(o.arrow_shift); w.u8(o.shelf_dir.value); w.f64(o.shelf_lift)


def _read_mark(r: Reader) -> ElevationMark:
    return ElevationMark(r.u32(), r.ref(), r.f64(), ShelfDir(r.u8()), r.f64())


_LIST_CODECS = (
    (SEC_ABOVE_GROUND, "above_ground", _write_above_ground, _read_above_ground),
    (SEC_SECTIONS, "sections", _write_section, _read_section),
    (SEC_TURN_POINTS, "turn_points", _write_turn_point, _read_turn_point),
    (SEC_WELLS, "wells", _write_well, _read_well),
    (SEC_CASINGS, "casings", _write_casing, _read_casing),
    (SEC_PIPE_TYPES, "pipe_types", _write_pipe_type, _read_pipe_type),
    (SEC_PIPES, "pipes", _write_pipe, _read_pipe),
    (SEC_TEXTS, "texts", _write_text, _read_text),
    (SEC_LEADERS, "leaders", _write_leader, _read_leader),
    (SEC_DIMENSIONS, "dimensions", _write_dimension, _read_dimension),
    (SEC_ELEVATION_MARKS, "elevation_marks", _write_mark, _read_mark),
)


# ---------------------------------------------------------------------------
# Whole-file codec
# ---------------------------------------------------------------------------

def _section(out: bytearray, tag: int, payload: bytes) -> None:
    out += struct.pack("<BI", tag, len(payload))
    out += payload


def serialize(profile: Profile) -> bytes:
    """Canonical bytes of a profile; equal profiles yield equal bytes."""
    out = bytearray(MAGIC)
    out += struct.pack("<H", FORMAT_VERSION)

    w = Writer()
    _write_settings(w, profile)
    _section(out, SEC_SETTINGS, bytes(w.buf))

    w = Writer()
    _write_defaults(w, profile)
    _section(out, SEC_DEFAULTS, bytes(w.buf))

    w = Writer()
    w.u32(profile.next_id)
    surfaces = profile.surfaces
    mask = sum(1 << role.value for role in SurfaceRole
               if surfaces.get(role) is not None)
    w.u8(mask)
    for role in SurfaceRole:
        line = surfaces.get(role)
        if line is not None:
            w.polyline(line)
    _section(out, SEC_MISC, bytes(w.buf))

    for tag, attr, write, _ in _LIST_CODECS:
        store = getattr(profile, attr)
        if not store:
            continue
        w = Writer()
        w.u32(len(store))
        for oid in sorted(store):
            write(w, store[oid])
        _section(out, tag, bytes(w.buf))
    return bytes(out)


def parse(data: bytes) -> Profile:
    """Inverse of :func:`serialize`; unknown sections are skipped by length."""
    if data[:4] != MAGIC:
        raise BadMagicError(f"not a prototype file (magic {data[:4]!r})")
    if len(data) < 6:
        raise TruncatedError(len(data), 6)
    version = struct.unpack_from("<H", data, 4)[0]
    if version != FORMAT_VERSION:
        raise UnsupportedVersionError(f"format version {version} not supported")

    profile = Profile()
    readers = {tag: read for tag, _, _, read in _LIST_CODECS}
    attrs = {tag: attr for tag, attr, _, _ in _LIST_CODECS}

    pos = 6
    while pos < len(data):
        if pos + 5 > len(data):
            raise TruncatedError(pos, 5)
        tag, length = struct.unpack_from("<BI", data, pos)
        pos += 5
        if pos + length > len(data):
            raise TruncatedError(pos, length)
        r = Reader(data, pos, pos + length)
        if tag == SEC_SETTINGS:
            _read_settings(r, profile)
        elif tag == SEC_DEFAULTS:
            _read_defaults(r, profile)
        elif tag == SEC_MISC:
            profile.next_id = r.u32()
            mask = r.u8()
            surfaces = SurfaceSet()
            for role in SurfaceRole:
                if mask & (1 << role.value):
                    surfaces.set(role, r.polyline())
            profile.surfaces = surfaces
        elif tag in readers:
            count = r.u32()
            store = getattr(profile, attrs[tag])
            for _ in range(count):
                obj = readers[tag](r)
                store[obj.id] = obj
        # unknown tags: skipped by length
        pos += length
    return profile


def save_profile(profile: Profile, destination) -> int:
    """Write the parameter set to disk; returns the byte count."""
    violations = validate(profile)
    if violations:
        raise StoreError(f"profile invalid: {violations[0]}", rule="invalid-profile")
    data = serialize(profile)
    Path(destination).write_bytes(data)
    return len(data)


def load_profile(source) -> Profile:
    """Read a previously saved parameter set; the result always validates."""
    profile = parse(Path(source).read_bytes())
    violations = validate(profile)
    if violations:
        raise StoreError(f"file contents invalid: {violations[0]}",
                         rule="invalid-profile")
    return profile


@dataclass
class PrototypeEntry:
    name: str
    size: int
    profile: Optional[Profile] = None
    error: Optional[str] = None


def list_prototypes(directory) -> list[PrototypeEntry]:
    """Every ``*.pns`` file in the directory, loadable ones with a preview
    profile, broken ones flagged but never fatal."""
    root = Path(directory)
    entries: list[PrototypeEntry] = []
    for path in sorted(root.glob("*.pns")):
        size = path.stat().st_size
        try:
            entries.append(PrototypeEntry(path.name, size, profile=load_profile(path)))
        except (ProfileError, OSError, ValueError) as exc:
            entries.append(PrototypeEntry(path.name, size, error=str(exc)))
    return entries


# ---------------------------------------------------------------------------
# Pipe-type catalogs
# ---------------------------------------------------------------------------

class CatalogError(ProfileError):
    rule = "catalog-syntax"

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass
class CatalogGroup:
    title: str
    entries: list[PipeType]


@dataclass
class Catalog:
    groups: list[CatalogGroup]

    def all_entries(self) -> list[PipeType]:
        return [e for g in self.groups for e in g.entries]


def parse_catalog(text: str) -> Catalog:
    """Line-oriented catalog: ``#`` starts a group, entries are tab-separated
    ``diameter, name, material, insulation`` plus optional BOM columns."""
    groups: list[CatalogGroup] = []
    titles: set[str] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith("#"):
            title = line[1:].strip()
            if not title:
                raise CatalogError("empty group title", lineno)
            if title in titles:
                raise CatalogError(f"duplicate group title {title!r}", lineno)
            titles.add(title)
            groups.append(CatalogGroup(title, []))
            continue
        if not groups:
            raise CatalogError("entry before any group header", lineno)
        cols = line.split("\t")
        try:
            outer = int(cols[0].strip())
        except ValueError:
            raise CatalogError(f"bad diameter field {cols[0]!r}", lineno)
        if outer <= 0:
            raise CatalogError(f"diameter must be positive, got {outer}", lineno)
        if len(cols) < 2 or not cols[1].strip():
            raise CatalogError("missing pipe type name", lineno)

        def col(i: int) -> str | None:
            return cols[i].strip() or None if i < len(cols) else None

        spec = PipeSpecRecord(
            position_designation=col(4), designation=col(5), note=col(7),
            type_mark_doc=col(8), name_and_characteristic=col(9),
            unit_of_measure=col(10), manufacturer=col(11), product_code=col(12))
        mass = col(6)
        if mass is not None:
            try:
                spec.unit_mass = float(mass)
            except ValueError:
                raise CatalogError(f"bad unit mass {mass!r}", lineno)
        groups[-1].entries.append(PipeType(
            id=0, outer_diameter=outer, name=cols[1].strip(),
            material=col(2) or "", insulation=col(3) or "", spec=spec))
    return Catalog(groups)


def load_catalog(source) -> Catalog:
    return parse_catalog(Path(source).read_text("utf-8"))


# ---------------------------------------------------------------------------
# Specification (BOM) export
# ---------------------------------------------------------------------------

SPEC_HEADER = ("Марка, Поз.", "Обозначение", "Наименование", "Материал",
               "Тип изоляции", "Масса ед., кг", "Примечание",
               "Тип, марка, обозначение документа",
               "Наименование и техническая характеристика",
               "Единица измерения", "Завод-изготовитель", "Код изделия")


def export_spec(profile: Profile, destination) -> int:
    """One BOM row per pipe type in actual use, ordered by position
    designation; returns the data row count."""
    used = {pipe.type_ref for pipe in profile.pipes.values()}
    types = sorted((profile.resolve(ref) for ref in used),
                   key=lambda t: (t.spec.position_designation or "", t.name, t.id))
    lines = ["\t".join(SPEC_HEADER)]
    for t in types:
        s = t.spec
        mass = "" if s.unit_mass is None else repr(s.unit_mass)
        lines.append("\t".join((
            s.position_designation or "", s.designation or "", t.name, t.material,
            t.insulation, mass, s.note or "", s.type_mark_doc or "",
            s.name_and_characteristic or "", s.unit_of_measure or "",
            s.manufacturer or "", s.product_code or "")))
    Path(destination).write_text("\n".join(lines) + "\n", "utf-8")
    return len(types)


__all__ = [
    "BadMagicError", "Catalog", "CatalogError", "CatalogGroup", "FORMAT_VERSION",
    "MAGIC", "PrototypeEntry", "SPEC_HEADER", "StoreError", "TruncatedError",
    "UnsupportedVersionError", "export_spec", "list_prototypes", "load_catalog",
    "load_profile", "parse", "parse_catalog", "save_profile", "serialize",
]
