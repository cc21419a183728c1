"""Domain model for longitudinal profile drawings of outdoor pipe networks.

Everything geometric is stored in natural millimeters relative to a single
base point: X runs along the developed pipe axis, Y is the elevation axis.
Paper-space quantities (text heights, leader offsets, dimension offsets)
are stored in millimeters of paper and are therefore scale-independent.

A ``Profile`` is a plain value object; operations that mutate it live in
:mod:`pipeprofile.editops`. ``validate`` reports every broken invariant and
every dangling reference instead of raising.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, Optional

COORD_LIMIT = 1e9

# Reserved escape in text lines, rendered as the diameter glyph.
DIAMETER_TOKEN = "%%c"
DIAMETER_GLYPH = "Ø"


class ProfileError(Exception):
    """Base of all domain errors. ``rule`` names the violated rule."""

    rule = "profile-error"

    def __init__(self, message: str, rule: str | None = None):
        super().__init__(message)
        if rule is not None:
            self.rule = rule


class UnresolvedRefError(ProfileError):
    rule = "unresolved-ref"


class EditError(ProfileError):
    rule = "edit-error"


class OutOfSpanError(ProfileError):
    rule = "out-of-span"


# ---------------------------------------------------------------------------
# Enumerations (wire values are frozen; do not renumber)
# ---------------------------------------------------------------------------

class Kind(Enum):
    ABOVE_GROUND = 0
    SECTION = 1
    TURN_POINT = 2
    WELL = 3
    CASING = 4
    PIPE_TYPE = 5
    PIPE = 6
    TEXT = 7
    LEADER = 8
    DIMENSION = 9
    ELEVATION_MARK = 10
    SURFACE = 11


class SurfaceRole(Enum):
    PROJECT = 0
    NATURAL = 1
    GROUNDWATER = 2


class AboveGroundKind(Enum):
    ROAD = 0
    RAILWAY = 1
    TRESTLE1 = 2
    TRESTLE2 = 3


class SectionKind(Enum):
    PIPE_SECTION = 0
    CABLE_SECTION = 1
    TELEPHONE_DUCT = 2


class WellKind(Enum):
    MANHOLE = 0
    RAIN_INLET = 1


class LineKind(Enum):
    SOLID_MAIN = 0
    SOLID_THIN = 1


class SlopeUnit(Enum):
    PERMILLE = 0
    PERCENT = 1


class PipelineKind(Enum):
    WATER = 0
    SEWER = 1


class ShelfDir(Enum):
    LEFT = 0
    RIGHT = 1


class CasingLinkKind(Enum):
    PROPORTIONAL = 0
    OFFSET = 1


#: Kinds that own a vertical axis on the drawing.
AXIS_KINDS = frozenset(
    {Kind.ABOVE_GROUND, Kind.SECTION, Kind.TURN_POINT, Kind.WELL, Kind.CASING}
)

#: Kinds a leader may point at.
LEADER_TARGET_KINDS = frozenset({Kind.SECTION, Kind.CASING, Kind.WELL})


# ---------------------------------------------------------------------------
# Geometry primitives
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NaturalPoint:
    """A point in natural millimeters from the profile base point."""

    x: float
    y: float


@dataclass(frozen=True)
class PaperOffset:
    """A displacement in paper millimeters."""

    dx: float
    dy: float


@dataclass
class Polyline:
    """X-monotone point chain (surfaces, groundwater level, pipe axes).

    Equal consecutive X is allowed (vertical drop); equal consecutive
    points are not.
    """

    points: list[NaturalPoint]
    color: int = 0

    @property
    def x_min(self) -> float:
        return self.points[0].x

    @property
    def x_max(self) -> float:
        return self.points[-1].x

    def covers(self, x: float) -> bool:
        return self.x_min <= x <= self.x_max

    def y_at(self, x: float) -> float:
        """Piecewise-linear elevation at ``x``.

        At a vertical drop the later vertex governs.  Raises
        :class:`OutOfSpanError` outside the chain's X-span.
        """
        return interpolate_y(self.points, x)


def interpolate_y(points: list[NaturalPoint], x: float) -> float:
    if not points or x < points[0].x or x > points[-1].x:
        raise OutOfSpanError(f"x={x} outside span", rule="out-of-span")
    # Rightmost vertex with points[i].x <= x, so duplicated X resolves to
    # the later vertex and the segment to the right is interpolated.
    lo, hi = 0, len(points) - 1
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if points[mid].x <= x:
            lo = mid
        else:
            hi = mid - 1
    if lo == len(points) - 1:
        return points[lo].y
    a, b = points[lo], points[lo + 1]
    t = (x - a.x) / (b.x - a.x)
    return a.y + t * (b.y - a.y)


@dataclass(frozen=True)
class ObjectRef:
    """Typed stable identifier; the currency of all referential links."""

    kind: Kind
    id: int

    def __str__(self) -> str:
        return f"{self.kind.name.lower()}:{self.id}"


@dataclass(frozen=True)
class FontSetting:
    height: float = 2.5      # paper mm
    widening: float = 1.0
    slant: bool = False


# ---------------------------------------------------------------------------
# Drawing objects
# ---------------------------------------------------------------------------

@dataclass
class SurfaceSet:
    """Ground surfaces and groundwater level; line style is fixed per role."""

    project_surface: Optional[Polyline] = None
    natural_surface: Optional[Polyline] = None
    groundwater: Optional[Polyline] = None

    def get(self, role: SurfaceRole) -> Optional[Polyline]:
        return (self.project_surface, self.natural_surface, self.groundwater)[role.value]

    def set(self, role: SurfaceRole, value: Optional[Polyline]) -> None:
        attr = ("project_surface", "natural_surface", "groundwater")[role.value]
        setattr(self, attr, value)


@dataclass
class AboveGroundObject:
    """Crossing object cut into the project ground line (road, railway, trestle)."""

    id: int
    kind: AboveGroundKind
    axis_x: float
    label: str = ""
    color: int = 0
    height: Optional[int] = None   # trestles only
    width: Optional[int] = None


@dataclass
class SectionCasing:
    """Casing carried by a crossing pipe section."""

    diameter: int
    wall: int
    length: int


@dataclass
class UtilitySection:
    """Cross-section of a crossing utility (pipe, cable, telephone duct)."""

    id: int
    kind: SectionKind
    center: NaturalPoint
    color: int = 0
    diameter: Optional[int] = None   # pipe sections only
    wall: Optional[int] = None
    label: Optional[str] = None
    casing: Optional[SectionCasing] = None


@dataclass
class TurnPoint:
    id: int
    x: float
    over_table_text: str = ""
    designation: str = ""


@dataclass
class Well:
    """Manhole or rain inlet; depth is derived, never stored."""

    id: int
    kind: WellKind
    axis_x: float
    width: int = 1000
    overshoot_below_pipe: int = 0
    depth_label_offset: float = 5.0   # paper mm above the project surface
    designation: str = ""
    color: int = 0
    line_kind: LineKind = LineKind.SOLID_MAIN


@dataclass(frozen=True)
class CasingLink:
    """Coupling of casing diameter to the carrier pipe diameter."""

    kind: CasingLinkKind
    value: float   # ratio (>1) for PROPORTIONAL, added mm (>0) for OFFSET


@dataclass
class Casing:
    """Protective sleeve; its diameter is derived through ``link``."""

    id: int
    center_x: float
    link: CasingLink
    wall: int = 8
    length: int = 10000
    color: int = 0


@dataclass
class PipeSpecRecord:
    """Bill-of-materials properties of a pipe type."""

    position_designation: Optional[str] = None
    designation: Optional[str] = None
    unit_mass: Optional[float] = None
    note: Optional[str] = None
    type_mark_doc: Optional[str] = None
    name_and_characteristic: Optional[str] = None
    unit_of_measure: Optional[str] = None
    manufacturer: Optional[str] = None
    product_code: Optional[str] = None


@dataclass
class PipeType:
    id: int
    outer_diameter: int
    name: str
    material: str = ""
    insulation: str = ""
    spec: PipeSpecRecord = field(default_factory=PipeSpecRecord)


@dataclass
class Pipe:
    """A run of continuing pipes of one type; interior vertices are slope changes."""

    id: int
    type_ref: ObjectRef
    axis: Polyline
    color: int = 0


@dataclass
class TextNote:
    id: int
    lines: list[str]
    font: FontSetting = field(default_factory=FontSetting)
    line_step: float = 4.0   # paper mm
    color: int = 0
    origin: NaturalPoint = field(default_factory=lambda: NaturalPoint(0.0, 0.0))


@dataclass
class Leader:
    """Callout line from a text to a section, casing or well.

    Color is not stored: it is inherited from the text.
    """

    id: int
    text_ref: ObjectRef
    target: ObjectRef
    offset: PaperOffset = field(default_factory=lambda: PaperOffset(0.0, 0.0))


@dataclass
class ChainDimension:
    """Horizontal chain dimension; a plain linear dimension is the 2-ref case."""

    id: int
    refs: list[ObjectRef]
    dim_line_offset: float = 10.0          # paper mm above table top
    text_offsets: list[float] = field(default_factory=list)   # len == len(refs) - 1


@dataclass
class ElevationMark:
    id: int
    section_ref: ObjectRef
    arrow_shift: float = 0.0    # paper mm along the extension line, signed
    shelf_dir: ShelfDir = ShelfDir.RIGHT
    shelf_lift: float = 5.0     # paper mm, signed


# ---------------------------------------------------------------------------
# Settings
# ---------------------------------------------------------------------------

@dataclass
class SurfaceColors:
    project: int = 0
    natural: int = 0
    groundwater: int = 4


@dataclass
class TableSettings:
    top_right_of_header: NaturalPoint = field(default_factory=lambda: NaturalPoint(0.0, 0.0))
    has_header: bool = True
    min_headerless_length: int = 50000   # natural mm
    font: FontSetting = field(default_factory=FontSetting)
    slope_unit: SlopeUnit = SlopeUnit.PERMILLE


@dataclass
class AuxScaleSettings:
    enabled: bool = False
    division: int = 1000    # natural mm per scale division
    color: int = 0
    font: FontSetting = field(default_factory=FontSetting)


@dataclass
class BuildSettings:
    scale_h: int = 1000     # denominator, 1:500 .. 1:1500
    scale_v: int = 100      # denominator, 1:100 .. 1:500
    pipeline_kind: PipelineKind = PipelineKind.WATER
    base_soil: str = ""
    min_ellipse_axis_ratio: float = 0.5
    conditional_ground_level: float = 100000.0
    conditional_pipe_bottom_level: float = 97000.0
    surface_colors: SurfaceColors = field(default_factory=SurfaceColors)
    font: FontSetting = field(default_factory=FontSetting)


@dataclass
class SectionSymbolSettings:
    cable_drawn_diameter: float = 2.0    # paper mm, minimum ellipse extent
    pipe_symbol_length: float = 6.0      # paper mm, over-table designations
    cable_symbol_length: float = 6.0
    duct_symbol_length: float = 6.0
    arrow_leg: float = 2.0
    arrow_span: float = 2.0
    duct_dot_diameter: float = 1.5


@dataclass
class DimensionSettings:
    has_leader: bool = False
    leader_to_shelf_end: bool = False
    tick_length: float = 2.0    # paper mm
    font: FontSetting = field(default_factory=FontSetting)
    color: int = 0


@dataclass
class ElevationMarkSettings:
    line_kind: LineKind = LineKind.SOLID_THIN
    arrow_leg: float = 3.0      # paper mm
    font: FontSetting = field(default_factory=FontSetting)
    color: int = 0


@dataclass
class GeneralSettings:
    table: TableSettings = field(default_factory=TableSettings)
    aux_scale: AuxScaleSettings = field(default_factory=AuxScaleSettings)
    build: BuildSettings = field(default_factory=BuildSettings)
    sections: SectionSymbolSettings = field(default_factory=SectionSymbolSettings)
    turn_point_color: int = 0
    conditional_pipe_diameter: int = 200
    dimensions: DimensionSettings = field(default_factory=DimensionSettings)
    elevation_marks: ElevationMarkSettings = field(default_factory=ElevationMarkSettings)


@dataclass
class AboveGroundDefaults:
    kind: AboveGroundKind = AboveGroundKind.ROAD
    color: int = 0
    width: int = 6000
    height: int = 4000


@dataclass
class SectionDefaults:
    kind: SectionKind = SectionKind.PIPE_SECTION
    diameter: int = 200
    wall: int = 6
    casing: Optional[SectionCasing] = None
    color: int = 0


@dataclass
class WellDefaults:
    kind: WellKind = WellKind.MANHOLE
    width: int = 1000
    overshoot_below_pipe: int = 0
    depth_label_offset: float = 5.0
    color: int = 0
    line_kind: LineKind = LineKind.SOLID_MAIN


@dataclass
class CasingDefaults:
    link: CasingLink = field(default_factory=lambda: CasingLink(CasingLinkKind.OFFSET, 200.0))
    wall: int = 8
    length: int = 10000
    color: int = 0


@dataclass
class PipeDefaults:
    color: int = 0
    type_ref: Optional[ObjectRef] = None   # last used type


@dataclass
class TextDefaults:
    font: FontSetting = field(default_factory=FontSetting)
    line_step: float = 4.0
    color: int = 0


@dataclass
class ElevationMarkDefaults:
    arrow_shift: float = 0.0
    shelf_dir: ShelfDir = ShelfDir.RIGHT
    shelf_lift: float = 5.0


@dataclass
class DefaultSettings:
    above_ground: AboveGroundDefaults = field(default_factory=AboveGroundDefaults)
    section: SectionDefaults = field(default_factory=SectionDefaults)
    well: WellDefaults = field(default_factory=WellDefaults)
    casing: CasingDefaults = field(default_factory=CasingDefaults)
    pipe: PipeDefaults = field(default_factory=PipeDefaults)
    text: TextDefaults = field(default_factory=TextDefaults)
    dimension_text_offset: float = 1.0   # paper mm from the dimension line
    elevation_mark: ElevationMarkDefaults = field(default_factory=ElevationMarkDefaults)


def factory_settings() -> GeneralSettings:
    return GeneralSettings()


def factory_defaults() -> DefaultSettings:
    return DefaultSettings()


# ---------------------------------------------------------------------------
# Profile
# ---------------------------------------------------------------------------

@dataclass
class Profile:
    """The aggregate parametric model of one profile drawing."""

    settings: GeneralSettings = field(default_factory=factory_settings)
    defaults: DefaultSettings = field(default_factory=factory_defaults)
    surfaces: SurfaceSet = field(default_factory=SurfaceSet)
    above_ground: dict[int, AboveGroundObject] = field(default_factory=dict)
    sections: dict[int, UtilitySection] = field(default_factory=dict)
    turn_points: dict[int, TurnPoint] = field(default_factory=dict)
    wells: dict[int, Well] = field(default_factory=dict)
    casings: dict[int, Casing] = field(default_factory=dict)
    pipe_types: dict[int, PipeType] = field(default_factory=dict)
    pipes: dict[int, Pipe] = field(default_factory=dict)
    texts: dict[int, TextNote] = field(default_factory=dict)
    leaders: dict[int, Leader] = field(default_factory=dict)
    dimensions: dict[int, ChainDimension] = field(default_factory=dict)
    elevation_marks: dict[int, ElevationMark] = field(default_factory=dict)
    next_id: int = 1

    def fresh_id(self) -> int:
        new = self.next_id
        self.next_id += 1
        return new

    def store_of(self, kind: Kind) -> dict:
        try:
            return {
                Kind.ABOVE_GROUND: self.above_ground,
                Kind.SECTION: self.sections,
                Kind.TURN_POINT: self.turn_points,
                Kind.WELL: self.wells,
                Kind.CASING: self.casings,
                Kind.PIPE_TYPE: self.pipe_types,
                Kind.PIPE: self.pipes,
                Kind.TEXT: self.texts,
                Kind.LEADER: self.leaders,
                Kind.DIMENSION: self.dimensions,
                Kind.ELEVATION_MARK: self.elevation_marks,
            }[kind]
        except KeyError:
            raise ProfileError(f"kind {kind.name} has no object list", rule="bad-kind")

    def resolve(self, ref: ObjectRef):
        obj = self.store_of(ref.kind).get(ref.id)
        if obj is None:
            raise UnresolvedRefError(f"no live {ref.kind.name.lower()} with id {ref.id}")
        return obj

    def resolves(self, ref: ObjectRef) -> bool:
        if ref.kind == Kind.SURFACE:
            return False
        return ref.id in self.store_of(ref.kind)

    def iter_objects(self) -> Iterator[tuple[ObjectRef, object]]:
        for kind in Kind:
            if kind == Kind.SURFACE:
                continue
            for oid in sorted(self.store_of(kind)):
                yield ObjectRef(kind, oid), self.store_of(kind)[oid]


def surface_ref(role: SurfaceRole) -> ObjectRef:
    """Synthetic ref used in edit results; never stored inside a Profile."""
    return ObjectRef(Kind.SURFACE, role.value)


# ---------------------------------------------------------------------------
# Axis query
# ---------------------------------------------------------------------------

def axis_x_of(profile: Profile, ref: ObjectRef) -> float:
    """Axis X of an axis-bearing object (sections use their center)."""
    if ref.kind not in AXIS_KINDS:
        raise ProfileError(f"{ref.kind.name.lower()} has no axis", rule="kind-without-axis")
    obj = profile.resolve(ref)
    if ref.kind == Kind.SECTION:
        return obj.center.x
    if ref.kind == Kind.CASING:
        return obj.center_x
    if ref.kind == Kind.TURN_POINT:
        return obj.x
    return obj.axis_x


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    rule: str
    ref: Optional[ObjectRef]
    detail: str = ""

    def __str__(self) -> str:
        where = f"({self.ref})" if self.ref else ""
        return f"{self.rule}{where} {self.detail}".rstrip()


def _finite(*values: float) -> bool:
    return all(isinstance(v, (int, float)) and math.isfinite(v) for v in values)


def _check_point(p: NaturalPoint) -> bool:
    return _finite(p.x, p.y) and abs(p.x) < COORD_LIMIT and abs(p.y) < COORD_LIMIT


def _check_polyline(line: Polyline, ref: Optional[ObjectRef], out: list[Violation], what: str) -> None:
    pts = line.points
    if len(pts) < 2:
        out.append(Violation("short-polyline", ref, f"{what}: {len(pts)} point(s)"))
        return
    for p in pts:
        if not _check_point(p):
            out.append(Violation("bad-coordinate", ref, f"{what}: {p}"))
            return
    for a, b in zip(pts, pts[1:]):
        if b.x < a.x:
            out.append(Violation("non-monotone-x", ref, f"{what}: {a.x} then {b.x}"))
            return
        if a == b:
            out.append(Violation("duplicate-point", ref, f"{what}: {a}"))
            return


def _check_font(font: FontSetting, out: list[Violation], what: str) -> None:
    if not _finite(font.height, font.widening) or font.height <= 0 or font.widening <= 0:
        out.append(Violation("bad-font", None, what))


def _check_ref(profile: Profile, ref: ObjectRef, expected: frozenset[Kind] | set[Kind],
               owner: ObjectRef, out: list[Violation]) -> bool:
    if ref.kind not in expected:
        out.append(Violation("wrong-ref-kind", owner, f"points at {ref.kind.name.lower()}"))
        return False
    if not profile.resolves(ref):
        out.append(Violation("dangling-ref", owner, f"→ {ref}"))
        return False
    return True


def validate(profile: Profile) -> list[Violation]:
    """Full integrity check; empty list iff every invariant holds."""
    out: list[Violation] = []
    s = profile.settings

    if not 500 <= s.build.scale_h <= 1500:
        out.append(Violation("scale-h-range", None, str(s.build.scale_h)))
    if not 100 <= s.build.scale_v <= 500:
        out.append(Violation("scale-v-range", None, str(s.build.scale_v)))
    if not (0 < s.build.min_ellipse_axis_ratio <= 1):
        out.append(Violation("ellipse-ratio-range", None, str(s.build.min_ellipse_axis_ratio)))
    if s.aux_scale.division <= 0:
        out.append(Violation("bad-aux-division", None, str(s.aux_scale.division)))
    if not _check_point(s.table.top_right_of_header):
        out.append(Violation("bad-coordinate", None, "table anchor"))
    if s.conditional_pipe_diameter <= 0:
        out.append(Violation("bad-conditional-diameter", None, str(s.conditional_pipe_diameter)))
    if not _finite(s.build.conditional_ground_level, s.build.conditional_pipe_bottom_level):
        out.append(Violation("bad-conditional-level", None, ""))
    for font, what in ((s.table.font, "table"), (s.aux_scale.font, "aux-scale"),
                       (s.build.font, "build"), (s.dimensions.font, "dimensions"),
                       (s.elevation_marks.font, "elevation-marks")):
        _check_font(font, out, what)

    d = profile.defaults
    if d.section.diameter <= 2 * d.section.wall or d.section.wall <= 0:
        out.append(Violation("bad-default", None, "section diameter/wall"))
    if d.well.width <= 0 or d.well.overshoot_below_pipe < 0:
        out.append(Violation("bad-default", None, "well"))
    if not _valid_casing_link(d.casing.link) or d.casing.wall <= 0 or d.casing.length <= 0:
        out.append(Violation("bad-default", None, "casing"))
    if d.text.line_step <= 0:
        out.append(Violation("bad-default", None, "text line step"))
    if d.pipe.type_ref is not None and not profile.resolves(d.pipe.type_ref):
        out.append(Violation("dangling-ref", None, f"pipe default type → {d.pipe.type_ref}"))

    for role in SurfaceRole:
        line = profile.surfaces.get(role)
        if line is not None:
            _check_polyline(line, None, out, role.name.lower())

    seen_ids: dict[int, Kind] = {}
    max_id = 0
    for ref, obj in profile.iter_objects():
        if ref.id in seen_ids:
            out.append(Violation("duplicate-id", ref, f"also used by {seen_ids[ref.id].name.lower()}"))
        seen_ids[ref.id] = ref.kind
        max_id = max(max_id, ref.id)
        _check_object(profile, ref, obj, out)
    if profile.next_id <= max_id:
        out.append(Violation("bad-next-id", None, f"next_id={profile.next_id} max={max_id}"))

    return out


def _valid_casing_link(link: CasingLink) -> bool:
    if not _finite(link.value):
        return False
    if link.kind == CasingLinkKind.PROPORTIONAL:
        return link.value > 1
    return link.value > 0


def _check_object(profile: Profile, ref: ObjectRef, obj, out: list[Violation]) -> None:
    kind = ref.kind
    if kind == Kind.ABOVE_GROUND:
        if not _finite(obj.axis_x) or abs(obj.axis_x) >= COORD_LIMIT:
            out.append(Violation("bad-coordinate", ref, "axis_x"))
        if obj.width is None or obj.width <= 0:
            out.append(Violation("missing-width", ref, obj.kind.name.lower()))
        needs_height = obj.kind in (AboveGroundKind.TRESTLE1, AboveGroundKind.TRESTLE2)
        if needs_height and (obj.height is None or obj.height <= 0):
            out.append(Violation("missing-height", ref, obj.kind.name.lower()))
        if not needs_height and obj.height is not None:
            out.append(Violation("unexpected-height", ref, obj.kind.name.lower()))
    elif kind == Kind.SECTION:
        if not _check_point(obj.center):
            out.append(Violation("bad-coordinate", ref, "center"))
        if obj.kind == SectionKind.PIPE_SECTION:
            if obj.diameter is None or obj.wall is None or not obj.diameter > 2 * obj.wall > 0:
                out.append(Violation("bad-section-dims", ref,
                                     f"diameter={obj.diameter} wall={obj.wall}"))
            elif obj.casing is not None and obj.casing.diameter <= obj.diameter:
                out.append(Violation("casing-not-larger", ref,
                                     f"{obj.casing.diameter} <= {obj.diameter}"))
        else:
            if obj.diameter is not None or obj.wall is not None or obj.label is not None \
                    or obj.casing is not None:
                out.append(Violation("pipe-extras-on-non-pipe", ref, obj.kind.name.lower()))
    elif kind == Kind.TURN_POINT:
        if not _finite(obj.x) or abs(obj.x) >= COORD_LIMIT:
            out.append(Violation("bad-coordinate", ref, "x"))
    elif kind == Kind.WELL:
        if not _finite(obj.axis_x) or abs(obj.axis_x) >= COORD_LIMIT:
            out.append(Violation("bad-coordinate", ref, "axis_x"))
        if obj.width <= 0:
            out.append(Violation("bad-width", ref, str(obj.width)))
        if obj.overshoot_below_pipe < 0:
            out.append(Violation("negative-overshoot", ref, str(obj.overshoot_below_pipe)))
    elif kind == Kind.CASING:
        if not _finite(obj.center_x) or abs(obj.center_x) >= COORD_LIMIT:
            out.append(Violation("bad-coordinate", ref, "center_x"))
        if not _valid_casing_link(obj.link):
            out.append(Violation("bad-casing-link", ref, str(obj.link)))
        if obj.wall <= 0 or obj.length <= 0:
            out.append(Violation("bad-casing-dims", ref, f"wall={obj.wall} length={obj.length}"))
    elif kind == Kind.PIPE_TYPE:
        if obj.outer_diameter <= 0:
            out.append(Violation("bad-diameter", ref, str(obj.outer_diameter)))
        if not obj.name:
            out.append(Violation("empty-name", ref))
    elif kind == Kind.PIPE:
        _check_ref(profile, obj.type_ref, {Kind.PIPE_TYPE}, ref, out)
        _check_polyline(obj.axis, ref, out, "axis")
    elif kind == Kind.TEXT:
        if not obj.lines:
            out.append(Violation("empty-text", ref))
        if obj.line_step <= 0:
            out.append(Violation("bad-line-step", ref, str(obj.line_step)))
        if not _check_point(obj.origin):
            out.append(Violation("bad-coordinate", ref, "origin"))
        _check_font(obj.font, out, str(ref))
    elif kind == Kind.LEADER:
        _check_ref(profile, obj.text_ref, {Kind.TEXT}, ref, out)
        _check_ref(profile, obj.target, LEADER_TARGET_KINDS, ref, out)
        if not _finite(obj.offset.dx, obj.offset.dy):
            out.append(Violation("bad-offset", ref))
    elif kind == Kind.DIMENSION:
        if len(obj.refs) < 2:
            out.append(Violation("too-few-refs", ref, str(len(obj.refs))))
        if len(obj.text_offsets) != max(len(obj.refs) - 1, 0):
            out.append(Violation("offsets-count", ref,
                                 f"{len(obj.text_offsets)} for {len(obj.refs)} refs"))
        axes = []
        for r in obj.refs:
            if _check_ref(profile, r, AXIS_KINDS, ref, out):
                axes.append(axis_x_of(profile, r))
        if len(axes) == len(obj.refs):
            axes.sort()
            for a, b in zip(axes, axes[1:]):
                if a == b:
                    out.append(Violation("coincident-axes", ref, str(a)))
                    break
    elif kind == Kind.ELEVATION_MARK:
        _check_ref(profile, obj.section_ref, {Kind.SECTION}, ref, out)
        if not _finite(obj.arrow_shift, obj.shelf_lift):
            out.append(Violation("bad-offset", ref))


def check_object(profile: Profile, ref: ObjectRef, obj) -> list[Violation]:
    """Invariants of one object against the profile (used by edit operations)."""
    out: list[Violation] = []
    _check_object(profile, ref, obj, out)
    return out


__all__ = [
    "AXIS_KINDS", "AboveGroundDefaults", "AboveGroundKind", "AboveGroundObject",
    "AuxScaleSettings", "BuildSettings", "Casing", "CasingDefaults", "CasingLink",
    "CasingLinkKind", "ChainDimension", "DefaultSettings", "DIAMETER_GLYPH",
    "DIAMETER_TOKEN", "DimensionSettings", "EditError", "ElevationMark",
    "ElevationMarkDefaults", "ElevationMarkSettings", "FontSetting", "GeneralSettings",
    "Kind", "Leader", "LEADER_TARGET_KINDS", "LineKind", "NaturalPoint", "ObjectRef",
    "OutOfSpanError", "PaperOffset", "Pipe", "PipeDefaults", "PipeSpecRecord",
    "PipeType", "PipelineKind", "Polyline", "Profile", "ProfileError", "SectionCasing",
    "SectionDefaults", "SectionKind", "SectionSymbolSettings", "ShelfDir", "SlopeUnit",
    "SurfaceColors", "SurfaceRole", "SurfaceSet", "TableSettings", "TextDefaults",
    "TextNote", "TurnPoint", "UnresolvedRefError", "Violation", "Well", "WellDefaults",
    "WellKind", "axis_x_of", "check_object", "factory_defaults", "factory_settings",
    "interpolate_y", "surface_ref", "validate",
]
