"""Main-data table content, computed from the current model state.

Every cell value is produced here as its final display string so that the
renderer, the CLI and the HTTP service all show byte-identical text.
Meter values carry two decimals, rounded half-up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import ROUND_HALF_UP, Decimal
from enum import Enum

from . import linkage
from .model import (
    ChainDimension,
    Polyline,
    Profile,
    SlopeUnit,
    axis_x_of,
    interpolate_y,
)

#: Stations closer than this merge into one table station (drafting noise).
STATION_MERGE_TOLERANCE = 0.5

#: Row captions of the main-data table, top to bottom (per GOST 21.604-82).
ROW_LABELS = (
    "Отметка низа или лотка трубы",
    "Проектная отметка земли",
    "Натурная отметка земли",
    "Обозначение трубы и тип изоляции",
    "Основание",
    "Длина\\Уклон",
    "Расстояние",
    "Номер колодца, точки угла поворота",
)


class StationSource(Enum):
    TURN_POINT = 0
    WELL = 1
    PIPE_JOINT = 2


@dataclass(frozen=True)
class Station:
    x: float
    sources: frozenset[StationSource]


@dataclass(frozen=True)
class SpanCell:
    x_lo: float
    x_hi: float
    text: str


@dataclass(frozen=True)
class LengthSlopeCell:
    x_lo: float
    x_hi: float
    length_text: str
    slope_text: str


@dataclass
class MainDataTable:
    stations: list[Station] = field(default_factory=list)
    pipe_bottom: dict[float, str] = field(default_factory=dict)
    project_elev: dict[float, str] = field(default_factory=dict)
    natural_elev: dict[float, str] = field(default_factory=dict)
    pipe_designation: list[SpanCell] = field(default_factory=list)
    base: str = ""
    length_slope: list[LengthSlopeCell] = field(default_factory=list)
    distance: list[SpanCell] = field(default_factory=list)
    designations: dict[float, str] = field(default_factory=dict)
    has_header: bool = True
    min_headerless_length: int = 0


def format_m(mm: float) -> str:
    """Natural millimeters as meters with two decimals, half-up."""
    text = str((Decimal(mm) / 1000).quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))
    return "0.00" if text == "-0.00" else text


def segment_slope(a_y: float, b_y: float, run: float) -> float:
    """Dimensionless fall per run; positive means falling to the right."""
    return (a_y - b_y) / run


def slope_display(slope: float, unit: SlopeUnit) -> str:
    if unit == SlopeUnit.PERMILLE:
        return str(round(slope * 1000))
    return f"{slope * 100:.1f}"


def elevation_at(polyline: Polyline, x: float) -> float:
    """Elevation on a stored polyline; the later vertex governs at a drop."""
    return interpolate_y(polyline.points, x)


def collect_stations(profile: Profile) -> list[Station]:
    """Stations where table values are written.

    Turn points and well axes feed every row; interior pipe joints feed
    only the pipe-bottom row.  Stations within the merge tolerance fuse.
    """
    raw: list[tuple[float, StationSource]] = []
    for tp in profile.turn_points.values():
        raw.append((tp.x, StationSource.TURN_POINT))
    for well in profile.wells.values():
        raw.append((well.axis_x, StationSource.WELL))
    for pipe in profile.pipes.values():
        for p in pipe.axis.points[1:-1]:
            raw.append((p.x, StationSource.PIPE_JOINT))
    raw.sort(key=lambda item: (item[0], item[1].value))

    stations: list[Station] = []
    i = 0
    while i < len(raw):
        anchor = raw[i][0]
        sources = {raw[i][1]}
        j = i + 1
        while j < len(raw) and raw[j][0] - anchor <= STATION_MERGE_TOLERANCE:
            sources.add(raw[j][1])
            j += 1
        stations.append(Station(anchor, frozenset(sources)))
        i = j
    return stations


def _sorted_pipes(profile: Profile) -> list:
    return sorted(profile.pipes.values(), key=lambda p: (p.axis.x_min, p.axis.x_max, p.id))


def _designation_text(profile: Profile, type_ref) -> str:
    ptype = profile.resolve(type_ref)
    parts = [ptype.name, ptype.material, ptype.insulation]
    return ", ".join(p for p in parts if p)


def build_table(profile: Profile) -> MainDataTable:
    """The whole table, regenerated from scratch; rows fill only when their
    source data exists."""
    settings = profile.settings
    table = MainDataTable(
        base=settings.build.base_soil,
        has_header=settings.table.has_header,
        min_headerless_length=settings.table.min_headerless_length,
    )
    table.stations = collect_stations(profile)

    project = profile.surfaces.project_surface
    natural = profile.surfaces.natural_surface
    for station in table.stations:
        ground_station = (StationSource.TURN_POINT in station.sources
                          or StationSource.WELL in station.sources)
        bottoms = [linkage.pipe_bottom_at(profile, pipe, station.x)
                   for pipe in linkage.pipes_covering(profile, station.x)]
        if bottoms:
            table.pipe_bottom[station.x] = format_m(min(bottoms))
        if ground_station and project is not None and project.covers(station.x):
            table.project_elev[station.x] = format_m(project.y_at(station.x))
        if ground_station and natural is not None and natural.covers(station.x):
            table.natural_elev[station.x] = format_m(natural.y_at(station.x))

    run_lo = run_hi = None
    run_type = None
    for pipe in _sorted_pipes(profile):
        if pipe.type_ref == run_type and run_hi is not None and pipe.axis.x_min <= run_hi:
            run_hi = max(run_hi, pipe.axis.x_max)
            continue
        if run_type is not None:
            table.pipe_designation.append(
                SpanCell(run_lo, run_hi, _designation_text(profile, run_type)))
        run_lo, run_hi, run_type = pipe.axis.x_min, pipe.axis.x_max, pipe.type_ref
    if run_type is not None:
        table.pipe_designation.append(
            SpanCell(run_lo, run_hi, _designation_text(profile, run_type)))

    unit = settings.table.slope_unit
    for pipe in _sorted_pipes(profile):
        for a, b in zip(pipe.axis.points, pipe.axis.points[1:]):
            run = b.x - a.x
            if run == 0:
                continue   # vertical drop, not a sloped run
            table.length_slope.append(LengthSlopeCell(
                a.x, b.x, format_m(run),
                slope_display(segment_slope(a.y, b.y, run), unit)))

    marked = [s for s in table.stations
              if s.sources & {StationSource.TURN_POINT, StationSource.WELL}]
    for left, right in zip(marked, marked[1:]):
        table.distance.append(SpanCell(left.x, right.x, format_m(right.x - left.x)))

    designations: dict[float, list[str]] = {}
    for station in marked:
        names: list[str] = []
        for well in sorted(profile.wells.values(), key=lambda w: w.id):
            if abs(well.axis_x - station.x) <= STATION_MERGE_TOLERANCE and well.designation:
                names.append(well.designation)
        for tp in sorted(profile.turn_points.values(), key=lambda t: t.id):
            if abs(tp.x - station.x) <= STATION_MERGE_TOLERANCE and tp.designation:
                names.append(tp.designation)
        if names:
            designations[station.x] = names
    table.designations = {x: "/".join(names) for x, names in designations.items()}

    return table


def dimension_texts(profile: Profile, dim: ChainDimension) -> list[str]:
    """Dimension texts: real gap values in meters, two decimals."""
    axes = sorted(axis_x_of(profile, ref) for ref in dim.refs)
    return [format_m(b - a) for a, b in zip(axes, axes[1:])]


__all__ = [
    "LengthSlopeCell", "MainDataTable", "ROW_LABELS", "SpanCell", "Station",
    "StationSource", "STATION_MERGE_TOLERANCE", "build_table", "collect_stations",
    "dimension_texts", "elevation_at", "format_m", "segment_slope", "slope_display",
]
