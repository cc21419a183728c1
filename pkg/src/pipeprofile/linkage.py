"""Link engine: referential cascades and coordinate couplings.

Deleting an object must never leave a dangling reference, so every delete
is planned here first (:func:`cascade_of`) and applied atomically by the
edit layer.  Coordinate couplings (well depth, casing diameter, surface
embedding) are derived values: they are recomputed from the model on
demand and never stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .model import (
    Casing,
    CasingLink,
    CasingLinkKind,
    Kind,
    ObjectRef,
    OutOfSpanError,
    Pipe,
    Profile,
    ProfileError,
    Well,
)


@dataclass
class CascadePlan:
    """What else must change when one object is deleted."""

    to_delete: set[ObjectRef] = field(default_factory=set)
    to_regenerate: set[ObjectRef] = field(default_factory=set)
    dim_refs_to_drop: dict[int, set[ObjectRef]] = field(default_factory=dict)

    def is_empty(self) -> bool:
        return not (self.to_delete or self.to_regenerate or self.dim_refs_to_drop)


def cascade_of(profile: Profile, victim: ObjectRef) -> CascadePlan:
    """Plan the fallout of deleting ``victim``.

    Leaders pointing at the victim (as target or as their text) go away;
    elevation marks on a deleted section go away; chain dimensions drop
    the victim's extension line and are regenerated, or deleted outright
    when fewer than two references would remain.
    """
    profile.resolve(victim)
    plan = CascadePlan()

    for lid in sorted(profile.leaders):
        leader = profile.leaders[lid]
        if leader.target == victim or leader.text_ref == victim:
            plan.to_delete.add(ObjectRef(Kind.LEADER, lid))

    if victim.kind == Kind.SECTION:
        for mid in sorted(profile.elevation_marks):
            if profile.elevation_marks[mid].section_ref == victim:
                plan.to_delete.add(ObjectRef(Kind.ELEVATION_MARK, mid))

    for did in sorted(profile.dimensions):
        dim = profile.dimensions[did]
        if victim in dim.refs:
            remaining = [r for r in dim.refs if r != victim]
            if len(remaining) < 2:
                plan.to_delete.add(ObjectRef(Kind.DIMENSION, did))
            else:
                plan.dim_refs_to_drop[did] = {victim}
                plan.to_regenerate.add(ObjectRef(Kind.DIMENSION, did))

    return plan


def casing_diameter(link: CasingLink, pipe_diameter: float) -> float:
    """Casing diameter coupled to the carrier pipe diameter.

    Proportional couplings round to whole millimeters; offset couplings
    add exactly.
    """
    if pipe_diameter <= 0:
        raise ProfileError(f"pipe diameter must be positive, got {pipe_diameter}",
                           rule="bad-diameter")
    if link.kind == CasingLinkKind.PROPORTIONAL:
        return float(round(link.value * pipe_diameter))
    return pipe_diameter + link.value


def pipe_outer_diameter(profile: Profile, pipe: Pipe) -> int:
    return profile.resolve(pipe.type_ref).outer_diameter


def pipe_bottom_at(profile: Profile, pipe: Pipe, x: float) -> float:
    """Elevation of the pipe's outer bottom at station ``x``."""
    if not pipe.axis.covers(x):
        raise OutOfSpanError(f"x={x} outside pipe span "
                             f"[{pipe.axis.x_min}, {pipe.axis.x_max}]")
    return pipe.axis.y_at(x) - pipe_outer_diameter(profile, pipe) / 2


def pipes_covering(profile: Profile, x: float) -> list[Pipe]:
    return [profile.pipes[pid] for pid in sorted(profile.pipes)
            if profile.pipes[pid].axis.covers(x)]


def pipe_under_casing(profile: Profile, casing: Casing) -> Pipe | None:
    covering = pipes_covering(profile, casing.center_x)
    return covering[0] if covering else None


def casing_drawn_diameter(profile: Profile, casing: Casing) -> float:
    """Derived diameter of a standalone casing.

    Falls back to the profile's conditional pipe diameter when the casing
    does not sit on any pipe.
    """
    pipe = pipe_under_casing(profile, casing)
    if pipe is None:
        d = profile.settings.conditional_pipe_diameter
    else:
        d = pipe_outer_diameter(profile, pipe)
    return casing_diameter(casing.link, d)


@dataclass(frozen=True)
class WellExtents:
    top: float
    bottom: float

    @property
    def depth(self) -> float:
        return self.top - self.bottom


def well_extents(profile: Profile, well: Well) -> WellExtents:
    """Derived vertical extents of a well.

    Top sits on the project surface (conditional ground level until a
    surface covers the axis); bottom follows the lowest pipe bottom at
    the axis, pushed down by the well's overshoot.
    """
    surface = profile.surfaces.project_surface
    if surface is not None and surface.covers(well.axis_x):
        top = surface.y_at(well.axis_x)
    else:
        top = profile.settings.build.conditional_ground_level

    bottoms = [pipe_bottom_at(profile, p, well.axis_x)
               for p in pipes_covering(profile, well.axis_x)]
    if bottoms:
        bottom = min(bottoms) - well.overshoot_below_pipe
    else:
        bottom = (profile.settings.build.conditional_pipe_bottom_level
                  - well.overshoot_below_pipe)
    return WellExtents(top=top, bottom=bottom)


@dataclass(frozen=True)
class CutInterval:
    """Gap cut into the project surface by above-ground objects."""

    x_lo: float
    x_hi: float
    ids: tuple[int, ...]


def embed_cut_intervals(profile: Profile) -> list[CutInterval]:
    """Where above-ground symbols interrupt the project ground line.

    Intervals are clipped to the surface span, merged when overlapping,
    and returned sorted.  The surface polyline itself is never modified.
    """
    surface = profile.surfaces.project_surface
    if surface is None:
        raise ProfileError("project surface not present", rule="surface-missing")
    lo, hi = surface.x_min, surface.x_max

    raw: list[CutInterval] = []
    for oid in sorted(profile.above_ground):
        obj = profile.above_ground[oid]
        a = max(obj.axis_x - obj.width / 2, lo)
        b = min(obj.axis_x + obj.width / 2, hi)
        if a < b:
            raw.append(CutInterval(a, b, (oid,)))
    raw.sort(key=lambda iv: (iv.x_lo, iv.x_hi))

    merged: list[CutInterval] = []
    for iv in raw:
        if merged and iv.x_lo <= merged[-1].x_hi:
            last = merged[-1]
            merged[-1] = CutInterval(last.x_lo, max(last.x_hi, iv.x_hi),
                                     last.ids + iv.ids)
        else:
            merged.append(iv)
    return merged


__all__ = [
    "CascadePlan", "CutInterval", "WellExtents", "cascade_of", "casing_diameter",
    "casing_drawn_diameter", "embed_cut_intervals", "pipe_bottom_at",
    "pipe_outer_diameter", "pipe_under_casing", "pipes_covering", "well_extents",
]
