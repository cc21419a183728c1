"""The operation catalog a designer invokes on a profile.

Every operation is atomic: all preconditions are checked before the first
mutation, so a raised :class:`~pipeprofile.model.EditError` always leaves
the profile untouched.  Each operation keeps the closure invariant that
``validate(profile) == []`` before implies the same after.
"""

from __future__ import annotations

import copy
import math
from dataclasses import dataclass, field, fields as dc_fields
from enum import Enum

from . import linkage
from .model import (
    AboveGroundKind,
    AboveGroundObject,
    AXIS_KINDS,
    COORD_LIMIT,
    Casing,
    ChainDimension,
    EditError,
    ElevationMark,
    Kind,
    Leader,
    NaturalPoint,
    ObjectRef,
    PaperOffset,
    Pipe,
    PipeSpecRecord,
    PipeType,
    Polyline,
    Profile,
    SectionKind,
    SlopeUnit,
    SurfaceRole,
    TextNote,
    TurnPoint,
    UtilitySection,
    Well,
    axis_x_of,
    check_object,
    surface_ref,
    validate,
)


class Side(Enum):
    LEFT = 0
    RIGHT = 1


class GroundEditKind(Enum):
    ADD_VERTEX = 0
    MOVE_LEFT_END = 1
    MOVE_RIGHT_END = 2
    SHIFT_SEGMENT = 3


@dataclass
class EditResult:
    changed: set = field(default_factory=set)
    deleted: set = field(default_factory=set)
    created: set = field(default_factory=set)

    def __post_init__(self):
        self.changed -= self.deleted | self.created


COPYABLE_KINDS = frozenset({
    Kind.ABOVE_GROUND, Kind.SECTION, Kind.WELL, Kind.CASING, Kind.TEXT,
    Kind.ELEVATION_MARK,
})

DEFAULT_DIM_LINE_OFFSET = 10.0   # paper mm above table top


def _raise_violations(violations) -> None:
    if violations:
        raise EditError("; ".join(str(v) for v in violations), rule=violations[0].rule)


def _dims_referencing(profile: Profile, ref) -> list[int]:
    return [did for did in sorted(profile.dimensions)
            if ref in profile.dimensions[did].refs]


def _check_dimension_axes(profile: Profile, moved: dict) -> None:
    """Reject a move that would collide extension-line axes in a dimension."""
    for did in sorted(profile.dimensions):
        dim = profile.dimensions[did]
        if not any(r in moved for r in dim.refs):
            continue
        axes = sorted(moved[r] if r in moved else axis_x_of(profile, r)
                      for r in dim.refs)
        for a, b in zip(axes, axes[1:]):
            if a == b:
                raise EditError(
                    f"dimension {did} would get coincident extension lines at x={a}",
                    rule="coincident-axes")


def _resort_dimensions(profile: Profile, touched_refs) -> set:
    """Keep dimension refs ordered by current axis X; returns re-sorted dims."""
    changed = set()
    for did in sorted(profile.dimensions):
        dim = profile.dimensions[did]
        if not any(r in touched_refs for r in dim.refs):
            continue
        ordered = sorted(dim.refs, key=lambda r: axis_x_of(profile, r))
        if ordered != dim.refs:
            dim.refs = ordered
            changed.add(ObjectRef(Kind.DIMENSION, did))
    return changed


def _check_coordinate(value: float, what: str) -> None:
    if not (isinstance(value, (int, float)) and math.isfinite(value)
            and abs(value) < COORD_LIMIT):
        raise EditError(f"{what} coordinate {value} out of model range",
                        rule="bad-coordinate")


def _check_polyline_candidate(points: list[NaturalPoint], what: str) -> None:
    if len(points) < 2:
        raise EditError(f"{what} needs at least 2 points", rule="short-polyline")
    for p in points:
        _check_coordinate(p.x, what)
        _check_coordinate(p.y, what)
    for a, b in zip(points, points[1:]):
        if b.x < a.x:
            raise EditError(f"{what} X must not decrease ({a.x} then {b.x})",
                            rule="non-monotone-x")
        if a == b:
            raise EditError(f"{what} has duplicate consecutive point {a}",
                            rule="duplicate-point")


# ---------------------------------------------------------------------------
# Add
# ---------------------------------------------------------------------------

def add_object(profile: Profile, kind: Kind, fields: dict | None = None) -> EditResult:
    """Append a new object; unspecified fields come from the profile defaults."""
    f = dict(fields or {})
    d = profile.defaults

    if kind == Kind.SURFACE:
        role = f["role"]
        if profile.surfaces.get(role) is not None:
            raise EditError(f"{role.name.lower()} surface already present",
                            rule="surface-present")
        points = list(f["points"])
        _check_polyline_candidate(points, "surface")
        color = f.get("color")
        build = profile.settings.build
        if color is None:
            color = {SurfaceRole.PROJECT: build.surface_colors.project,
                     SurfaceRole.NATURAL: build.surface_colors.natural,
                     SurfaceRole.GROUNDWATER: build.surface_colors.groundwater}[role]
        profile.surfaces.set(role, Polyline(points=points, color=color))
        return EditResult(created={surface_ref(role)})

    oid = profile.next_id   # reserved; committed only on success
    if kind == Kind.ABOVE_GROUND:
        agk = f.get("kind", d.above_ground.kind)
        trestle = agk in (AboveGroundKind.TRESTLE1, AboveGroundKind.TRESTLE2)
        candidate = AboveGroundObject(
            id=oid, kind=agk, axis_x=f["axis_x"],
            label=f.get("label", ""),
            color=f.get("color", d.above_ground.color),
            width=f.get("width", d.above_ground.width),
            height=f.get("height", d.above_ground.height if trestle else None),
        )
    elif kind == Kind.SECTION:
        sk = f.get("kind", d.section.kind)
        pipe_like = sk == SectionKind.PIPE_SECTION
        candidate = UtilitySection(
            id=oid, kind=sk, center=f["center"],
            color=f.get("color", d.section.color),
            diameter=f.get("diameter", d.section.diameter if pipe_like else None),
            wall=f.get("wall", d.section.wall if pipe_like else None),
            label=f.get("label"),
            casing=f.get("casing", copy.deepcopy(d.section.casing) if pipe_like else None),
        )
    elif kind == Kind.TURN_POINT:
        candidate = TurnPoint(id=oid, x=f["x"],
                              over_table_text=f.get("over_table_text", ""),
                              designation=f.get("designation", ""))
    elif kind == Kind.WELL:
        candidate = Well(
            id=oid, kind=f.get("kind", d.well.kind), axis_x=f["axis_x"],
            width=f.get("width", d.well.width),
            overshoot_below_pipe=f.get("overshoot_below_pipe", d.well.overshoot_below_pipe),
            depth_label_offset=f.get("depth_label_offset", d.well.depth_label_offset),
            designation=f.get("designation", ""),
            color=f.get("color", d.well.color),
            line_kind=f.get("line_kind", d.well.line_kind),
        )
    elif kind == Kind.CASING:
        candidate = Casing(
            id=oid, center_x=f["center_x"],
            link=f.get("link", d.casing.link),
            wall=f.get("wall", d.casing.wall),
            length=f.get("length", d.casing.length),
            color=f.get("color", d.casing.color),
        )
    elif kind == Kind.PIPE_TYPE:
        candidate = PipeType(
            id=oid, outer_diameter=f["outer_diameter"], name=f["name"],
            material=f.get("material", ""), insulation=f.get("insulation", ""),
            spec=f.get("spec") or PipeSpecRecord(),
        )
    elif kind == Kind.PIPE:
        type_ref = f.get("type_ref", d.pipe.type_ref)
        if type_ref is None:
            raise EditError("no pipe type given and no last-used type",
                            rule="no-pipe-type")
        points = list(f["points"])
        _check_polyline_candidate(points, "pipe axis")
        candidate = Pipe(id=oid, type_ref=type_ref,
                         axis=Polyline(points=points),
                         color=f.get("color", d.pipe.color))
    elif kind == Kind.TEXT:
        candidate = TextNote(
            id=oid, lines=list(f["lines"]), origin=f["origin"],
            font=f.get("font", d.text.font),
            line_step=f.get("line_step", d.text.line_step),
            color=f.get("color", d.text.color),
        )
    elif kind == Kind.LEADER:
        candidate = Leader(id=oid, text_ref=f["text_ref"], target=f["target"],
                           offset=f.get("offset", PaperOffset(0.0, 0.0)))
    elif kind == Kind.DIMENSION:
        refs = list(f["refs"])
        for r in refs:
            if r.kind not in AXIS_KINDS:
                raise EditError(f"{r} cannot carry an extension line", rule="wrong-ref-kind")
            profile.resolve(r)
        refs.sort(key=lambda r: axis_x_of(profile, r))
        n = len(refs)
        candidate = ChainDimension(
            id=oid, refs=refs,
            dim_line_offset=f.get("dim_line_offset", DEFAULT_DIM_LINE_OFFSET),
            text_offsets=list(f.get("text_offsets",
                                    [d.dimension_text_offset] * max(n - 1, 0))),
        )
    elif kind == Kind.ELEVATION_MARK:
        candidate = ElevationMark(
            id=oid, section_ref=f["section_ref"],
            arrow_shift=f.get("arrow_shift", d.elevation_mark.arrow_shift),
            shelf_dir=f.get("shelf_dir", d.elevation_mark.shelf_dir),
            shelf_lift=f.get("shelf_lift", d.elevation_mark.shelf_lift),
        )
    else:
        raise EditError(f"cannot add kind {kind.name}", rule="bad-kind")

    ref = ObjectRef(kind, oid)
    _raise_violations(check_object(profile, ref, candidate))
    profile.store_of(kind)[profile.fresh_id()] = candidate

    if kind == Kind.PIPE:   # pipe defaults follow the last used type and color
        d.pipe.type_ref = candidate.type_ref
        d.pipe.color = candidate.color
    return EditResult(created={ref})


# ---------------------------------------------------------------------------
# Delete
# ---------------------------------------------------------------------------

def _drop_dimension_ref(profile: Profile, dim: ChainDimension, victim) -> None:
    # refs are kept sorted by axis, so offsets pair with sorted gaps;
    # dropping an interior ref merges two gaps and keeps the left offset
    j = dim.refs.index(victim)
    dim.refs.pop(j)
    if dim.text_offsets:
        if j == 0:
            dim.text_offsets.pop(0)
        else:
            dim.text_offsets.pop(min(j, len(dim.text_offsets) - 1))


def delete_object(profile: Profile, victim) -> EditResult:
    """Remove an object and apply its cascade plan atomically."""
    if victim.kind == Kind.SURFACE:
        role = SurfaceRole(victim.id)
        if profile.surfaces.get(role) is None:
            raise EditError(f"{role.name.lower()} surface not present",
                            rule="surface-missing")
        profile.surfaces.set(role, None)
        return EditResult(deleted={victim})

    profile.resolve(victim)
    if victim.kind == Kind.PIPE_TYPE:
        users = [pid for pid in sorted(profile.pipes)
                 if profile.pipes[pid].type_ref == victim]
        if users:
            raise EditError(f"pipe type {victim.id} is used by pipes {users}",
                            rule="pipe-type-in-use")
        if profile.defaults.pipe.type_ref == victim:
            profile.defaults.pipe.type_ref = None

    plan = linkage.cascade_of(profile, victim)
    for did, drops in sorted(plan.dim_refs_to_drop.items()):
        for r in drops:
            _drop_dimension_ref(profile, profile.dimensions[did], r)
    for ref in plan.to_delete:
        del profile.store_of(ref.kind)[ref.id]
    del profile.store_of(victim.kind)[victim.id]
    return EditResult(deleted={victim} | plan.to_delete, changed=set(plan.to_regenerate))


# ---------------------------------------------------------------------------
# Move / copy / properties
# ---------------------------------------------------------------------------

def _axis_field(kind: Kind) -> str:
    return {Kind.ABOVE_GROUND: "axis_x", Kind.WELL: "axis_x",
            Kind.CASING: "center_x", Kind.TURN_POINT: "x"}[kind]


def _dependents_of(profile: Profile, target) -> set:
    out = set()
    for lid in sorted(profile.leaders):
        leader = profile.leaders[lid]
        if leader.target == target or leader.text_ref == target:
            out.add(ObjectRef(Kind.LEADER, lid))
    if target.kind == Kind.SECTION:
        for mid in sorted(profile.elevation_marks):
            if profile.elevation_marks[mid].section_ref == target:
                out.add(ObjectRef(Kind.ELEVATION_MARK, mid))
    for did in _dims_referencing(profile, target):
        out.add(ObjectRef(Kind.DIMENSION, did))
    return out


def move_object(profile: Profile, target, *, delta: tuple[float, float] | None = None,
                to: NaturalPoint | None = None, vertex: int | None = None) -> EditResult:
    """Move an object, a polyline vertex, or a paper-space annotation.

    ``delta`` is natural mm for model geometry and paper mm for leaders,
    dimensions and elevation marks.  Dependent annotations re-anchor on
    their own since their positions are derived.
    """
    if target.kind == Kind.SURFACE:
        role = SurfaceRole(target.id)
        line = profile.surfaces.get(role)
        if line is None:
            raise EditError(f"{role.name.lower()} surface not present",
                            rule="surface-missing")
        return _move_vertex(line.points, vertex, delta, to, EditResult(changed={target}))

    obj = profile.resolve(target)
    result = EditResult(changed={target} | _dependents_of(profile, target))

    if target.kind == Kind.PIPE:
        if vertex is None:
            raise EditError("pipes move by their joints and ends", rule="not-movable")
        return _move_vertex(obj.axis.points, vertex, delta, to, result)

    if to is None and delta is None:
        raise EditError("move needs a delta or a new anchor", rule="missing-anchor")

    if target.kind in (Kind.ABOVE_GROUND, Kind.WELL, Kind.CASING, Kind.TURN_POINT):
        attr = _axis_field(target.kind)
        new_x = to.x if to is not None else getattr(obj, attr) + delta[0]
        _check_coordinate(new_x, "axis")
        _check_dimension_axes(profile, {target: new_x})
        setattr(obj, attr, new_x)
        _resort_dimensions(profile, {target})
        return result

    if target.kind == Kind.SECTION:
        new_center = to if to is not None else NaturalPoint(obj.center.x + delta[0],
                                                           obj.center.y + delta[1])
        _check_coordinate(new_center.x, "center")
        _check_coordinate(new_center.y, "center")
        _check_dimension_axes(profile, {target: new_center.x})
        obj.center = new_center
        _resort_dimensions(profile, {target})
        return result

    if target.kind == Kind.TEXT:
        new_origin = to if to is not None else NaturalPoint(obj.origin.x + delta[0],
                                                            obj.origin.y + delta[1])
        _check_coordinate(new_origin.x, "origin")
        _check_coordinate(new_origin.y, "origin")
        obj.origin = new_origin
        return result

    # the remaining kinds move in paper millimeters
    if delta is None:
        raise EditError(f"{target.kind.name.lower()} moves by a paper-mm delta",
                        rule="missing-anchor")
    if target.kind == Kind.LEADER:
        obj.offset = PaperOffset(obj.offset.dx + delta[0], obj.offset.dy + delta[1])
        return result

    if target.kind == Kind.DIMENSION:
        obj.dim_line_offset += delta[1]
        return result

    if target.kind == Kind.ELEVATION_MARK:
        obj.arrow_shift += delta[1]
        return result

    raise EditError(f"kind {target.kind.name} is not movable", rule="not-movable")


def _move_vertex(points: list[NaturalPoint], vertex, delta, to, result: EditResult) -> EditResult:
    if vertex is None or not 0 <= vertex < len(points):
        raise EditError(f"vertex index {vertex} out of range", rule="bad-vertex")
    old = points[vertex]
    new = to if to is not None else NaturalPoint(old.x + delta[0], old.y + delta[1])
    candidate = list(points)
    candidate[vertex] = new
    _check_polyline_candidate(candidate, "moved polyline")
    points[vertex] = new
    return result


def copy_object(profile: Profile, source, *, to_x: float | None = None,
                to_point: NaturalPoint | None = None,
                to_section=None) -> EditResult:
    """Deep copy at a new anchor; leaders and dimensions never follow a copy."""
    if source.kind not in COPYABLE_KINDS:
        raise EditError(f"kind {source.kind.name.lower()} is not copyable",
                        rule="non-copyable")
    obj = profile.resolve(source)
    clone = copy.deepcopy(obj)
    clone.id = profile.next_id

    if source.kind in (Kind.ABOVE_GROUND, Kind.WELL):
        if to_x is None:
            raise EditError("new axis x required", rule="missing-anchor")
        clone.axis_x = to_x
    elif source.kind == Kind.CASING:
        if to_x is None:
            raise EditError("new axis x required", rule="missing-anchor")
        clone.center_x = to_x
    elif source.kind == Kind.SECTION:
        if to_point is None:
            raise EditError("new center required", rule="missing-anchor")
        clone.center = to_point
    elif source.kind == Kind.TEXT:
        if to_point is None:
            raise EditError("new origin required", rule="missing-anchor")
        clone.origin = to_point
    elif source.kind == Kind.ELEVATION_MARK:
        if to_section is None:
            raise EditError("target section required", rule="missing-anchor")
        if to_section.kind != Kind.SECTION:
            raise EditError("elevation marks bind to sections", rule="wrong-ref-kind")
        profile.resolve(to_section)
        clone.section_ref = to_section

    ref = ObjectRef(source.kind, clone.id)
    _raise_violations(check_object(profile, ref, clone))
    profile.store_of(source.kind)[profile.fresh_id()] = clone
    return EditResult(created={ref})


def set_properties(profile: Profile, target, new_fields: dict) -> EditResult:
    """Replace plain fields; coordinate links re-fire via derived values."""
    obj = profile.resolve(target)
    legal = {fld.name for fld in dc_fields(obj)} - {"id"}
    unknown = set(new_fields) - legal
    if unknown:
        raise EditError(f"unknown fields {sorted(unknown)}", rule="unknown-field")

    candidate = copy.deepcopy(obj)
    for name, value in new_fields.items():
        setattr(candidate, name, value)
    if target.kind == Kind.PIPE:
        profile.resolve(candidate.type_ref)
        _check_polyline_candidate(candidate.axis.points, "pipe axis")
    _raise_violations(check_object(profile, target, candidate))

    if target.kind in AXIS_KINDS:
        new_axis = {Kind.SECTION: lambda o: o.center.x,
                    Kind.CASING: lambda o: o.center_x,
                    Kind.TURN_POINT: lambda o: o.x}.get(
                        target.kind, lambda o: o.axis_x)(candidate)
        _check_dimension_axes(profile, {target: new_axis})

    profile.store_of(target.kind)[target.id] = candidate
    changed = {target} | _dependents_of(profile, target)
    if target.kind in AXIS_KINDS:
        _resort_dimensions(profile, {target})
    if target.kind in (Kind.PIPE_TYPE, Kind.PIPE):
        # casing diameters are derived from the pipe under them
        for cid in sorted(profile.casings):
            pipe = linkage.pipe_under_casing(profile, profile.casings[cid])
            if pipe is None:
                continue
            if ((target.kind == Kind.PIPE and pipe.id == target.id)
                    or (target.kind == Kind.PIPE_TYPE and pipe.type_ref == target)):
                changed.add(ObjectRef(Kind.CASING, cid))
    return EditResult(changed=changed)


# ---------------------------------------------------------------------------
# Pipe and surface topology
# ---------------------------------------------------------------------------

def _polyline_for(profile: Profile, which) -> tuple[list[NaturalPoint], object]:
    """Points list + result ref for a pipe ref or a surface role."""
    if isinstance(which, SurfaceRole):
        line = profile.surfaces.get(which)
        if line is None:
            raise EditError(f"{which.name.lower()} surface not present",
                            rule="surface-missing")
        return line.points, surface_ref(which)
    obj = profile.resolve(which)
    if which.kind != Kind.PIPE:
        raise EditError(f"{which} has no editable polyline", rule="bad-kind")
    return obj.axis.points, which


def continue_pipe(profile: Profile, pipe_ref, end: Side,
                  new_points: list[NaturalPoint]) -> EditResult:
    """Extend a pipe axis at one end (points run outward from that end)."""
    return _continue_polyline(profile, pipe_ref, end, new_points)


def continue_surface(profile: Profile, role: SurfaceRole, end: Side,
                     new_points: list[NaturalPoint]) -> EditResult:
    return _continue_polyline(profile, role, end, new_points)


def _continue_polyline(profile, which, end, new_points) -> EditResult:
    points, ref = _polyline_for(profile, which)
    if not new_points:
        raise EditError("no points to append", rule="empty-extension")
    if end == Side.RIGHT:
        candidate = points + list(new_points)
    else:
        candidate = list(reversed(new_points)) + points
    _check_polyline_candidate(candidate, "extended polyline")
    points[:] = candidate
    return EditResult(changed={ref})


def _split_at(points: list[NaturalPoint], x: float, what: str) -> None:
    if x < points[0].x or x > points[-1].x:
        raise EditError(f"x={x} outside {what} span", rule="out-of-span")
    if any(p.x == x for p in points):
        raise EditError(f"x={x} is an existing vertex", rule="existing-vertex")
    for i in range(len(points) - 1):
        a, b = points[i], points[i + 1]
        if a.x < x < b.x:
            t = (x - a.x) / (b.x - a.x)
            points.insert(i + 1, NaturalPoint(x, a.y + t * (b.y - a.y)))
            return
    raise EditError(f"no segment strictly contains x={x}", rule="out-of-span")


def split_pipe_segment(profile: Profile, pipe_ref, x: float) -> EditResult:
    """Insert a joint at ``x``; its elevation keeps the segment straight."""
    points, ref = _polyline_for(profile, pipe_ref)
    _split_at(points, x, "pipe")
    return EditResult(changed={ref})


def split_surface_segment(profile: Profile, role: SurfaceRole, x: float) -> EditResult:
    points, ref = _polyline_for(profile, role)
    _split_at(points, x, role.name.lower())
    return EditResult(changed={ref})


def delete_pipe_joint(profile: Profile, pipe_ref, joint_index: int) -> EditResult:
    """Remove an axis vertex; a single-segment pipe is removed entirely."""
    pipe = profile.resolve(pipe_ref)
    points = pipe.axis.points
    if not 0 <= joint_index < len(points):
        raise EditError(f"joint index {joint_index} out of range", rule="bad-vertex")
    if len(points) == 2:
        return delete_object(profile, pipe_ref)
    candidate = points[:joint_index] + points[joint_index + 1:]
    _check_polyline_candidate(candidate, "pipe axis")
    points[:] = candidate
    return EditResult(changed={pipe_ref})


def delete_surface_vertex(profile: Profile, role: SurfaceRole,
                          vertex_index: int) -> EditResult:
    points, ref = _polyline_for(profile, role)
    if not 0 <= vertex_index < len(points):
        raise EditError(f"vertex index {vertex_index} out of range", rule="bad-vertex")
    if len(points) == 2:
        profile.surfaces.set(role, None)
        return EditResult(deleted={ref})
    candidate = points[:vertex_index] + points[vertex_index + 1:]
    _check_polyline_candidate(candidate, "surface")
    points[:] = candidate
    return EditResult(changed={ref})


def divide_pipe(profile: Profile, pipe_ref, joint_index: int) -> EditResult:
    """Cut one pipe into two at an interior joint; both inherit type and color."""
    pipe = profile.resolve(pipe_ref)
    points = pipe.axis.points
    if not 0 < joint_index < len(points) - 1:
        raise EditError("division needs an interior joint", rule="interior-only")
    right = Pipe(id=profile.next_id, type_ref=pipe.type_ref,
                 axis=Polyline(points=points[joint_index:], color=pipe.color),
                 color=pipe.color)
    pipe.axis.points = points[:joint_index + 1]
    profile.pipes[profile.fresh_id()] = right
    return EditResult(changed={pipe_ref}, created={ObjectRef(Kind.PIPE, right.id)})


def merge_pipes(profile: Profile, left_ref, right_ref,
                resolved_type=None, resolved_color: int | None = None) -> EditResult:
    """Join two pipes whose ends coincide exactly; the joined pipe keeps the
    left pipe's id.  Differing type or color must be resolved explicitly."""
    a = profile.resolve(left_ref)
    b = profile.resolve(right_ref)
    if left_ref == right_ref:
        raise EditError("cannot merge a pipe with itself", rule="same-pipe")
    if a.axis.points[-1] == b.axis.points[0]:
        left, right, keep_ref, drop_ref = a, b, left_ref, right_ref
    elif b.axis.points[-1] == a.axis.points[0]:
        left, right, keep_ref, drop_ref = b, a, right_ref, left_ref
    else:
        raise EditError("ends not coincident", rule="ends-not-coincident")

    if left.type_ref != right.type_ref and resolved_type is None:
        raise EditError("pipe types differ; a resolved type is required",
                        rule="resolution-required")
    if left.color != right.color and resolved_color is None:
        raise EditError("pipe colors differ; a resolved color is required",
                        rule="resolution-required")
    new_type = resolved_type if resolved_type is not None else left.type_ref
    profile.resolve(new_type)
    new_color = resolved_color if resolved_color is not None else left.color

    merged = left.axis.points + right.axis.points[1:]
    _check_polyline_candidate(merged, "merged axis")
    left.axis.points = merged
    left.type_ref = new_type
    left.color = new_color
    del profile.pipes[drop_ref.id]
    return EditResult(changed={keep_ref}, deleted={drop_ref})


def edit_text(profile: Profile, text_ref, new_lines: list[str]) -> EditResult:
    text = profile.resolve(text_ref)
    if not new_lines:
        raise EditError("a text needs at least one line", rule="empty-text")
    text.lines = list(new_lines)
    return EditResult(changed={text_ref})


# ---------------------------------------------------------------------------
# Table-driven edits
# ---------------------------------------------------------------------------

def _segment_containing(points: list[NaturalPoint], x: float) -> int:
    if x < points[0].x or x > points[-1].x:
        raise EditError(f"x={x} outside span", rule="out-of-span")
    i = 0
    for j in range(len(points) - 1):
        if points[j].x <= x:
            i = j
    return i


def edit_ground_elevation(profile: Profile, role: SurfaceRole, station_x: float,
                          new_elev: float, choice: GroundEditKind) -> EditResult:
    """Make the surface read ``new_elev`` at the station, the chosen way."""
    points, ref = _polyline_for(profile, role)
    i = _segment_containing(points, station_x)
    a, b = points[i], points[i + 1]
    run = b.x - a.x
    t = (station_x - a.x) / run if run > 0 else 1.0

    if choice == GroundEditKind.ADD_VERTEX:
        candidate = list(points)
        candidate.insert(i + 1, NaturalPoint(station_x, new_elev))
        _check_polyline_candidate(candidate, "surface")
        points[:] = candidate
        return EditResult(changed={ref})

    if choice == GroundEditKind.MOVE_LEFT_END:
        if t == 1.0:
            raise EditError("station sits on the right end; the left end has no "
                            "lever arm", rule="zero-lever-arm")
        new_a = NaturalPoint(a.x, (new_elev - t * b.y) / (1 - t))
        replacement = {i: new_a}
    elif choice == GroundEditKind.MOVE_RIGHT_END:
        if t == 0.0:
            raise EditError("station sits on the left end; the right end has no "
                            "lever arm", rule="zero-lever-arm")
        new_b = NaturalPoint(b.x, (new_elev - (1 - t) * a.y) / t)
        replacement = {i + 1: new_b}
    else:   # SHIFT_SEGMENT
        delta = new_elev - (a.y + t * (b.y - a.y))
        replacement = {i: NaturalPoint(a.x, a.y + delta),
                       i + 1: NaturalPoint(b.x, b.y + delta)}

    candidate = [replacement.get(j, p) for j, p in enumerate(points)]
    _check_polyline_candidate(candidate, "surface")
    points[:] = candidate
    return EditResult(changed={ref})


def _pipes_wholly_on_side(profile: Profile, exclude_id: int, pivot_x: float,
                          side: Side) -> list[Pipe]:
    out = []
    for pid in sorted(profile.pipes):
        pipe = profile.pipes[pid]
        if pid == exclude_id:
            continue
        if side == Side.RIGHT and pipe.axis.x_min >= pivot_x:
            out.append(pipe)
        elif side == Side.LEFT and pipe.axis.x_max <= pivot_x:
            out.append(pipe)
    return out


def _translate_points(points: list[NaturalPoint], dx: float, dy: float,
                      index_from: int | None = None, index_to: int | None = None) -> None:
    lo = 0 if index_from is None else index_from
    hi = len(points) if index_to is None else index_to
    for j in range(lo, hi):
        points[j] = NaturalPoint(points[j].x + dx, points[j].y + dy)


def _segment_of(profile: Profile, pipe_ref, segment_index: int) -> Pipe:
    pipe = profile.resolve(pipe_ref)
    if not 0 <= segment_index < len(pipe.axis.points) - 1:
        raise EditError(f"segment index {segment_index} out of range",
                        rule="bad-segment")
    return pipe


def edit_segment_length(profile: Profile, pipe_ref, segment_index: int,
                        new_len_h: float, side: Side, keep_slope: bool) -> EditResult:
    """Give a pipe segment a new horizontal length by shifting one side.

    Everything on the chosen side follows: later joints of the same pipe,
    whole pipes lying wholly on that side, and casings riding the shifted
    spans.  With ``keep_slope`` the shifted side also translates vertically
    so the edited segment keeps its fall.
    """
    if new_len_h <= 0:
        raise EditError("segment length must be positive", rule="bad-length")
    pipe = _segment_of(profile, pipe_ref, segment_index)
    points = pipe.axis.points
    a, b = points[segment_index], points[segment_index + 1]
    run = b.x - a.x
    if run == 0:
        raise EditError("a vertical drop has no horizontal length to edit",
                        rule="vertical-drop-segment")
    slope = (a.y - b.y) / run
    delta_x = new_len_h - run
    delta_y = (-slope * delta_x if side == Side.RIGHT else slope * delta_x) \
        if keep_slope else 0.0
    sign = 1.0 if side == Side.RIGHT else -1.0
    pivot_x = b.x if side == Side.RIGHT else a.x

    candidate = list(points)
    if side == Side.RIGHT:
        for j in range(segment_index + 1, len(candidate)):
            candidate[j] = NaturalPoint(candidate[j].x + delta_x,
                                        candidate[j].y + delta_y)
    else:
        for j in range(0, segment_index + 1):
            candidate[j] = NaturalPoint(candidate[j].x - delta_x,
                                        candidate[j].y + delta_y)
    _check_polyline_candidate(candidate, "pipe axis")

    moved_casings = [cid for cid in sorted(profile.casings)
                     if (profile.casings[cid].center_x >= pivot_x if side == Side.RIGHT
                         else profile.casings[cid].center_x <= pivot_x)]
    _check_dimension_axes(profile, {
        ObjectRef(Kind.CASING, cid):
            profile.casings[cid].center_x + sign * delta_x for cid in moved_casings})

    points[:] = candidate
    changed = {pipe_ref}
    for other in _pipes_wholly_on_side(profile, pipe.id, pivot_x, side):
        _translate_points(other.axis.points, sign * delta_x, delta_y)
        changed.add(ObjectRef(Kind.PIPE, other.id))
    for cid in moved_casings:
        profile.casings[cid].center_x += sign * delta_x
        changed.add(ObjectRef(Kind.CASING, cid))
    changed |= _resort_dimensions(
        profile, {ObjectRef(Kind.CASING, cid) for cid in moved_casings})
    return EditResult(changed=changed)


def edit_segment_slope(profile: Profile, pipe_ref, segment_index: int,
                       new_slope_display: float, side: Side) -> EditResult:
    """Set a segment's slope (given in the profile's display unit) by moving
    one side vertically."""
    pipe = _segment_of(profile, pipe_ref, segment_index)
    unit = profile.settings.table.slope_unit
    slope = new_slope_display / (1000.0 if unit == SlopeUnit.PERMILLE else 100.0)
    points = pipe.axis.points
    a, b = points[segment_index], points[segment_index + 1]
    run = b.x - a.x
    if run == 0:
        raise EditError("a vertical drop has no slope to edit",
                        rule="vertical-drop-segment")

    if side == Side.RIGHT:
        delta_y = (a.y - slope * run) - b.y
        lo, hi, pivot_x = segment_index + 1, len(points), b.x
    else:
        delta_y = (b.y + slope * run) - a.y
        lo, hi, pivot_x = 0, segment_index + 1, a.x

    candidate = list(points)
    for j in range(lo, hi):
        candidate[j] = NaturalPoint(candidate[j].x, candidate[j].y + delta_y)
    _check_polyline_candidate(candidate, "pipe axis")
    points[:] = candidate

    changed = {pipe_ref}
    for other in _pipes_wholly_on_side(profile, pipe.id, pivot_x, side):
        _translate_points(other.axis.points, 0.0, delta_y)
        changed.add(ObjectRef(Kind.PIPE, other.id))
    return EditResult(changed=changed)


def edit_distance(profile: Profile, left_ref, right_ref, new_dist: float,
                  side: Side) -> EditResult:
    """Set the gap between two adjacent stations by shifting one side's
    wells and turn points."""
    if new_dist <= 0:
        raise EditError("distance must be positive", rule="bad-distance")
    for r in (left_ref, right_ref):
        if r.kind not in (Kind.WELL, Kind.TURN_POINT):
            raise EditError("distances run between wells and turn points",
                            rule="wrong-ref-kind")
        profile.resolve(r)
    x_left = axis_x_of(profile, left_ref)
    x_right = axis_x_of(profile, right_ref)
    if x_left >= x_right:
        raise EditError("left/right stations out of order", rule="not-adjacent")

    stations = [(ObjectRef(Kind.WELL, wid), profile.wells[wid].axis_x)
                for wid in sorted(profile.wells)]
    stations += [(ObjectRef(Kind.TURN_POINT, tid), profile.turn_points[tid].x)
                 for tid in sorted(profile.turn_points)]
    if any(x_left < x < x_right for _, x in stations):
        raise EditError("another station lies between the two chosen",
                        rule="not-adjacent")

    delta = new_dist - (x_right - x_left)
    if side == Side.RIGHT:
        moved = {ref: x + delta for ref, x in stations if x >= x_right}
    else:
        moved = {ref: x - delta for ref, x in stations if x <= x_left}
    for new_x in moved.values():
        _check_coordinate(new_x, "station")

    order_before = [ref for ref, _ in sorted(stations, key=lambda s: (s[1], s[0].id))]
    order_after = [ref for ref, _ in sorted(
        ((ref, moved.get(ref, x)) for ref, x in stations), key=lambda s: (s[1], s[0].id))]
    if order_before != order_after:
        raise EditError("shift would reorder the station sequence",
                        rule="station-reorder")
    _check_dimension_axes(profile, moved)

    for ref, new_x in moved.items():
        setattr(profile.store_of(ref.kind)[ref.id], _axis_field(ref.kind), new_x)
    changed = set(moved)
    changed |= _resort_dimensions(profile, set(moved))
    return EditResult(changed=changed)


def move_profile(profile: Profile, delta: tuple[float, float]) -> EditResult:
    """Re-place the whole profile on the drawing field; only the table
    anchor moves, all base-point-relative data stays put."""
    anchor = profile.settings.table.top_right_of_header
    new_anchor = NaturalPoint(anchor.x + delta[0], anchor.y + delta[1])
    _check_coordinate(new_anchor.x, "anchor")
    _check_coordinate(new_anchor.y, "anchor")
    profile.settings.table.top_right_of_header = new_anchor
    return EditResult()


def add_dimension_ref(profile: Profile, dim_ref, new_ref,
                      text_offset: float | None = None) -> EditResult:
    """Add one extension line to an existing chain dimension."""
    dim = profile.resolve(dim_ref)
    if new_ref.kind not in AXIS_KINDS:
        raise EditError(f"{new_ref} cannot carry an extension line",
                        rule="wrong-ref-kind")
    profile.resolve(new_ref)
    if new_ref in dim.refs:
        raise EditError("already part of the dimension", rule="duplicate-ref")
    new_x = axis_x_of(profile, new_ref)
    axes = sorted(axis_x_of(profile, r) for r in dim.refs)
    if new_x in axes:
        raise EditError(f"extension line at x={new_x} already present",
                        rule="coincident-axes")
    if text_offset is None:
        text_offset = profile.defaults.dimension_text_offset
    j = sum(1 for x in axes if x < new_x)
    dim.refs.insert(j, new_ref)
    dim.text_offsets.insert(min(j, len(dim.text_offsets)), text_offset)
    return EditResult(changed={dim_ref})


def set_settings(profile: Profile, updates: dict) -> EditResult:
    """Apply nested updates to general settings and defaults, atomically."""
    saved = (copy.deepcopy(profile.settings), copy.deepcopy(profile.defaults))
    try:
        _apply_nested(profile.settings, updates.get("settings", updates))
        if "defaults" in updates:
            _apply_nested(profile.defaults, updates["defaults"])
        violations = validate(profile)
        if violations:
            raise EditError("; ".join(str(v) for v in violations),
                            rule=violations[0].rule)
    except Exception:
        profile.settings, profile.defaults = saved
        raise
    return EditResult()


def _apply_nested(target, updates: dict) -> None:
    for name, value in updates.items():
        if not hasattr(target, name):
            raise EditError(f"unknown setting {name!r}", rule="unknown-field")
        current = getattr(target, name)
        if isinstance(value, dict) and hasattr(current, "__dataclass_fields__"):
            _apply_nested(current, value)
        else:
            setattr(target, name, value)


__all__ = [
    "COPYABLE_KINDS", "DEFAULT_DIM_LINE_OFFSET", "EditResult", "GroundEditKind",
    "Side", "add_dimension_ref", "add_object", "continue_pipe", "continue_surface",
    "copy_object", "delete_object", "delete_pipe_joint", "delete_surface_vertex",
    "divide_pipe", "edit_distance", "edit_ground_elevation", "edit_segment_length",
    "edit_segment_slope", "edit_text", "merge_pipes", "move_object", "move_profile",
    "set_properties", "set_settings", "split_pipe_segment", "split_surface_segment",
]
