"""Shared generators and independent oracles for the test suite.

The profile generator builds objects directly (not through editops) so the
round-trip and integrity tests do not depend on the code they check.  The
interpolation oracle runs on exact rationals.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from pipeprofile.model import (
    AboveGroundKind,
    Casing,
    CasingLink,
    CasingLinkKind,
    ChainDimension,
    ElevationMark,
    Kind,
    Leader,
    NaturalPoint,
    ObjectRef,
    PaperOffset,
    Pipe,
    PipeSpecRecord,
    PipeType,
    PipelineKind,
    Polyline,
    Profile,
    SectionKind,
    ShelfDir,
    SlopeUnit,
    TextNote,
    TurnPoint,
    UtilitySection,
    Well,
    WellKind,
    axis_x_of,
    validate,
)

SPAN = 50000.0


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------

def interp_oracle(points: list[NaturalPoint], x: float) -> Fraction:
    """Exact-rational piecewise-linear interpolation, scanning every segment;
    at duplicated X the later vertex governs.  Independent of the engine's
    bisection path."""
    fx = Fraction(x)
    assert Fraction(points[0].x) <= fx <= Fraction(points[-1].x)
    value = None
    for a, b in zip(points, points[1:]):
        ax, ay = Fraction(a.x), Fraction(a.y)
        bx, by = Fraction(b.x), Fraction(b.y)
        if ax <= fx <= bx:
            if ax == bx:
                value = by
            else:
                value = by - (bx - fx) * (by - ay) / (bx - ax)
    if value is None:
        value = Fraction(points[-1].y)
    return value


# ---------------------------------------------------------------------------
# Random model data
# ---------------------------------------------------------------------------

def rnd_coord(rng: random.Random, lo: float, hi: float) -> float:
    value = rng.uniform(lo, hi)
    return round(value, rng.choice((0, 0, 0, 1, 3)))


def monotone_points(rng: random.Random, n: int, x_lo: float, x_hi: float,
                    y_lo: float, y_hi: float, drops: bool = False) -> list[NaturalPoint]:
    xs = sorted({rnd_coord(rng, x_lo, x_hi) for _ in range(n * 2)})
    while len(xs) < n:
        xs = sorted(set(xs) | {rnd_coord(rng, x_lo, x_hi)})
    xs = xs[:n]
    points = [NaturalPoint(x, rnd_coord(rng, y_lo, y_hi)) for x in xs]
    if drops and n >= 3 and rng.random() < 0.3:
        i = rng.randrange(1, n - 1)
        drop = NaturalPoint(points[i].x, points[i].y - rng.randrange(100, 500))
        points.insert(i + 1, drop)
    return points


class Builder:
    """Direct profile construction with globally unique ids."""

    def __init__(self, rng: random.Random):
        self.rng = rng
        self.profile = Profile()
        self._id = 0

    def fresh(self) -> int:
        self._id += 1
        return self._id

    def finish(self) -> Profile:
        self.profile.next_id = self._id + 1
        problems = validate(self.profile)
        assert problems == [], f"generator produced invalid profile: {problems}"
        return self.profile


def random_profile(rng: random.Random, max_objects: int = 50) -> Profile:
    b = Builder(rng)
    p = b.profile
    s = p.settings

    s.build.scale_h = rng.randrange(500, 1501)
    s.build.scale_v = rng.randrange(100, 501)
    s.build.pipeline_kind = rng.choice(list(PipelineKind))
    s.build.base_soil = rng.choice(("", "песок", "суглинок", "гравий"))
    s.build.conditional_ground_level = 100000.0 + rng.randrange(-500, 500)
    s.build.conditional_pipe_bottom_level = 96000.0 + rng.randrange(-500, 500)
    s.table.top_right_of_header = NaturalPoint(rnd_coord(rng, -2000, 0), 94000.0)
    s.table.slope_unit = rng.choice(list(SlopeUnit))
    s.aux_scale.enabled = rng.random() < 0.4
    if rng.random() < 0.3:
        s.table.has_header = False

    budget = rng.randrange(2, max_objects + 1)

    if rng.random() < 0.85:
        p.surfaces.project_surface = Polyline(
            points=monotone_points(rng, rng.randrange(2, 6), 0, SPAN, 99000, 101000),
            color=rng.randrange(0, 16))
    if rng.random() < 0.6:
        p.surfaces.natural_surface = Polyline(
            points=monotone_points(rng, rng.randrange(2, 5), 0, SPAN, 99000, 101000),
            color=rng.randrange(0, 16))
    if rng.random() < 0.4:
        p.surfaces.groundwater = Polyline(
            points=monotone_points(rng, rng.randrange(2, 4), 0, SPAN, 97500, 99000),
            color=rng.randrange(0, 16))

    n_types = rng.randrange(1, 4)
    for _ in range(n_types):
        tid = b.fresh()
        p.pipe_types[tid] = PipeType(
            id=tid, outer_diameter=rng.choice((100, 160, 200, 300, 630, 820)),
            name=f"Труба Т{tid}", material=rng.choice(("", "сталь", "чугун")),
            insulation=rng.choice(("", "усиленная")),
            spec=PipeSpecRecord(position_designation=str(rng.randrange(1, 9)),
                                unit_mass=rng.choice((None, 12.5, 57.2))))

    def spend() -> bool:
        nonlocal budget
        if budget <= 0:
            return False
        budget -= 1
        return True

    type_ids = sorted(p.pipe_types)
    for _ in range(rng.randrange(0, 4)):
        if not spend():
            break
        pid = b.fresh()
        x_lo = rnd_coord(rng, 0, SPAN * 0.6)
        pts = monotone_points(rng, rng.randrange(2, 5), x_lo,
                              x_lo + rng.uniform(5000, 25000), 96200, 97500,
                              drops=True)
        p.pipes[pid] = Pipe(id=pid, type_ref=ObjectRef(Kind.PIPE_TYPE, rng.choice(type_ids)),
                            axis=Polyline(points=pts), color=rng.randrange(0, 16))

    used_axes: set[float] = set()

    def fresh_axis() -> float:
        while True:
            x = rnd_coord(rng, 0, SPAN)
            if x not in used_axes:
                used_axes.add(x)
                return x

    for _ in range(rng.randrange(0, 5)):
        if not spend():
            break
        wid = b.fresh()
        p.wells[wid] = Well(id=wid, kind=rng.choice(list(WellKind)),
                            axis_x=fresh_axis(), width=rng.choice((700, 1000, 1500)),
                            overshoot_below_pipe=rng.choice((0, 200, 500)),
                            designation=str(wid), color=rng.randrange(0, 16))

    for _ in range(rng.randrange(0, 4)):
        if not spend():
            break
        tid = b.fresh()
        p.turn_points[tid] = TurnPoint(id=tid, x=fresh_axis(),
                                       over_table_text=f"УП{tid}", designation=f"Т{tid}")

    for _ in range(rng.randrange(0, 4)):
        if not spend():
            break
        sid = b.fresh()
        kind = rng.choice(list(SectionKind))
        if kind == SectionKind.PIPE_SECTION:
            wall = rng.choice((4, 6, 8))
            p.sections[sid] = UtilitySection(
                id=sid, kind=kind, center=NaturalPoint(fresh_axis(), rnd_coord(rng, 96500, 99000)),
                color=rng.randrange(0, 16), diameter=rng.choice((100, 200, 300)),
                wall=wall, label=rng.choice((None, f"В{sid}")))
        else:
            p.sections[sid] = UtilitySection(
                id=sid, kind=kind, center=NaturalPoint(fresh_axis(), rnd_coord(rng, 96500, 99000)),
                color=rng.randrange(0, 16))

    for _ in range(rng.randrange(0, 3)):
        if not spend():
            break
        cid = b.fresh()
        link = (CasingLink(CasingLinkKind.PROPORTIONAL, rng.choice((1.2, 1.5, 2.0)))
                if rng.random() < 0.5 else
                CasingLink(CasingLinkKind.OFFSET, rng.choice((100.0, 200.0))))
        p.casings[cid] = Casing(id=cid, center_x=fresh_axis(), link=link,
                                wall=8, length=rng.randrange(2000, 12000),
                                color=rng.randrange(0, 16))

    for _ in range(rng.randrange(0, 3)):
        if not spend():
            break
        tid = b.fresh()
        p.texts[tid] = TextNote(
            id=tid, lines=[f"Текст {tid}", "%%c100"][:rng.randrange(1, 3)],
            line_step=rng.choice((3.0, 4.0)), color=rng.randrange(0, 16),
            origin=NaturalPoint(rnd_coord(rng, 0, SPAN), rnd_coord(rng, 100500, 102000)))

    leader_targets = ([ObjectRef(Kind.SECTION, i) for i in p.sections]
                      + [ObjectRef(Kind.CASING, i) for i in p.casings]
                      + [ObjectRef(Kind.WELL, i) for i in p.wells])
    if p.texts and leader_targets:
        for _ in range(rng.randrange(0, 3)):
            if not spend():
                break
            lid = b.fresh()
            p.leaders[lid] = Leader(
                id=lid, text_ref=ObjectRef(Kind.TEXT, rng.choice(sorted(p.texts))),
                target=rng.choice(leader_targets),
                offset=PaperOffset(rng.uniform(-10, 10), rng.uniform(-10, 10)))

    axis_refs = ([ObjectRef(Kind.WELL, i) for i in p.wells]
                 + [ObjectRef(Kind.TURN_POINT, i) for i in p.turn_points]
                 + [ObjectRef(Kind.SECTION, i) for i in p.sections]
                 + [ObjectRef(Kind.CASING, i) for i in p.casings])
    if len(axis_refs) >= 2:
        for _ in range(rng.randrange(0, 3)):
            if not spend():
                break
            k = rng.randrange(2, min(4, len(axis_refs)) + 1)
            refs = rng.sample(axis_refs, k)
            axes = [axis_x_of(p, r) for r in refs]
            if len(set(axes)) != len(axes):
                continue
            refs.sort(key=lambda r: axis_x_of(p, r))
            did = b.fresh()
            p.dimensions[did] = ChainDimension(
                id=did, refs=refs, dim_line_offset=rng.choice((8.0, 10.0, 12.0)),
                text_offsets=[rng.choice((0.5, 1.0, 1.5)) for _ in range(k - 1)])

    if p.sections:
        for _ in range(rng.randrange(0, 2)):
            if not spend():
                break
            mid = b.fresh()
            p.elevation_marks[mid] = ElevationMark(
                id=mid, section_ref=ObjectRef(Kind.SECTION, rng.choice(sorted(p.sections))),
                arrow_shift=rng.uniform(-4, 4), shelf_dir=rng.choice(list(ShelfDir)),
                shelf_lift=rng.uniform(2, 8))

    return b.finish()


# ---------------------------------------------------------------------------
# Randomized edit-operation driver (covers every editops verb)
# ---------------------------------------------------------------------------

from pipeprofile import editops  # noqa: E402
from pipeprofile.model import ProfileError, SurfaceRole, surface_ref  # noqa: E402


def _pick(rng: random.Random, store: dict):
    return rng.choice(sorted(store)) if store else None


def _pick_ref(rng: random.Random, p: Profile, kinds) -> ObjectRef | None:
    options = []
    for kind in kinds:
        options += [ObjectRef(kind, oid) for oid in sorted(p.store_of(kind))]
    return rng.choice(options) if options else None


def _random_side(rng: random.Random) -> editops.Side:
    return rng.choice((editops.Side.LEFT, editops.Side.RIGHT))


def apply_random_op(rng: random.Random, p: Profile) -> tuple[str, bool]:
    """Apply one randomly chosen edit operation with plausible arguments.

    Returns (operation name, applied flag); rejected attempts leave the
    profile unchanged by the atomicity contract and count as exercised.
    """

    def op_add():
        kind = rng.choice((Kind.WELL, Kind.TURN_POINT, Kind.SECTION, Kind.CASING,
                           Kind.PIPE_TYPE, Kind.PIPE, Kind.TEXT, Kind.LEADER,
                           Kind.DIMENSION, Kind.ELEVATION_MARK, Kind.ABOVE_GROUND,
                           Kind.SURFACE))
        if kind == Kind.WELL:
            fields = {"axis_x": rnd_coord(rng, 0, SPAN), "designation": "W"}
        elif kind == Kind.TURN_POINT:
            fields = {"x": rnd_coord(rng, 0, SPAN)}
        elif kind == Kind.SECTION:
            fields = {"center": NaturalPoint(rnd_coord(rng, 0, SPAN),
                                             rnd_coord(rng, 96500, 99500))}
        elif kind == Kind.CASING:
            fields = {"center_x": rnd_coord(rng, 0, SPAN)}
        elif kind == Kind.PIPE_TYPE:
            fields = {"outer_diameter": rng.choice((160, 300, 630)),
                      "name": f"Труба N{rng.randrange(1000)}"}
        elif kind == Kind.PIPE:
            if not p.pipe_types:
                fields = {"points": []}
            else:
                x_lo = rnd_coord(rng, 0, SPAN * 0.7)
                fields = {
                    "points": monotone_points(rng, rng.randrange(2, 4), x_lo,
                                              x_lo + rng.uniform(4000, 15000),
                                              96200, 97500),
                    "type_ref": ObjectRef(Kind.PIPE_TYPE, _pick(rng, p.pipe_types)),
                }
        elif kind == Kind.TEXT:
            fields = {"lines": ["строка"],
                      "origin": NaturalPoint(rnd_coord(rng, 0, SPAN), 101000.0)}
        elif kind == Kind.LEADER:
            target = _pick_ref(rng, p, (Kind.SECTION, Kind.CASING, Kind.WELL))
            text = _pick(rng, p.texts)
            if target is None or text is None:
                raise ProfileError("nothing to attach", rule="skip")
            fields = {"text_ref": ObjectRef(Kind.TEXT, text), "target": target,
                      "offset": PaperOffset(rng.uniform(-8, 8), rng.uniform(-8, 8))}
        elif kind == Kind.DIMENSION:
            refs = [
                _pick_ref(rng, p, (Kind.WELL, Kind.TURN_POINT, Kind.SECTION,
                                   Kind.CASING, Kind.ABOVE_GROUND))
                for _ in range(rng.randrange(2, 4))]
            if any(r is None for r in refs) or len(set(refs)) != len(refs):
                raise ProfileError("no dimension candidates", rule="skip")
            fields = {"refs": refs}
        elif kind == Kind.ELEVATION_MARK:
            section = _pick(rng, p.sections)
            if section is None:
                raise ProfileError("no sections", rule="skip")
            fields = {"section_ref": ObjectRef(Kind.SECTION, section)}
        elif kind == Kind.ABOVE_GROUND:
            fields = {"axis_x": rnd_coord(rng, 0, SPAN),
                      "kind": rng.choice(list(AboveGroundKind)),
                      "label": "а/д"}
            if fields["kind"] in (AboveGroundKind.TRESTLE1, AboveGroundKind.TRESTLE2):
                fields["height"] = rng.randrange(2000, 6000)
        else:
            role = rng.choice(list(SurfaceRole))
            fields = {"role": role,
                      "points": monotone_points(rng, rng.randrange(2, 5), 0, SPAN,
                                                98500, 101000)}
        editops.add_object(p, kind, fields)

    def op_delete():
        populated = [k for k in Kind
                     if k != Kind.SURFACE and p.store_of(k)]
        for role in SurfaceRole:
            if p.surfaces.get(role) is not None:
                populated.append(Kind.SURFACE)
                break
        if not populated:
            raise ProfileError("empty profile", rule="skip")
        kind = rng.choice(populated)
        if kind == Kind.SURFACE:
            roles = [r for r in SurfaceRole if p.surfaces.get(r) is not None]
            editops.delete_object(p, surface_ref(rng.choice(roles)))
        else:
            editops.delete_object(p, ObjectRef(kind, _pick(rng, p.store_of(kind))))

    def op_move():
        ref = _pick_ref(rng, p, (Kind.WELL, Kind.TURN_POINT, Kind.SECTION,
                                 Kind.CASING, Kind.ABOVE_GROUND, Kind.TEXT,
                                 Kind.LEADER, Kind.DIMENSION, Kind.ELEVATION_MARK))
        if ref is None:
            raise ProfileError("nothing to move", rule="skip")
        editops.move_object(p, ref, delta=(rng.uniform(-3000, 3000),
                                           rng.uniform(-300, 300)))

    def op_move_vertex():
        if rng.random() < 0.5 and p.pipes:
            pid = _pick(rng, p.pipes)
            pts = p.pipes[pid].axis.points
            editops.move_object(p, ObjectRef(Kind.PIPE, pid),
                                vertex=rng.randrange(len(pts)),
                                delta=(rng.uniform(-500, 500), rng.uniform(-200, 200)))
        else:
            roles = [r for r in SurfaceRole if p.surfaces.get(r) is not None]
            if not roles:
                raise ProfileError("no surfaces", rule="skip")
            role = rng.choice(roles)
            pts = p.surfaces.get(role).points
            editops.move_object(p, surface_ref(role), vertex=rng.randrange(len(pts)),
                                delta=(rng.uniform(-500, 500), rng.uniform(-200, 200)))

    def op_copy():
        ref = _pick_ref(rng, p, tuple(editops.COPYABLE_KINDS))
        if ref is None:
            raise ProfileError("nothing to copy", rule="skip")
        if ref.kind in (Kind.ABOVE_GROUND, Kind.WELL, Kind.CASING):
            editops.copy_object(p, ref, to_x=rnd_coord(rng, 0, SPAN))
        elif ref.kind == Kind.ELEVATION_MARK:
            section = _pick(rng, p.sections)
            editops.copy_object(p, ref, to_section=ObjectRef(Kind.SECTION, section))
        else:
            editops.copy_object(p, ref, to_point=NaturalPoint(
                rnd_coord(rng, 0, SPAN), rnd_coord(rng, 96500, 101500)))

    def op_props():
        ref = _pick_ref(rng, p, (Kind.WELL, Kind.PIPE, Kind.SECTION, Kind.TEXT,
                                 Kind.CASING, Kind.PIPE_TYPE))
        if ref is None:
            raise ProfileError("nothing to edit", rule="skip")
        obj_fields = {
            Kind.WELL: {"width": rng.choice((700, 1000, 1500)),
                        "overshoot_below_pipe": rng.choice((0, 200))},
            Kind.PIPE: {"color": rng.randrange(0, 16)},
            Kind.SECTION: {"color": rng.randrange(0, 16)},
            Kind.TEXT: {"line_step": rng.choice((3.0, 5.0))},
            Kind.CASING: {"length": rng.randrange(2000, 9000)},
            Kind.PIPE_TYPE: {"outer_diameter": rng.choice((160, 300, 630, 820))},
        }[ref.kind]
        editops.set_properties(p, ref, obj_fields)

    def op_continue_pipe():
        pid = _pick(rng, p.pipes)
        if pid is None:
            raise ProfileError("no pipes", rule="skip")
        pipe = p.pipes[pid]
        if rng.random() < 0.5:
            x = pipe.axis.x_max + rng.uniform(500, 4000)
            editops.continue_pipe(p, ObjectRef(Kind.PIPE, pid), editops.Side.RIGHT,
                                  [NaturalPoint(x, rnd_coord(rng, 96200, 97500))])
        else:
            x = pipe.axis.x_min - rng.uniform(500, 4000)
            editops.continue_pipe(p, ObjectRef(Kind.PIPE, pid), editops.Side.LEFT,
                                  [NaturalPoint(x, rnd_coord(rng, 96200, 97500))])

    def op_split_pipe():
        pid = _pick(rng, p.pipes)
        if pid is None:
            raise ProfileError("no pipes", rule="skip")
        pipe = p.pipes[pid]
        editops.split_pipe_segment(p, ObjectRef(Kind.PIPE, pid),
                                   rnd_coord(rng, pipe.axis.x_min, pipe.axis.x_max))

    def op_split_surface():
        roles = [r for r in SurfaceRole if p.surfaces.get(r) is not None]
        if not roles:
            raise ProfileError("no surfaces", rule="skip")
        role = rng.choice(roles)
        line = p.surfaces.get(role)
        editops.split_surface_segment(p, role, rnd_coord(rng, line.x_min, line.x_max))

    def op_delete_joint():
        pid = _pick(rng, p.pipes)
        if pid is None:
            raise ProfileError("no pipes", rule="skip")
        pts = p.pipes[pid].axis.points
        editops.delete_pipe_joint(p, ObjectRef(Kind.PIPE, pid),
                                  rng.randrange(len(pts)))

    def op_delete_surface_vertex():
        roles = [r for r in SurfaceRole if p.surfaces.get(r) is not None]
        if not roles:
            raise ProfileError("no surfaces", rule="skip")
        role = rng.choice(roles)
        pts = p.surfaces.get(role).points
        editops.delete_surface_vertex(p, role, rng.randrange(len(pts)))

    def op_divide():
        pid = _pick(rng, p.pipes)
        if pid is None:
            raise ProfileError("no pipes", rule="skip")
        pts = p.pipes[pid].axis.points
        editops.divide_pipe(p, ObjectRef(Kind.PIPE, pid),
                            rng.randrange(1, max(len(pts) - 1, 2)))

    def op_merge():
        pairs = []
        ids = sorted(p.pipes)
        for a in ids:
            for c in ids:
                if a != c and p.pipes[a].axis.points[-1] == p.pipes[c].axis.points[0]:
                    pairs.append((a, c))
        if pairs:
            a, c = rng.choice(pairs)
        elif len(ids) >= 2:
            a, c = rng.sample(ids, 2)
        else:
            raise ProfileError("no merge candidates", rule="skip")
        left, right = p.pipes[a], p.pipes[c]
        resolved_type = (left.type_ref if left.type_ref != right.type_ref else None)
        resolved_color = (left.color if left.color != right.color else None)
        editops.merge_pipes(p, ObjectRef(Kind.PIPE, a), ObjectRef(Kind.PIPE, c),
                            resolved_type=resolved_type, resolved_color=resolved_color)

    def op_edit_text():
        tid = _pick(rng, p.texts)
        if tid is None:
            raise ProfileError("no texts", rule="skip")
        editops.edit_text(p, ObjectRef(Kind.TEXT, tid),
                          [f"ред. {rng.randrange(100)}"])

    def op_ground():
        roles = [r for r in SurfaceRole if p.surfaces.get(r) is not None]
        if not roles:
            raise ProfileError("no surfaces", rule="skip")
        role = rng.choice(roles)
        line = p.surfaces.get(role)
        editops.edit_ground_elevation(
            p, role, rnd_coord(rng, line.x_min, line.x_max),
            rnd_coord(rng, 98500, 101500),
            rng.choice(list(editops.GroundEditKind)))

    def op_length():
        pid = _pick(rng, p.pipes)
        if pid is None:
            raise ProfileError("no pipes", rule="skip")
        segs = len(p.pipes[pid].axis.points) - 1
        editops.edit_segment_length(
            p, ObjectRef(Kind.PIPE, pid), rng.randrange(segs),
            rng.uniform(1000, 20000), _random_side(rng), rng.random() < 0.5)

    def op_slope():
        pid = _pick(rng, p.pipes)
        if pid is None:
            raise ProfileError("no pipes", rule="skip")
        segs = len(p.pipes[pid].axis.points) - 1
        editops.edit_segment_slope(
            p, ObjectRef(Kind.PIPE, pid), rng.randrange(segs),
            rng.uniform(-30, 30), _random_side(rng))

    def op_distance():
        stations = ([(p.wells[i].axis_x, ObjectRef(Kind.WELL, i)) for i in p.wells]
                    + [(p.turn_points[i].x, ObjectRef(Kind.TURN_POINT, i))
                       for i in p.turn_points])
        stations.sort(key=lambda s: (s[0], s[1].id))
        if len(stations) < 2:
            raise ProfileError("too few stations", rule="skip")
        i = rng.randrange(len(stations) - 1)
        editops.edit_distance(p, stations[i][1], stations[i + 1][1],
                              rng.uniform(500, 20000), _random_side(rng))

    def op_move_profile():
        editops.move_profile(p, (rng.uniform(-500, 500), rng.uniform(-500, 500)))

    def op_add_dim_ref():
        did = _pick(rng, p.dimensions)
        new_ref = _pick_ref(rng, p, (Kind.WELL, Kind.TURN_POINT, Kind.SECTION,
                                     Kind.CASING, Kind.ABOVE_GROUND))
        if did is None or new_ref is None:
            raise ProfileError("no dimension", rule="skip")
        editops.add_dimension_ref(p, ObjectRef(Kind.DIMENSION, did), new_ref)

    ops = (
        ("add", op_add), ("add", op_add), ("add", op_add),
        ("delete", op_delete),
        ("move", op_move), ("move-vertex", op_move_vertex),
        ("copy", op_copy), ("props", op_props),
        ("continue-pipe", op_continue_pipe), ("split-pipe", op_split_pipe),
        ("split-surface", op_split_surface), ("delete-joint", op_delete_joint),
        ("delete-surface-vertex", op_delete_surface_vertex),
        ("divide", op_divide), ("merge", op_merge),
        ("edit-text", op_edit_text), ("ground", op_ground),
        ("length", op_length), ("slope", op_slope), ("distance", op_distance),
        ("move-profile", op_move_profile), ("add-dim-ref", op_add_dim_ref),
    )
    name, fn = rng.choice(ops)
    try:
        fn()
        return name, True
    except ProfileError:
        return name, False


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20260810)
