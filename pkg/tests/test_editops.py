from __future__ import annotations

import copy
import random

import pytest
from hypothesis import given, settings, strategies as st

from pipeprofile import editops, linkage
from pipeprofile.datatable import build_table, segment_slope
from pipeprofile.editops import GroundEditKind, Side
from pipeprofile.model import (
    CasingLink,
    CasingLinkKind,
    Kind,
    NaturalPoint,
    ObjectRef,
    Pipe,
    PipeType,
    Polyline,
    Profile,
    ProfileError,
    SurfaceRole,
    surface_ref,
    validate,
)

from conftest import apply_random_op, random_profile


def fixture_profile() -> Profile:
    p = Profile()
    tid = p.fresh_id()
    p.pipe_types[tid] = PipeType(id=tid, outer_diameter=630, name="Т630")
    p.defaults.pipe.type_ref = ObjectRef(Kind.PIPE_TYPE, tid)
    pid = p.fresh_id()
    p.pipes[pid] = Pipe(id=pid, type_ref=ObjectRef(Kind.PIPE_TYPE, tid),
                        axis=Polyline(points=[NaturalPoint(0, 97000),
                                              NaturalPoint(20000, 96800)]))
    p.surfaces.project_surface = Polyline(points=[NaturalPoint(0, 100000),
                                                  NaturalPoint(10000, 98000),
                                                  NaturalPoint(40000, 97500)])
    return p


PIPE = ObjectRef(Kind.PIPE, 2)


# ---------------------------------------------------------------------------
# add / delete
# ---------------------------------------------------------------------------

def test_add_well_defaults_path():
    p = fixture_profile()
    result = editops.add_object(p, Kind.WELL, {"axis_x": 15000.0})
    (ref,) = result.created
    well = p.resolve(ref)
    d = p.defaults.well
    assert (well.kind, well.width, well.overshoot_below_pipe, well.color) == \
        (d.kind, d.width, d.overshoot_below_pipe, d.color)
    assert validate(p) == []


def test_add_pipe_single_point_rejected():
    p = fixture_profile()
    with pytest.raises(ProfileError) as err:
        editops.add_object(p, Kind.PIPE, {"points": [NaturalPoint(0, 97000)]})
    assert err.value.rule == "short-polyline"


def test_add_casing_on_pipe_derives_diameter():
    p = fixture_profile()
    result = editops.add_object(p, Kind.CASING, {
        "center_x": 5000.0, "link": CasingLink(CasingLinkKind.PROPORTIONAL, 1.5)})
    (ref,) = result.created
    assert linkage.casing_drawn_diameter(p, p.resolve(ref)) == 945


def test_add_pipe_updates_last_used_defaults():
    p = fixture_profile()
    tid = p.fresh_id()
    p.pipe_types[tid] = PipeType(id=tid, outer_diameter=820, name="Т820")
    editops.add_object(p, Kind.PIPE, {
        "points": [NaturalPoint(20000, 96800), NaturalPoint(30000, 96500)],
        "type_ref": ObjectRef(Kind.PIPE_TYPE, tid), "color": 3})
    assert p.defaults.pipe.type_ref == ObjectRef(Kind.PIPE_TYPE, tid)
    assert p.defaults.pipe.color == 3


def test_delete_text_cascades_both_leaders():
    p = fixture_profile()
    text = editops.add_object(p, Kind.TEXT, {
        "lines": ["т"], "origin": NaturalPoint(0, 101000)}).created.pop()
    well = editops.add_object(p, Kind.WELL, {"axis_x": 500.0}).created.pop()
    leaders = [editops.add_object(p, Kind.LEADER, {
        "text_ref": text, "target": well}).created.pop() for _ in range(2)]
    result = editops.delete_object(p, text)
    assert result.deleted == {text, *leaders}
    assert p.leaders == {} and p.texts == {}
    assert validate(p) == []


def test_delete_well_kills_two_ref_dimension():
    p = fixture_profile()
    w1 = editops.add_object(p, Kind.WELL, {"axis_x": 0.0}).created.pop()
    w2 = editops.add_object(p, Kind.WELL, {"axis_x": 15000.0}).created.pop()
    dim = editops.add_object(p, Kind.DIMENSION, {"refs": [w1, w2]}).created.pop()
    result = editops.delete_object(p, w2)
    assert dim in result.deleted
    assert p.dimensions == {}
    assert validate(p) == []


def test_delete_groundwater_only():
    p = fixture_profile()
    editops.add_object(p, Kind.SURFACE, {
        "role": SurfaceRole.GROUNDWATER,
        "points": [NaturalPoint(0, 98500), NaturalPoint(30000, 98400)]})
    before = copy.deepcopy(p.pipes)
    result = editops.delete_object(p, surface_ref(SurfaceRole.GROUNDWATER))
    assert result.deleted == {surface_ref(SurfaceRole.GROUNDWATER)}
    assert p.surfaces.groundwater is None
    assert p.pipes == before


def test_delete_three_ref_dimension_drops_victim_ref():
    p = fixture_profile()
    wells = [editops.add_object(p, Kind.WELL, {"axis_x": x}).created.pop()
             for x in (0.0, 8000.0, 15000.0)]
    dim_ref = editops.add_object(p, Kind.DIMENSION, {"refs": wells}).created.pop()
    result = editops.delete_object(p, wells[1])
    dim = p.resolve(dim_ref)
    assert dim.refs == [wells[0], wells[2]]
    assert len(dim.text_offsets) == 1
    assert dim_ref in result.changed
    assert validate(p) == []


def test_delete_in_use_pipe_type_rejected():
    p = fixture_profile()
    with pytest.raises(ProfileError) as err:
        editops.delete_object(p, ObjectRef(Kind.PIPE_TYPE, 1))
    assert err.value.rule == "pipe-type-in-use"


# ---------------------------------------------------------------------------
# move / copy / properties
# ---------------------------------------------------------------------------

def test_move_well_regenerates_distances():
    p = fixture_profile()
    editops.add_object(p, Kind.WELL, {"axis_x": 0.0})
    w2 = editops.add_object(p, Kind.WELL, {"axis_x": 15000.0}).created.pop()
    assert [c.text for c in build_table(p).distance] == ["15.00"]
    editops.move_object(p, w2, delta=(3000.0, 0.0))
    assert [c.text for c in build_table(p).distance] == ["18.00"]


def test_move_interior_joint_monotonicity_error():
    p = fixture_profile()
    editops.split_pipe_segment(p, PIPE, 5000.0)
    before = copy.deepcopy(p.pipes[2].axis.points)
    with pytest.raises(ProfileError) as err:
        editops.move_object(p, PIPE, vertex=1, to=NaturalPoint(25000, 96700))
    assert err.value.rule == "non-monotone-x"
    assert p.pipes[2].axis.points == before   # атомicity: untouched


def test_move_text_keeps_leader_offsets():
    p = fixture_profile()
    text = editops.add_object(p, Kind.TEXT, {
        "lines": ["т"], "origin": NaturalPoint(0, 101000)}).created.pop()
    well = editops.add_object(p, Kind.WELL, {"axis_x": 500.0}).created.pop()
    leader = editops.add_object(p, Kind.LEADER, {
        "text_ref": text, "target": well}).created.pop()
    offset_before = p.resolve(leader).offset
    result = editops.move_object(p, text, delta=(5.0, -3.0))
    assert p.resolve(leader).offset == offset_before   # tip = anchor + offset
    assert leader in result.changed


def test_move_resorts_dimension_refs():
    p = fixture_profile()
    w1 = editops.add_object(p, Kind.WELL, {"axis_x": 1000.0}).created.pop()
    w2 = editops.add_object(p, Kind.WELL, {"axis_x": 15000.0}).created.pop()
    dim = editops.add_object(p, Kind.DIMENSION, {"refs": [w1, w2]}).created.pop()
    editops.move_object(p, w1, to=NaturalPoint(30000.0, 0.0))
    assert p.resolve(dim).refs == [w2, w1]
    assert validate(p) == []


def test_move_collision_with_dimension_axis_rejected():
    p = fixture_profile()
    w1 = editops.add_object(p, Kind.WELL, {"axis_x": 1000.0}).created.pop()
    w2 = editops.add_object(p, Kind.WELL, {"axis_x": 15000.0}).created.pop()
    editops.add_object(p, Kind.DIMENSION, {"refs": [w1, w2]})
    with pytest.raises(ProfileError) as err:
        editops.move_object(p, w1, to=NaturalPoint(15000.0, 0.0))
    assert err.value.rule == "coincident-axes"


def test_copy_well_leaves_annotations_behind():
    p = fixture_profile()
    text = editops.add_object(p, Kind.TEXT, {
        "lines": ["т"], "origin": NaturalPoint(0, 101000)}).created.pop()
    well = editops.add_object(p, Kind.WELL, {"axis_x": 500.0}).created.pop()
    editops.add_object(p, Kind.LEADER, {"text_ref": text, "target": well})
    result = editops.copy_object(p, well, to_x=30000.0)
    (clone,) = result.created
    assert clone != well
    assert all(ld.target != clone for ld in p.leaders.values())
    assert p.resolve(clone).axis_x == 30000.0


def test_copy_pipe_rejected():
    p = fixture_profile()
    with pytest.raises(ProfileError) as err:
        editops.copy_object(p, PIPE, to_x=1.0)
    assert err.value.rule == "non-copyable"


def test_copy_elevation_mark_rebinds():
    p = fixture_profile()
    s1 = editops.add_object(p, Kind.SECTION, {
        "center": NaturalPoint(3000, 96600)}).created.pop()
    s2 = editops.add_object(p, Kind.SECTION, {
        "center": NaturalPoint(9000, 96600)}).created.pop()
    mark = editops.add_object(p, Kind.ELEVATION_MARK, {
        "section_ref": s1}).created.pop()
    clone = editops.copy_object(p, mark, to_section=s2).created.pop()
    assert p.resolve(clone).section_ref == s2
    assert p.resolve(mark).section_ref == s1


def test_set_properties_pipe_type_recouples_casing():
    p = fixture_profile()
    casing = editops.add_object(p, Kind.CASING, {
        "center_x": 5000.0,
        "link": CasingLink(CasingLinkKind.PROPORTIONAL, 1.5)}).created.pop()
    assert linkage.casing_drawn_diameter(p, p.resolve(casing)) == 945
    tid = p.fresh_id()
    p.pipe_types[tid] = PipeType(id=tid, outer_diameter=820, name="Т820")
    result = editops.set_properties(p, PIPE, {"type_ref": ObjectRef(Kind.PIPE_TYPE, tid)})
    assert linkage.casing_drawn_diameter(p, p.resolve(casing)) == 1230
    assert casing in result.changed


def test_set_properties_invalid_wall_rejected():
    p = fixture_profile()
    section = editops.add_object(p, Kind.SECTION, {
        "center": NaturalPoint(3000, 96600), "diameter": 200, "wall": 6}).created.pop()
    with pytest.raises(ProfileError):
        editops.set_properties(p, section, {"wall": 100})
    assert p.resolve(section).wall == 6


def test_set_properties_line_kind_render_only():
    p = fixture_profile()
    from pipeprofile.model import LineKind
    well = editops.add_object(p, Kind.WELL, {"axis_x": 100.0}).created.pop()
    table_before = build_table(p)
    editops.set_properties(p, well, {"line_kind": LineKind.SOLID_THIN})
    assert p.resolve(well).line_kind == LineKind.SOLID_THIN
    assert build_table(p) == table_before


# ---------------------------------------------------------------------------
# pipe / surface topology
# ---------------------------------------------------------------------------

def test_continue_pipe_right_left_and_error():
    p = fixture_profile()
    editops.continue_pipe(p, PIPE, Side.RIGHT, [NaturalPoint(30000, 96700)])
    assert len(p.pipes[2].axis.points) == 3
    editops.continue_pipe(p, PIPE, Side.LEFT, [NaturalPoint(-10000, 97100)])
    assert p.pipes[2].axis.points[0] == NaturalPoint(-10000, 97100)
    with pytest.raises(ProfileError):
        editops.continue_pipe(p, PIPE, Side.RIGHT, [NaturalPoint(15000, 96900)])


def test_split_pipe_worked_example():
    p = fixture_profile()
    editops.split_pipe_segment(p, PIPE, 5000.0)
    assert p.pipes[2].axis.points[1] == NaturalPoint(5000.0, 96950.0)
    with pytest.raises(ProfileError) as err:
        editops.split_pipe_segment(p, PIPE, 0.0)
    assert err.value.rule == "existing-vertex"


def test_split_then_move_makes_two_slopes():
    p = fixture_profile()
    editops.split_pipe_segment(p, PIPE, 10000.0)
    editops.move_object(p, PIPE, vertex=1, to=NaturalPoint(10000, 96700))
    pts = p.pipes[2].axis.points
    s1 = segment_slope(pts[0].y, pts[1].y, pts[1].x - pts[0].x)
    s2 = segment_slope(pts[1].y, pts[2].y, pts[2].x - pts[1].x)
    assert s1 != s2


def test_split_surface_worked_example():
    p = Profile()
    p.surfaces.project_surface = Polyline(points=[NaturalPoint(0, 100000),
                                                  NaturalPoint(10000, 98000)])
    editops.split_surface_segment(p, SurfaceRole.PROJECT, 5000.0)
    assert p.surfaces.project_surface.points[1] == NaturalPoint(5000.0, 99000.0)
    with pytest.raises(ProfileError) as err:
        editops.split_surface_segment(p, SurfaceRole.NATURAL, 5000.0)
    assert err.value.rule == "surface-missing"
    with pytest.raises(ProfileError):
        editops.split_surface_segment(p, SurfaceRole.PROJECT, 10000.0)


def test_split_then_delete_restores_axis():
    p = fixture_profile()
    original = list(p.pipes[2].axis.points)
    editops.split_pipe_segment(p, PIPE, 7321.125)
    editops.delete_pipe_joint(p, PIPE, 1)
    assert p.pipes[2].axis.points == original


def test_delete_joint_variants():
    p = fixture_profile()
    editops.split_pipe_segment(p, PIPE, 5000.0)
    editops.delete_pipe_joint(p, PIPE, 1)          # middle: single segment again
    assert len(p.pipes[2].axis.points) == 2
    editops.continue_pipe(p, PIPE, Side.RIGHT, [NaturalPoint(30000, 96600)])
    editops.delete_pipe_joint(p, PIPE, 2)          # end of 3-vertex axis
    assert len(p.pipes[2].axis.points) == 2
    result = editops.delete_pipe_joint(p, PIPE, 0)   # 2-vertex pipe: gone
    assert PIPE in result.deleted
    assert p.pipes == {}
    assert validate(p) == []


def test_delete_surface_vertex_variants():
    p = Profile()
    p.surfaces.groundwater = Polyline(points=[NaturalPoint(0, 98500),
                                              NaturalPoint(9000, 98400)])
    result = editops.delete_surface_vertex(p, SurfaceRole.GROUNDWATER, 1)
    assert p.surfaces.groundwater is None
    assert result.deleted == {surface_ref(SurfaceRole.GROUNDWATER)}
    p.surfaces.project_surface = Polyline(points=[
        NaturalPoint(0, 100000), NaturalPoint(4000, 99000),
        NaturalPoint(8000, 99500), NaturalPoint(12000, 99100)])
    editops.delete_surface_vertex(p, SurfaceRole.PROJECT, 1)
    assert len(p.surfaces.project_surface.points) == 3
    with pytest.raises(ProfileError):
        editops.delete_surface_vertex(p, SurfaceRole.NATURAL, 0)


def test_divide_and_merge_roundtrip():
    p = fixture_profile()
    editops.split_pipe_segment(p, PIPE, 8000.0)
    before = copy.deepcopy(p.pipes)
    result = editops.divide_pipe(p, PIPE, 1)
    (new_ref,) = result.created
    assert len(p.pipes) == 2
    assert p.pipes[2].axis.points[-1] == p.resolve(new_ref).axis.points[0]
    merged = editops.merge_pipes(p, PIPE, new_ref)
    assert merged.deleted == {new_ref}
    assert p.pipes == before


def test_divide_interior_only_and_table_invariance():
    p = fixture_profile()
    editops.split_pipe_segment(p, PIPE, 8000.0)
    with pytest.raises(ProfileError) as err:
        editops.divide_pipe(p, PIPE, 0)
    assert err.value.rule == "interior-only"
    before = build_table(p)
    editops.divide_pipe(p, PIPE, 1)
    after = build_table(p)
    assert after.length_slope == before.length_slope
    assert after.pipe_designation == before.pipe_designation
    assert after.distance == before.distance


def test_merge_requires_resolution_and_coincidence():
    p = fixture_profile()
    tid = p.fresh_id()
    p.pipe_types[tid] = PipeType(id=tid, outer_diameter=820, name="Т820")
    other = editops.add_object(p, Kind.PIPE, {
        "points": [NaturalPoint(20000, 96800), NaturalPoint(30000, 96500)],
        "type_ref": ObjectRef(Kind.PIPE_TYPE, tid)}).created.pop()
    with pytest.raises(ProfileError) as err:
        editops.merge_pipes(p, PIPE, other)
    assert err.value.rule == "resolution-required"
    editops.merge_pipes(p, PIPE, other, resolved_type=ObjectRef(Kind.PIPE_TYPE, tid))
    assert len(p.pipes) == 1

    q = fixture_profile()
    gap = editops.add_object(q, Kind.PIPE, {
        "points": [NaturalPoint(25000, 96800), NaturalPoint(30000, 96500)]}).created.pop()
    with pytest.raises(ProfileError) as err:
        editops.merge_pipes(q, PIPE, gap)
    assert str(err.value) == "ends not coincident"


def test_edit_text_variants():
    p = fixture_profile()
    text = editops.add_object(p, Kind.TEXT, {
        "lines": ["одна"], "origin": NaturalPoint(0, 101000)}).created.pop()
    editops.edit_text(p, text, ["одна", "вторая"])
    assert p.resolve(text).lines == ["одна", "вторая"]
    with pytest.raises(ProfileError):
        editops.edit_text(p, text, [])
    editops.edit_text(p, text, ["футляр %%c820"])
    assert p.resolve(text).lines == ["футляр %%c820"]


# ---------------------------------------------------------------------------
# table-driven edits
# ---------------------------------------------------------------------------

def ground_profile() -> Profile:
    p = Profile()
    p.surfaces.project_surface = Polyline(points=[NaturalPoint(0, 100000),
                                                  NaturalPoint(10000, 98000)])
    return p


def test_ground_shift_segment_worked_example():
    p = ground_profile()
    editops.edit_ground_elevation(p, SurfaceRole.PROJECT, 5000.0, 99500.0,
                                  GroundEditKind.SHIFT_SEGMENT)
    assert p.surfaces.project_surface.points == [
        NaturalPoint(0, 100500.0), NaturalPoint(10000, 98500.0)]


def test_ground_add_vertex_passes_through_station():
    p = ground_profile()
    editops.edit_ground_elevation(p, SurfaceRole.PROJECT, 5000.0, 99500.0,
                                  GroundEditKind.ADD_VERTEX)
    line = p.surfaces.project_surface
    assert NaturalPoint(5000.0, 99500.0) in line.points
    assert line.y_at(5000.0) == 99500.0


def test_ground_move_right_end_solves_linear():
    p = ground_profile()
    editops.edit_ground_elevation(p, SurfaceRole.PROJECT, 5000.0, 99500.0,
                                  GroundEditKind.MOVE_RIGHT_END)
    assert p.surfaces.project_surface.points[1] == NaturalPoint(10000, 99000.0)
    assert p.surfaces.project_surface.y_at(5000.0) == 99500.0


def test_ground_zero_lever_arm_rejected():
    p = ground_profile()
    with pytest.raises(ProfileError) as err:
        editops.edit_ground_elevation(p, SurfaceRole.PROJECT, 0.0, 99500.0,
                                      GroundEditKind.MOVE_RIGHT_END)
    assert err.value.rule == "zero-lever-arm"
    with pytest.raises(ProfileError):
        editops.edit_ground_elevation(p, SurfaceRole.PROJECT, 10000.0, 99500.0,
                                      GroundEditKind.MOVE_LEFT_END)


def test_length_edit_changing_slope():
    p = fixture_profile()
    editops.edit_segment_length(p, PIPE, 0, 25000.0, Side.RIGHT, keep_slope=False)
    pts = p.pipes[2].axis.points
    assert pts[1] == NaturalPoint(25000.0, 96800.0)
    assert segment_slope(pts[0].y, pts[1].y, 25000.0) == pytest.approx(0.008)
    with pytest.raises(ProfileError):
        editops.edit_segment_length(p, PIPE, 0, 0.0, Side.RIGHT, keep_slope=False)


def test_length_edit_keep_slope_worked_example():
    p = fixture_profile()
    editops.edit_segment_length(p, PIPE, 0, 25000.0, Side.RIGHT, keep_slope=True)
    pts = p.pipes[2].axis.points
    assert pts[1] == NaturalPoint(25000.0, 96750.0)
    assert segment_slope(pts[0].y, pts[1].y, 25000.0) == pytest.approx(0.01, rel=1e-12)


def test_length_edit_left_side_moves_left_joints():
    p = fixture_profile()
    editops.edit_segment_length(p, PIPE, 0, 25000.0, Side.LEFT, keep_slope=True)
    pts = p.pipes[2].axis.points
    assert pts[1] == NaturalPoint(20000.0, 96800.0)
    assert pts[0].x == -5000.0
    assert segment_slope(pts[0].y, pts[1].y, 25000.0) == pytest.approx(0.01, rel=1e-12)


def test_length_edit_shifts_side_pipes_and_casings():
    p = fixture_profile()
    downstream = editops.add_object(p, Kind.PIPE, {
        "points": [NaturalPoint(20000, 96800), NaturalPoint(30000, 96500)]}).created.pop()
    casing = editops.add_object(p, Kind.CASING, {
        "center_x": 25000.0,
        "link": CasingLink(CasingLinkKind.OFFSET, 200.0)}).created.pop()
    editops.edit_segment_length(p, PIPE, 0, 25000.0, Side.RIGHT, keep_slope=True)
    moved = p.resolve(downstream)
    assert moved.axis.points[0] == p.pipes[2].axis.points[-1]   # still coincident
    assert p.resolve(casing).center_x == 30000.0


@settings(max_examples=60, deadline=None)
@given(st.floats(1000, 40000), st.sampled_from([Side.LEFT, Side.RIGHT]))
def test_keep_slope_preserved_within_1e_9(new_len, side):
    p = fixture_profile()
    pts = p.pipes[2].axis.points
    before = segment_slope(pts[0].y, pts[1].y, pts[1].x - pts[0].x)
    editops.edit_segment_length(p, PIPE, 0, new_len, side, keep_slope=True)
    pts = p.pipes[2].axis.points
    after = segment_slope(pts[0].y, pts[1].y, pts[1].x - pts[0].x)
    assert after == pytest.approx(before, rel=1e-9)


def test_slope_edit_worked_example():
    p = fixture_profile()
    editops.continue_pipe(p, PIPE, Side.RIGHT, [NaturalPoint(30000, 96600)])
    editops.edit_segment_slope(p, PIPE, 0, 15.0, Side.RIGHT)
    pts = p.pipes[2].axis.points
    assert pts[1].y == 96700.0            # 97000 - 0.015·20000
    assert pts[2].y == 96500.0            # later joints translate by Δy = -100
    editops.edit_segment_slope(p, PIPE, 0, 15.0, Side.RIGHT)   # fixpoint
    assert p.pipes[2].axis.points[1].y == 96700.0
    editops.edit_segment_slope(p, PIPE, 0, 0.0, Side.RIGHT)
    pts = p.pipes[2].axis.points
    assert pts[0].y == pts[1].y           # horizontal segment


def test_slope_edit_percent_unit():
    from pipeprofile.model import SlopeUnit
    p = fixture_profile()
    p.settings.table.slope_unit = SlopeUnit.PERCENT
    editops.edit_segment_slope(p, PIPE, 0, 1.5, Side.RIGHT)
    assert p.pipes[2].axis.points[1].y == 96700.0   # 1.5 % == 15 ‰


def test_distance_edit_worked_example():
    p = fixture_profile()
    w1 = editops.add_object(p, Kind.WELL, {"axis_x": 0.0}).created.pop()
    w2 = editops.add_object(p, Kind.WELL, {"axis_x": 15000.0}).created.pop()
    w3 = editops.add_object(p, Kind.WELL, {"axis_x": 18000.0}).created.pop()
    editops.edit_distance(p, w1, w2, 20000.0, Side.RIGHT)
    assert p.resolve(w2).axis_x == 20000.0
    assert p.resolve(w3).axis_x == 23000.0     # everything beyond shifts too
    assert p.resolve(w1).axis_x == 0.0
    editops.edit_distance(p, w1, w2, 20000.0, Side.RIGHT)   # no-op fixpoint
    assert p.resolve(w2).axis_x == 20000.0


def test_distance_edit_rejections():
    p = fixture_profile()
    w1 = editops.add_object(p, Kind.WELL, {"axis_x": 0.0}).created.pop()
    w2 = editops.add_object(p, Kind.WELL, {"axis_x": 15000.0}).created.pop()
    w3 = editops.add_object(p, Kind.WELL, {"axis_x": 18000.0}).created.pop()
    with pytest.raises(ProfileError):
        editops.edit_distance(p, w1, w2, -5.0, Side.RIGHT)
    with pytest.raises(ProfileError) as err:
        editops.edit_distance(p, w1, w3, 10000.0, Side.RIGHT)   # w2 between
    assert err.value.rule == "not-adjacent"


def test_move_profile_anchor_only_and_inverse():
    p = fixture_profile()
    snapshot = copy.deepcopy(p)
    editops.move_profile(p, (0.0, 0.0))
    assert p == snapshot
    editops.move_profile(p, (100.0, 50.0))
    assert p.settings.table.top_right_of_header == NaturalPoint(100.0, 50.0)
    assert p.pipes == snapshot.pipes
    editops.move_profile(p, (-100.0, -50.0))
    assert p == snapshot


def test_add_dimension_ref_keeps_sorted():
    p = fixture_profile()
    w1 = editops.add_object(p, Kind.WELL, {"axis_x": 0.0}).created.pop()
    w2 = editops.add_object(p, Kind.WELL, {"axis_x": 15000.0}).created.pop()
    w3 = editops.add_object(p, Kind.WELL, {"axis_x": 8000.0}).created.pop()
    dim = editops.add_object(p, Kind.DIMENSION, {"refs": [w1, w2]}).created.pop()
    editops.add_dimension_ref(p, dim, w3)
    d = p.resolve(dim)
    assert d.refs == [w1, w3, w2]
    assert len(d.text_offsets) == 2
    assert validate(p) == []


# ---------------------------------------------------------------------------
# closure and sync properties (short runs; the full ones live in acceptance)
# ---------------------------------------------------------------------------

def test_random_ops_maintain_validity(rng: random.Random):
    p = random_profile(rng, max_objects=15)
    for step in range(200):
        name, _ = apply_random_op(rng, p)
        assert validate(p) == [], f"step {step} after {name}"


def test_random_ops_result_sets_disjoint(rng: random.Random):
    p = random_profile(rng, max_objects=15)
    for _ in range(120):
        snapshot = copy.deepcopy(p)
        try:
            name, applied = apply_random_op(rng, p)
        except ProfileError:
            assert p == snapshot
            continue
        if not applied:
            assert p == snapshot, f"rejected {name} must not mutate"
