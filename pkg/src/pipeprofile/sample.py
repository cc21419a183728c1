"""A small bundled demonstration profile.

One two-segment sewer pipe, two manholes, both ground surfaces, a linear
dimension between the wells and two call-out texts; the inventory a
typical small profile sheet carries.
"""

from __future__ import annotations

from .model import (
    CasingLink,
    CasingLinkKind,
    ChainDimension,
    FontSetting,
    Kind,
    NaturalPoint,
    ObjectRef,
    Pipe,
    PipelineKind,
    PipeSpecRecord,
    PipeType,
    Polyline,
    Profile,
    TextNote,
    Well,
    WellKind,
)


def sample_profile() -> Profile:
    profile = Profile()
    s = profile.settings
    s.table.top_right_of_header = NaturalPoint(0.0, 95000.0)
    s.build.scale_h = 1000
    s.build.scale_v = 200
    s.build.pipeline_kind = PipelineKind.SEWER
    s.build.base_soil = "суглинок"
    s.build.conditional_ground_level = 100000.0
    s.build.conditional_pipe_bottom_level = 96000.0
    s.aux_scale.enabled = True
    s.aux_scale.division = 1000

    profile.surfaces.project_surface = Polyline(points=[
        NaturalPoint(0.0, 100000.0),
        NaturalPoint(15000.0, 99800.0),
        NaturalPoint(35000.0, 99600.0),
    ])
    profile.surfaces.natural_surface = Polyline(points=[
        NaturalPoint(0.0, 99900.0),
        NaturalPoint(20000.0, 99750.0),
        NaturalPoint(35000.0, 99550.0),
    ])

    ptype = PipeType(
        id=1, outer_diameter=300, name="Труба 300x8", material="сталь",
        insulation="весьма усиленная",
        spec=PipeSpecRecord(position_designation="1", designation="ГОСТ 10704-76",
                            unit_mass=57.2, unit_of_measure="м"))
    profile.pipe_types[ptype.id] = ptype

    pipe = Pipe(
        id=2, type_ref=ObjectRef(Kind.PIPE_TYPE, 1),
        axis=Polyline(points=[
            NaturalPoint(0.0, 97000.0),
            NaturalPoint(20000.0, 96800.0),
            NaturalPoint(35000.0, 96500.0),
        ]),
        color=5)
    profile.pipes[pipe.id] = pipe

    profile.wells[3] = Well(id=3, kind=WellKind.MANHOLE, axis_x=0.0, width=1000,
                            overshoot_below_pipe=200, designation="1")
    profile.wells[4] = Well(id=4, kind=WellKind.MANHOLE, axis_x=15000.0, width=1000,
                            overshoot_below_pipe=200, designation="2")

    profile.dimensions[5] = ChainDimension(
        id=5,
        refs=[ObjectRef(Kind.WELL, 3), ObjectRef(Kind.WELL, 4)],
        dim_line_offset=10.0,
        text_offsets=[1.0])

    profile.texts[6] = TextNote(
        id=6, lines=["Колодцы сборные ж/б", "по т.пр. 902-09-22.84"],
        font=FontSetting(height=2.5), line_step=4.0, color=0,
        origin=NaturalPoint(2000.0, 101500.0))
    profile.texts[7] = TextNote(
        id=7, lines=["Труба %%c300 стальная"],
        font=FontSetting(height=2.5), line_step=4.0, color=0,
        origin=NaturalPoint(24000.0, 101000.0))

    profile.defaults.pipe.type_ref = ObjectRef(Kind.PIPE_TYPE, 1)
    profile.defaults.pipe.color = 5
    profile.defaults.casing.link = CasingLink(CasingLinkKind.PROPORTIONAL, 1.5)
    profile.next_id = 8
    return profile


__all__ = ["sample_profile"]
