"""Plain-data encoding of the model for the CLI ``--json`` output and the
HTTP service bodies, plus decoding of operation arguments.  Whole profiles
travel one way only: the engine is fed through operations, never through a
posted profile."""

from __future__ import annotations

import dataclasses
from enum import Enum

from .datatable import MainDataTable
from .editops import EditResult, GroundEditKind, Side
from .model import (
    AboveGroundKind,
    CasingLink,
    CasingLinkKind,
    FontSetting,
    Kind,
    LineKind,
    NaturalPoint,
    ObjectRef,
    PaperOffset,
    PipeSpecRecord,
    PipelineKind,
    Polyline,
    Profile,
    SectionCasing,
    SectionKind,
    ShelfDir,
    SlopeUnit,
    SurfaceRole,
    Violation,
    WellKind,
)

KIND_NAMES = {kind: kind.name.lower() for kind in Kind}
_KIND_BY_NAME = {name: kind for kind, name in KIND_NAMES.items()}
_ROLE_BY_NAME = {role.name.lower(): role for role in SurfaceRole}


def ref_str(ref: ObjectRef) -> str:
    if ref.kind == Kind.SURFACE:
        return f"surface:{SurfaceRole(ref.id).name.lower()}"
    return f"{KIND_NAMES[ref.kind]}:{ref.id}"


def parse_ref(text: str) -> ObjectRef:
    kind_name, _, id_part = text.partition(":")
    kind = _KIND_BY_NAME.get(kind_name)
    if kind is None:
        raise ValueError(f"unknown object kind {kind_name!r}")
    if kind == Kind.SURFACE:
        role = _ROLE_BY_NAME.get(id_part)
        if role is None:
            raise ValueError(f"unknown surface role {id_part!r}")
        return ObjectRef(Kind.SURFACE, role.value)
    return ObjectRef(kind, int(id_part))


def parse_role(text: str) -> SurfaceRole:
    role = _ROLE_BY_NAME.get(text)
    if role is None:
        raise ValueError(f"unknown surface role {text!r}")
    return role


def parse_kind(name: str) -> Kind:
    kind = _KIND_BY_NAME.get(name)
    if kind is None:
        raise ValueError(f"unknown object kind {name!r}")
    return kind


def plain(obj):
    """Recursive conversion to JSON-ready plain data."""
    if isinstance(obj, ObjectRef):
        return ref_str(obj)
    if isinstance(obj, Enum):
        return obj.name.lower()
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: plain(getattr(obj, f.name))
                for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in sorted(obj.items(), key=lambda kv: str(kv[0]))}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((plain(v) for v in obj), key=str)
    return obj


def profile_to_dict(profile: Profile) -> dict:
    out = {
        "settings": plain(profile.settings),
        "defaults": plain(profile.defaults),
        "surfaces": plain(profile.surfaces),
        "next_id": profile.next_id,
    }
    for kind in Kind:
        if kind == Kind.SURFACE:
            continue
        store = profile.store_of(kind)
        out[KIND_NAMES[kind]] = [plain(store[oid]) for oid in sorted(store)]
    return out


def table_to_dict(table: MainDataTable) -> dict:
    return {
        "stations": plain(table.stations),
        "pipe_bottom": _row(table.pipe_bottom),
        "project_elev": _row(table.project_elev),
        "natural_elev": _row(table.natural_elev),
        "pipe_designation": plain(table.pipe_designation),
        "base": table.base,
        "length_slope": plain(table.length_slope),
        "distance": plain(table.distance),
        "designations": _row(table.designations),
        "has_header": table.has_header,
        "min_headerless_length": table.min_headerless_length,
    }


def _row(cells: dict[float, str]) -> list[dict]:
    return [{"x": x, "text": cells[x]} for x in sorted(cells)]


def result_to_dict(result: EditResult) -> dict:
    return {
        "changed": sorted(ref_str(r) for r in result.changed),
        "deleted": sorted(ref_str(r) for r in result.deleted),
        "created": sorted(ref_str(r) for r in result.created),
    }


def violations_to_list(violations: list[Violation]) -> list[dict]:
    return [{"rule": v.rule, "ref": ref_str(v.ref) if v.ref else None,
             "detail": v.detail} for v in violations]


# ---------------------------------------------------------------------------
# Decoding of operation arguments (CLI --fields and HTTP op bodies)
# ---------------------------------------------------------------------------

def enum_by_name(enum_cls, value):
    if isinstance(value, enum_cls):
        return value
    try:
        return enum_cls[str(value).upper()]
    except KeyError:
        names = ", ".join(m.name.lower() for m in enum_cls)
        raise ValueError(f"{value!r} is not one of: {names}")


def decode_point(value) -> NaturalPoint:
    if isinstance(value, NaturalPoint):
        return value
    if isinstance(value, dict):
        return NaturalPoint(float(value["x"]), float(value["y"]))
    x, y = value
    return NaturalPoint(float(x), float(y))


def decode_points(value) -> list[NaturalPoint]:
    return [decode_point(v) for v in value]


def _decode_offset(value) -> PaperOffset:
    if isinstance(value, PaperOffset):
        return value
    if isinstance(value, dict):
        return PaperOffset(float(value["dx"]), float(value["dy"]))
    dx, dy = value
    return PaperOffset(float(dx), float(dy))


def _decode_link(value) -> CasingLink:
    if isinstance(value, CasingLink):
        return value
    return CasingLink(enum_by_name(CasingLinkKind, value["kind"]),
                      float(value["value"]))


def _decode_section_casing(value):
    if value is None or isinstance(value, SectionCasing):
        return value
    return SectionCasing(int(value["diameter"]), int(value["wall"]),
                         int(value["length"]))


def _decode_font(value) -> FontSetting:
    if isinstance(value, FontSetting):
        return value
    return FontSetting(float(value.get("height", 2.5)),
                       float(value.get("widening", 1.0)),
                       bool(value.get("slant", False)))


def _decode_spec(value) -> PipeSpecRecord:
    if isinstance(value, PipeSpecRecord):
        return value
    return PipeSpecRecord(**value)


def _decode_ref(value) -> ObjectRef:
    return value if isinstance(value, ObjectRef) else parse_ref(value)


def _decode_polyline(value) -> Polyline:
    if isinstance(value, Polyline):
        return value
    return Polyline(points=decode_points(value["points"]),
                    color=int(value.get("color", 0)))


_KIND_ENUMS = {
    Kind.ABOVE_GROUND: AboveGroundKind,
    Kind.SECTION: SectionKind,
    Kind.WELL: WellKind,
}

_FIELD_DECODERS = {
    "center": decode_point,
    "origin": decode_point,
    "points": decode_points,
    "offset": _decode_offset,
    "link": _decode_link,
    "casing": _decode_section_casing,
    "font": _decode_font,
    "spec": _decode_spec,
    "type_ref": _decode_ref,
    "text_ref": _decode_ref,
    "target": _decode_ref,
    "section_ref": _decode_ref,
    "refs": lambda v: [_decode_ref(r) for r in v],
    "axis": _decode_polyline,
    "line_kind": lambda v: enum_by_name(LineKind, v),
    "shelf_dir": lambda v: enum_by_name(ShelfDir, v),
    "role": lambda v: v if isinstance(v, SurfaceRole) else parse_role(v),
    "lines": lambda v: [str(s) for s in v],
}


def decode_fields(kind: Kind, raw: dict) -> dict:
    """JSON field values to model values for ``add``/``props`` arguments."""
    out = {}
    for name, value in raw.items():
        if name == "kind":
            enum_cls = _KIND_ENUMS.get(kind)
            if enum_cls is None:
                raise ValueError(f"{KIND_NAMES[kind]} has no kind field")
            out[name] = enum_by_name(enum_cls, value)
        elif name in _FIELD_DECODERS and value is not None:
            out[name] = _FIELD_DECODERS[name](value)
        else:
            out[name] = value
    return out


def decode_settings_updates(raw: dict) -> dict:
    """Enum-bearing leaves of a nested settings update, decoded in place."""
    decoders = {
        "slope_unit": lambda v: enum_by_name(SlopeUnit, v),
        "pipeline_kind": lambda v: enum_by_name(PipelineKind, v),
        "line_kind": lambda v: enum_by_name(LineKind, v),
        "shelf_dir": lambda v: enum_by_name(ShelfDir, v),
        "top_right_of_header": decode_point,
        "font": _decode_font,
        "link": _decode_link,
        "casing": _decode_section_casing,
        "type_ref": _decode_ref,
    }
    kind_enums = {"above_ground": AboveGroundKind, "section": SectionKind,
                  "well": WellKind}

    def walk(node, context):
        if not isinstance(node, dict):
            return node
        out = {}
        for key, value in node.items():
            if key == "kind" and context in kind_enums:
                out[key] = enum_by_name(kind_enums[context], value)
            elif key in decoders and not isinstance(value, dict):
                out[key] = decoders[key](value)
            elif key in ("link", "casing", "font", "top_right_of_header") \
                    and isinstance(value, dict):
                out[key] = decoders[key](value)
            else:
                out[key] = walk(value, key)
        return out

    return walk(raw, "")


def decode_side(value) -> Side:
    return enum_by_name(Side, value)


def decode_ground_choice(value) -> GroundEditKind:
    aliases = {"add-vertex": "ADD_VERTEX", "move-left": "MOVE_LEFT_END",
               "move-right": "MOVE_RIGHT_END", "shift": "SHIFT_SEGMENT"}
    name = aliases.get(str(value).lower(), str(value).upper().replace("-", "_"))
    try:
        return GroundEditKind[name]
    except KeyError:
        raise ValueError(f"{value!r} is not a ground edit choice "
                         f"(add-vertex, move-left, move-right, shift)")


__all__ = ["KIND_NAMES", "decode_fields", "decode_ground_choice", "decode_point",
           "decode_points", "decode_settings_updates", "decode_side", "enum_by_name",
           "parse_kind", "parse_ref", "parse_role", "plain", "profile_to_dict",
           "ref_str", "result_to_dict", "table_to_dict", "violations_to_list"]
