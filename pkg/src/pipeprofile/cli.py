"""Command-line front end: one atomic operation per invocation.

Mutating verbs read a profile file, apply the operation, and write the
file back; ``--json`` additionally prints the edit result and the
regenerated main-data table.  Exit codes: 0 success, 1 domain error
(message names the violated rule), 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import datatable, editops, jsonio, render, store
from .model import Kind, NaturalPoint, Profile, ProfileError, SurfaceRole, validate
from .sample import sample_profile


def _read(path: str):
    return store.load_profile(path)


def _write_back(profile, path: str) -> None:
    store.save_profile(profile, path)


def _emit(args, profile, result=None, extra=None) -> None:
    if not getattr(args, "json", False):
        return
    payload = dict(extra or {})
    if result is not None:
        payload["result"] = jsonio.result_to_dict(result)
    payload["table"] = jsonio.table_to_dict(datatable.build_table(profile))
    print(json.dumps(payload, ensure_ascii=False))


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------

def cmd_new(args) -> int:
    profile = sample_profile() if args.sample else Profile()
    size = store.save_profile(profile, args.file)
    print(f"{args.file}: {size} bytes")
    return 0


def cmd_load(args) -> int:
    profile = _read(args.file)
    counts = {jsonio.KIND_NAMES[k]: len(profile.store_of(k))
              for k in Kind if k != Kind.SURFACE}
    counts = {name: n for name, n in counts.items() if n}
    summary = {"objects": counts, "next_id": profile.next_id,
               "surfaces": [role.name.lower() for role in SurfaceRole
                            if profile.surfaces.get(role) is not None]}
    if args.json:
        print(json.dumps(summary, ensure_ascii=False))
    else:
        print(summary)
    return 0


def cmd_save(args) -> int:
    size = store.save_profile(_read(args.file), args.output)
    print(f"{args.output}: {size} bytes")
    return 0


def cmd_validate(args) -> int:
    # parse without the load gate so a structurally readable but invalid
    # file is reported rule by rule instead of rejected outright
    with open(args.file, "rb") as fh:
        profile = store.parse(fh.read())
    violations = validate(profile)
    if args.json:
        print(json.dumps(jsonio.violations_to_list(violations), ensure_ascii=False))
    else:
        for v in violations:
            print(v)
        print(f"{len(violations)} violation(s)")
    return 0 if not violations else 1


def cmd_render(args) -> int:
    data = render.render_svg(_read(args.file))
    with open(args.output, "wb") as fh:
        fh.write(data)
    print(f"{args.output}: {len(data)} bytes")
    return 0


def cmd_add(args) -> int:
    profile = _read(args.file)
    kind = jsonio.parse_kind(args.kind)
    fields = jsonio.decode_fields(kind, json.loads(args.fields or "{}"))
    result = editops.add_object(profile, kind, fields)
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_del(args) -> int:
    profile = _read(args.file)
    result = editops.delete_object(profile, jsonio.parse_ref(args.ref))
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_move(args) -> int:
    profile = _read(args.file)
    delta = (args.dx, args.dy) if args.dx is not None or args.dy is not None else None
    if delta is not None:
        delta = (args.dx or 0.0, args.dy or 0.0)
    to = NaturalPoint(args.to_x, args.to_y if args.to_y is not None else 0.0) \
        if args.to_x is not None else None
    result = editops.move_object(profile, jsonio.parse_ref(args.ref),
                                 delta=delta, to=to, vertex=args.vertex)
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_copy(args) -> int:
    profile = _read(args.file)
    to_point = NaturalPoint(args.to_x, args.to_y) \
        if args.to_x is not None and args.to_y is not None else None
    result = editops.copy_object(
        profile, jsonio.parse_ref(args.ref), to_x=args.to_x, to_point=to_point,
        to_section=jsonio.parse_ref(args.to_section) if args.to_section else None)
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_props(args) -> int:
    profile = _read(args.file)
    ref = jsonio.parse_ref(args.ref)
    fields = jsonio.decode_fields(ref.kind, json.loads(args.fields))
    result = editops.set_properties(profile, ref, fields)
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_pipe(args) -> int:
    profile = _read(args.file)
    from .jsonio import decode_points
    if args.action == "continue":
        result = editops.continue_pipe(
            profile, jsonio.parse_ref(args.pipe),
            editops.Side.LEFT if args.end == "left" else editops.Side.RIGHT,
            decode_points(json.loads(args.points)))
    elif args.action == "split":
        result = editops.split_pipe_segment(profile, jsonio.parse_ref(args.pipe), args.x)
    elif args.action == "divide":
        result = editops.divide_pipe(profile, jsonio.parse_ref(args.pipe), args.joint)
    elif args.action == "del-joint":
        result = editops.delete_pipe_joint(profile, jsonio.parse_ref(args.pipe),
                                           args.joint)
    else:   # merge
        result = editops.merge_pipes(
            profile, jsonio.parse_ref(args.left), jsonio.parse_ref(args.right),
            resolved_type=jsonio.parse_ref(args.type) if args.type else None,
            resolved_color=args.color)
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_surface(args) -> int:
    profile = _read(args.file)
    role = jsonio.parse_role(args.which)
    if args.action == "split":
        result = editops.split_surface_segment(profile, role, args.x)
    else:
        result = editops.delete_surface_vertex(profile, role, args.vertex)
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_text(args) -> int:
    profile = _read(args.file)
    result = editops.edit_text(profile, jsonio.parse_ref(args.ref),
                               json.loads(args.lines))
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_table_set(args) -> int:
    profile = _read(args.file)
    if args.row == "ground":
        result = editops.edit_ground_elevation(
            profile, jsonio.parse_role(args.which), args.x, args.elev,
            jsonio.decode_ground_choice(args.choice))
    elif args.row == "length":
        result = editops.edit_segment_length(
            profile, jsonio.parse_ref(args.pipe), args.seg, args.len,
            jsonio.decode_side(args.side), args.keep_slope)
    elif args.row == "slope":
        result = editops.edit_segment_slope(
            profile, jsonio.parse_ref(args.pipe), args.seg, args.slope,
            jsonio.decode_side(args.side))
    else:   # distance
        result = editops.edit_distance(
            profile, jsonio.parse_ref(args.left), jsonio.parse_ref(args.right),
            args.dist, jsonio.decode_side(args.side))
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_move_profile(args) -> int:
    profile = _read(args.file)
    result = editops.move_profile(profile, (args.dx, args.dy))
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_settings(args) -> int:
    profile = _read(args.file)
    updates = jsonio.decode_settings_updates(json.loads(args.fields))
    result = editops.set_settings(profile, updates)
    _write_back(profile, args.file)
    _emit(args, profile, result)
    return 0


def cmd_catalog(args) -> int:
    catalog = store.load_catalog(args.file)
    if args.json:
        print(json.dumps(jsonio.plain(catalog), ensure_ascii=False))
    else:
        for group in catalog.groups:
            print(f"# {group.title}")
            for entry in group.entries:
                print(f"  {entry.outer_diameter}\t{entry.name}")
    return 0


def cmd_spec(args) -> int:
    rows = store.export_spec(_read(args.file), args.output)
    print(f"{args.output}: {rows} row(s)")
    return 0


def cmd_list(args) -> int:
    entries = store.list_prototypes(args.directory)
    if args.json:
        print(json.dumps([{"name": e.name, "size": e.size,
                           "valid": e.error is None, "error": e.error}
                          for e in entries], ensure_ascii=False))
    else:
        for e in entries:
            status = "ok" if e.error is None else f"BROKEN: {e.error}"
            print(f"{e.name}\t{e.size}\t{status}")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pipeprofile",
        description="Parametric profile drawings of outdoor pipe networks")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true",
                       help="print edit result and table as JSON")

    p = sub.add_parser("new", help="create a profile file")
    p.add_argument("file")
    p.add_argument("--sample", action="store_true", help="bundle the demo profile")
    p.set_defaults(func=cmd_new)

    p = sub.add_parser("load", help="read a file and print a summary")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=cmd_load)

    p = sub.add_parser("save", help="re-serialize a file canonically")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_save)

    p = sub.add_parser("validate", help="report every violated invariant")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("render", help="emit the drawing as SVG")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("add", help="add an object")
    p.add_argument("file")
    p.add_argument("kind", help="object kind, e.g. well, pipe, surface")
    p.add_argument("--fields", help="JSON object of field values")
    add_json(p)
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("del", help="delete an object with its cascades")
    p.add_argument("file")
    p.add_argument("--ref", required=True, help="kind:id, e.g. well:3")
    add_json(p)
    p.set_defaults(func=cmd_del)

    p = sub.add_parser("move", help="move an object or polyline vertex")
    p.add_argument("file")
    p.add_argument("--ref", required=True)
    p.add_argument("--dx", type=float)
    p.add_argument("--dy", type=float)
    p.add_argument("--to-x", type=float, dest="to_x")
    p.add_argument("--to-y", type=float, dest="to_y")
    p.add_argument("--vertex", type=int)
    add_json(p)
    p.set_defaults(func=cmd_move)

    p = sub.add_parser("copy", help="copy an object to a new anchor")
    p.add_argument("file")
    p.add_argument("--ref", required=True)
    p.add_argument("--to-x", type=float, dest="to_x")
    p.add_argument("--to-y", type=float, dest="to_y")
    p.add_argument("--to-section", dest="to_section")
    add_json(p)
    p.set_defaults(func=cmd_copy)

    p = sub.add_parser("props", help="change object properties")
    p.add_argument("file")
    p.add_argument("--ref", required=True)
    p.add_argument("--fields", required=True)
    add_json(p)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("pipe", help="pipe topology edits")
    pipe_sub = p.add_subparsers(dest="action", required=True)
    q = pipe_sub.add_parser("continue")
    q.add_argument("file")
    q.add_argument("--pipe", required=True)
    q.add_argument("--end", choices=("left", "right"), required=True)
    q.add_argument("--points", required=True, help="JSON [[x,y],...]")
    add_json(q)
    q.set_defaults(func=cmd_pipe)
    q = pipe_sub.add_parser("split")
    q.add_argument("file")
    q.add_argument("--pipe", required=True)
    q.add_argument("--x", type=float, required=True)
    add_json(q)
    q.set_defaults(func=cmd_pipe)
    q = pipe_sub.add_parser("divide")
    q.add_argument("file")
    q.add_argument("--pipe", required=True)
    q.add_argument("--joint", type=int, required=True)
    add_json(q)
    q.set_defaults(func=cmd_pipe)
    q = pipe_sub.add_parser("del-joint")
    q.add_argument("file")
    q.add_argument("--pipe", required=True)
    q.add_argument("--joint", type=int, required=True)
    add_json(q)
    q.set_defaults(func=cmd_pipe)
    q = pipe_sub.add_parser("merge")
    q.add_argument("file")
    q.add_argument("--left", required=True)
    q.add_argument("--right", required=True)
    q.add_argument("--type")
    q.add_argument("--color", type=int)
    add_json(q)
    q.set_defaults(func=cmd_pipe)

    p = sub.add_parser("surface", help="surface vertex edits")
    surf_sub = p.add_subparsers(dest="action", required=True)
    q = surf_sub.add_parser("split")
    q.add_argument("file")
    q.add_argument("--which", required=True, help="project|natural|groundwater")
    q.add_argument("--x", type=float, required=True)
    add_json(q)
    q.set_defaults(func=cmd_surface)
    q = surf_sub.add_parser("del-vertex")
    q.add_argument("file")
    q.add_argument("--which", required=True)
    q.add_argument("--vertex", type=int, required=True)
    add_json(q)
    q.set_defaults(func=cmd_surface)

    p = sub.add_parser("text", help="replace a text's lines")
    p.add_argument("file")
    p.add_argument("--ref", required=True)
    p.add_argument("--lines", required=True, help='JSON ["line", ...]')
    add_json(p)
    p.set_defaults(func=cmd_text)

    p = sub.add_parser("table-set", help="table-driven edits with propagation")
    ts = p.add_subparsers(dest="row", required=True)
    q = ts.add_parser("ground")
    q.add_argument("file")
    q.add_argument("--which", required=True)
    q.add_argument("--x", type=float, required=True)
    q.add_argument("--elev", type=float, required=True)
    q.add_argument("--choice", required=True,
                   help="add-vertex|move-left|move-right|shift")
    add_json(q)
    q.set_defaults(func=cmd_table_set)
    q = ts.add_parser("length")
    q.add_argument("file")
    q.add_argument("--pipe", required=True)
    q.add_argument("--seg", type=int, required=True)
    q.add_argument("--len", type=float, required=True)
    q.add_argument("--side", choices=("left", "right"), required=True)
    q.add_argument("--keep-slope", action="store_true", dest="keep_slope")
    add_json(q)
    q.set_defaults(func=cmd_table_set)
    q = ts.add_parser("slope")
    q.add_argument("file")
    q.add_argument("--pipe", required=True)
    q.add_argument("--seg", type=int, required=True)
    q.add_argument("--slope", type=float, required=True)
    q.add_argument("--side", choices=("left", "right"), required=True)
    add_json(q)
    q.set_defaults(func=cmd_table_set)
    q = ts.add_parser("distance")
    q.add_argument("file")
    q.add_argument("--left", required=True)
    q.add_argument("--right", required=True)
    q.add_argument("--dist", type=float, required=True)
    q.add_argument("--side", choices=("left", "right"), required=True)
    add_json(q)
    q.set_defaults(func=cmd_table_set)

    p = sub.add_parser("move-profile", help="re-place the profile on the sheet")
    p.add_argument("file")
    p.add_argument("--dx", type=float, required=True)
    p.add_argument("--dy", type=float, required=True)
    add_json(p)
    p.set_defaults(func=cmd_move_profile)

    p = sub.add_parser("settings", help="change general settings and defaults")
    p.add_argument("file")
    p.add_argument("--fields", required=True, help="nested JSON updates")
    add_json(p)
    p.set_defaults(func=cmd_settings)

    p = sub.add_parser("catalog", help="parse a pipe-type catalog")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("spec", help="export the BOM of used pipe types")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_spec)

    p = sub.add_parser("list", help="list prototype files with status")
    p.add_argument("directory")
    add_json(p)
    p.set_defaults(func=cmd_list)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ProfileError as exc:
        print(f"error: {exc} [{exc.rule}]", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
