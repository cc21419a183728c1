"""Local HTTP facade over the engine for the browser editor.

One profile is held in memory; every mutating request applies a single
atomic edit operation and bumps the revision counter.  Requests carrying
a stale revision are rejected with 409 and change nothing (optimistic
concurrency, good enough for a single-designer tool).  Readers always see
the last published immutable snapshot.
"""

from __future__ import annotations

import argparse
import copy
import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException, Response
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import datatable, editops, jsonio, render, store
from .model import Profile, ProfileError
from .sample import sample_profile


class OpRequest(BaseModel):
    op: str
    args: dict = {}
    revision: int


class FileRequest(BaseModel):
    name: str


def _decoded(args: dict, *names):
    return [args.get(name) for name in names]


def _op_add(profile, args):
    kind = jsonio.parse_kind(args["kind"])
    return editops.add_object(profile, kind,
                              jsonio.decode_fields(kind, args.get("fields", {})))


def _op_delete(profile, args):
    return editops.delete_object(profile, jsonio.parse_ref(args["ref"]))


def _op_move(profile, args):
    delta, to, vertex = _decoded(args, "delta", "to", "vertex")
    return editops.move_object(
        profile, jsonio.parse_ref(args["ref"]),
        delta=tuple(delta) if delta is not None else None,
        to=jsonio.decode_point(to) if to is not None else None,
        vertex=vertex)


def _op_copy(profile, args):
    to_point = args.get("to_point")
    to_section = args.get("to_section")
    return editops.copy_object(
        profile, jsonio.parse_ref(args["ref"]),
        to_x=args.get("to_x"),
        to_point=jsonio.decode_point(to_point) if to_point is not None else None,
        to_section=jsonio.parse_ref(to_section) if to_section else None)


def _op_props(profile, args):
    ref = jsonio.parse_ref(args["ref"])
    return editops.set_properties(profile, ref,
                                  jsonio.decode_fields(ref.kind, args["fields"]))


def _op_continue_pipe(profile, args):
    return editops.continue_pipe(profile, jsonio.parse_ref(args["pipe"]),
                                 jsonio.decode_side(args["end"]),
                                 jsonio.decode_points(args["points"]))


def _op_continue_surface(profile, args):
    return editops.continue_surface(profile, jsonio.parse_role(args["role"]),
                                    jsonio.decode_side(args["end"]),
                                    jsonio.decode_points(args["points"]))


def _op_split_pipe(profile, args):
    return editops.split_pipe_segment(profile, jsonio.parse_ref(args["pipe"]),
                                      float(args["x"]))


def _op_split_surface(profile, args):
    return editops.split_surface_segment(profile, jsonio.parse_role(args["role"]),
                                         float(args["x"]))


def _op_delete_pipe_joint(profile, args):
    return editops.delete_pipe_joint(profile, jsonio.parse_ref(args["pipe"]),
                                     int(args["joint"]))


def _op_delete_surface_vertex(profile, args):
    return editops.delete_surface_vertex(profile, jsonio.parse_role(args["role"]),
                                         int(args["vertex"]))


def _op_divide_pipe(profile, args):
    return editops.divide_pipe(profile, jsonio.parse_ref(args["pipe"]),
                               int(args["joint"]))


def _op_merge_pipes(profile, args):
    rt = args.get("type")
    return editops.merge_pipes(
        profile, jsonio.parse_ref(args["left"]), jsonio.parse_ref(args["right"]),
        resolved_type=jsonio.parse_ref(rt) if rt else None,
        resolved_color=args.get("color"))


def _op_edit_text(profile, args):
    return editops.edit_text(profile, jsonio.parse_ref(args["text"]),
                             [str(s) for s in args["lines"]])


def _op_edit_ground(profile, args):
    return editops.edit_ground_elevation(
        profile, jsonio.parse_role(args["role"]), float(args["x"]),
        float(args["elev"]), jsonio.decode_ground_choice(args["choice"]))


def _op_edit_length(profile, args):
    return editops.edit_segment_length(
        profile, jsonio.parse_ref(args["pipe"]), int(args["seg"]),
        float(args["len"]), jsonio.decode_side(args["side"]),
        bool(args.get("keep_slope", False)))


def _op_edit_slope(profile, args):
    return editops.edit_segment_slope(
        profile, jsonio.parse_ref(args["pipe"]), int(args["seg"]),
        float(args["slope"]), jsonio.decode_side(args["side"]))


def _op_edit_distance(profile, args):
    return editops.edit_distance(
        profile, jsonio.parse_ref(args["left"]), jsonio.parse_ref(args["right"]),
        float(args["dist"]), jsonio.decode_side(args["side"]))


def _op_move_profile(profile, args):
    dx, dy = args["delta"]
    return editops.move_profile(profile, (float(dx), float(dy)))


def _op_add_dimension_ref(profile, args):
    return editops.add_dimension_ref(
        profile, jsonio.parse_ref(args["dimension"]), jsonio.parse_ref(args["ref"]),
        text_offset=args.get("text_offset"))


def _op_set_settings(profile, args):
    return editops.set_settings(profile,
                                jsonio.decode_settings_updates(args["updates"]))


OPS = {
    "add": _op_add,
    "delete": _op_delete,
    "move": _op_move,
    "copy": _op_copy,
    "set_properties": _op_props,
    "continue_pipe": _op_continue_pipe,
    "continue_surface": _op_continue_surface,
    "split_pipe": _op_split_pipe,
    "split_surface": _op_split_surface,
    "delete_pipe_joint": _op_delete_pipe_joint,
    "delete_surface_vertex": _op_delete_surface_vertex,
    "divide_pipe": _op_divide_pipe,
    "merge_pipes": _op_merge_pipes,
    "edit_text": _op_edit_text,
    "edit_ground": _op_edit_ground,
    "edit_length": _op_edit_length,
    "edit_slope": _op_edit_slope,
    "edit_distance": _op_edit_distance,
    "move_profile": _op_move_profile,
    "add_dimension_ref": _op_add_dimension_ref,
    "set_settings": _op_set_settings,
}


class EngineState:
    def __init__(self, root_dir: Path):
        self.root = root_dir
        self.lock = threading.Lock()
        self.profile = Profile()
        self.revision = 0
        self.snapshot = copy.deepcopy(self.profile)

    def publish(self) -> None:
        self.revision += 1
        self.snapshot = copy.deepcopy(self.profile)


def _safe_name(name: str) -> str:
    if not name or "/" in name or "\\" in name or name.startswith("."):
        raise HTTPException(400, {"error": f"bad file name {name!r}",
                                  "rule": "bad-file-name"})
    return name if name.endswith(".pns") else name + ".pns"


def create_app(root_dir, ui_dir=None) -> FastAPI:
    app = FastAPI(title="pipeprofile service")
    state = EngineState(Path(root_dir))
    app.state.engine = state

    @app.get("/profile")
    def get_profile():
        snap = state.snapshot
        return {"revision": state.revision,
                "profile": jsonio.profile_to_dict(snap)}

    @app.get("/table")
    def get_table():
        return {"revision": state.revision,
                "table": jsonio.table_to_dict(datatable.build_table(state.snapshot))}

    @app.get("/render.svg")
    def get_render():
        try:
            data = render.render_svg(state.snapshot)
        except ProfileError as exc:
            raise HTTPException(400, {"error": str(exc), "rule": exc.rule})
        return Response(content=data, media_type="image/svg+xml")

    @app.get("/prototypes")
    def get_prototypes():
        entries = store.list_prototypes(state.root)
        return [{"name": e.name, "size": e.size, "valid": e.error is None,
                 "error": e.error} for e in entries]

    @app.get("/catalog")
    def get_catalog():
        path = state.root / "catalog.txt"
        if not path.exists():
            return {"groups": []}
        try:
            return jsonio.plain(store.load_catalog(path))
        except ProfileError as exc:
            raise HTTPException(400, {"error": str(exc), "rule": exc.rule})

    @app.post("/profile/ops")
    def post_op(request: OpRequest):
        handler = OPS.get(request.op)
        if handler is None:
            raise HTTPException(400, {"error": f"unknown op {request.op!r}",
                                      "rule": "unknown-op"})
        with state.lock:
            if request.revision != state.revision:
                raise HTTPException(409, {
                    "error": f"stale revision {request.revision}, "
                             f"current {state.revision}",
                    "rule": "stale-revision"})
            try:
                result = handler(state.profile, request.args)
            except ProfileError as exc:
                raise HTTPException(400, {"error": str(exc), "rule": exc.rule})
            except (KeyError, ValueError, TypeError) as exc:
                raise HTTPException(422, {"error": repr(exc), "rule": "bad-arguments"})
            state.publish()
            return {"revision": state.revision,
                    "result": jsonio.result_to_dict(result)}

    @app.post("/profile/load")
    def post_load(request: FileRequest):
        path = state.root / _safe_name(request.name)
        with state.lock:
            try:
                profile = store.load_profile(path)
            except FileNotFoundError:
                raise HTTPException(404, {"error": f"{request.name} not found",
                                          "rule": "not-found"})
            except ProfileError as exc:
                raise HTTPException(400, {"error": str(exc), "rule": exc.rule})
            state.profile = profile
            state.publish()
            return {"revision": state.revision}

    @app.post("/profile/save")
    def post_save(request: FileRequest):
        path = state.root / _safe_name(request.name)
        with state.lock:
            try:
                size = store.save_profile(state.profile, path)
            except (ProfileError, OSError) as exc:
                rule = getattr(exc, "rule", "io-error")
                raise HTTPException(400, {"error": str(exc), "rule": rule})
            return {"name": path.name, "size": size}

    @app.post("/profile/new")
    def post_new(sample: bool = False):
        with state.lock:
            state.profile = sample_profile() if sample else Profile()
            state.publish()
            return {"revision": state.revision}

    if ui_dir is not None and Path(ui_dir).is_dir():
        app.mount("/", StaticFiles(directory=str(ui_dir), html=True), name="ui")

    return app


def serve(root_dir, port: int = 8787, ui_dir=None) -> None:
    """Run until stopped; the browser editor talks to this."""
    import uvicorn
    uvicorn.run(create_app(root_dir, ui_dir=ui_dir), host="127.0.0.1", port=port)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="pipeprofile-service")
    parser.add_argument("--root", default=".", help="directory of prototype files")
    parser.add_argument("--port", type=int, default=8787)
    parser.add_argument("--ui", default=None, help="static frontend directory")
    args = parser.parse_args(argv)
    serve(args.root, args.port, args.ui)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
