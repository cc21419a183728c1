"""Parametric modeling engine for longitudinal profile drawings of outdoor
water-supply and sewer networks: model, link engine, edit operations,
main-data table, dual-scale SVG rendering, compact prototype storage,
CLI and HTTP service."""

from .model import (
    Kind,
    NaturalPoint,
    ObjectRef,
    Polyline,
    Profile,
    ProfileError,
    SurfaceRole,
    validate,
)
from .datatable import build_table
from .render import render_svg
from .sample import sample_profile
from .store import load_profile, save_profile

__version__ = "0.1.0"

__all__ = [
    "Kind", "NaturalPoint", "ObjectRef", "Polyline", "Profile", "ProfileError",
    "SurfaceRole", "build_table", "load_profile", "render_svg", "sample_profile",
    "save_profile", "validate", "__version__",
]
