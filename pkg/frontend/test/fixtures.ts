import type { ProfileData, TableData } from "../src/types.js";

// Mirrors the engine's bundled demonstration profile closely enough for
// the client-side logic: scales 1:1000 / 1:200, a two-segment pipe and
// two wells 15 m apart.
export function sampleProfile(): ProfileData {
  return {
    settings: {
      table: {
        top_right_of_header: { x: 0, y: 95000 },
        has_header: true,
        slope_unit: "permille",
      },
      build: {
        scale_h: 1000,
        scale_v: 200,
        pipeline_kind: "sewer",
        base_soil: "суглинок",
        conditional_ground_level: 100000,
        conditional_pipe_bottom_level: 96000,
      },
    },
    surfaces: {
      project_surface: {
        points: [{ x: 0, y: 100000 }, { x: 15000, y: 99800 },
                 { x: 35000, y: 99600 }],
        color: 0,
      },
      natural_surface: null,
      groundwater: null,
    },
    next_id: 8,
    well: [
      { id: 3, kind: "manhole", axis_x: 0, width: 1000, designation: "1" },
      { id: 4, kind: "manhole", axis_x: 15000, width: 1000, designation: "2" },
    ],
    pipe: [{
      id: 2, type_ref: "pipe_type:1", color: 5,
      axis: {
        points: [{ x: 0, y: 97000 }, { x: 20000, y: 96800 },
                 { x: 35000, y: 96500 }],
        color: 5,
      },
    }],
    section: [{ id: 9, kind: "pipe_section", center: { x: 8000, y: 98000 } }],
    turn_point: [],
    casing: [],
    text: [{ id: 6, lines: ["x"], origin: { x: 2000, y: 101500 } }],
    above_ground: [],
    dimension: [{ id: 5, refs: ["well:3", "well:4"] }],
    elevation_mark: [],
    leader: [],
  };
}

export function sampleTable(): TableData {
  return {
    stations: [
      { x: 0, sources: ["well"] },
      { x: 15000, sources: ["well"] },
      { x: 20000, sources: ["pipe_joint"] },
    ],
    pipe_bottom: [{ x: 0, text: "96.85" }, { x: 15000, text: "96.70" },
                  { x: 20000, text: "96.65" }],
    project_elev: [{ x: 0, text: "100.00" }, { x: 15000, text: "99.80" }],
    natural_elev: [],
    pipe_designation: [{ x_lo: 0, x_hi: 35000, text: "Труба 300x8" }],
    base: "суглинок",
    length_slope: [
      { x_lo: 0, x_hi: 20000, length_text: "20.00", slope_text: "10" },
      { x_lo: 20000, x_hi: 35000, length_text: "15.00", slope_text: "20" },
    ],
    distance: [{ x_lo: 0, x_hi: 15000, text: "15.00" }],
    designations: [{ x: 0, text: "1" }, { x: 15000, text: "2" }],
    has_header: true,
  };
}
