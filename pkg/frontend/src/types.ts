// Wire shapes of the engine service (see docs/http_api.md).

export type Ref = string; // "kind:id", e.g. "well:3", "surface:project"

export interface FontData {
  height: number;
  widening: number;
  slant: boolean;
}

export interface PointData {
  x: number;
  y: number;
}

export interface PolylineData {
  points: PointData[];
  color: number;
}

export interface BuildSettingsData {
  scale_h: number;
  scale_v: number;
  pipeline_kind: string;
  base_soil: string;
  conditional_ground_level: number;
  conditional_pipe_bottom_level: number;
}

export interface SettingsData {
  table: {
    top_right_of_header: PointData;
    has_header: boolean;
    slope_unit: string;
  };
  build: BuildSettingsData;
}

export interface WellData {
  id: number;
  kind: string;
  axis_x: number;
  width: number;
  designation: string;
}

export interface PipeData {
  id: number;
  type_ref: Ref;
  axis: PolylineData;
  color: number;
}

export interface SectionData {
  id: number;
  kind: string;
  center: PointData;
}

export interface TurnPointData {
  id: number;
  x: number;
  designation: string;
}

export interface CasingData {
  id: number;
  center_x: number;
  length: number;
}

export interface TextData {
  id: number;
  lines: string[];
  origin: PointData;
}

export interface ProfileData {
  settings: SettingsData;
  surfaces: {
    project_surface: PolylineData | null;
    natural_surface: PolylineData | null;
    groundwater: PolylineData | null;
  };
  next_id: number;
  well: WellData[];
  pipe: PipeData[];
  section: SectionData[];
  turn_point: TurnPointData[];
  casing: CasingData[];
  text: TextData[];
  above_ground: { id: number; axis_x: number }[];
  dimension: { id: number; refs: Ref[] }[];
  elevation_mark: { id: number; section_ref: Ref }[];
  leader: { id: number; text_ref: Ref; target: Ref }[];
}

export interface RowCell {
  x: number;
  text: string;
}

export interface SpanCell {
  x_lo: number;
  x_hi: number;
  text: string;
}

export interface LengthSlopeCell {
  x_lo: number;
  x_hi: number;
  length_text: string;
  slope_text: string;
}

export interface TableData {
  stations: { x: number; sources: string[] }[];
  pipe_bottom: RowCell[];
  project_elev: RowCell[];
  natural_elev: RowCell[];
  pipe_designation: SpanCell[];
  base: string;
  length_slope: LengthSlopeCell[];
  distance: SpanCell[];
  designations: RowCell[];
  has_header: boolean;
}

export interface EditResultData {
  changed: Ref[];
  deleted: Ref[];
  created: Ref[];
}

export interface PrototypeEntry {
  name: string;
  size: number;
  valid: boolean;
  error: string | null;
}
