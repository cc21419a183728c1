// Table-cell editing: the propagation variants per editable row and the
// operation each choice turns into.  Ground rows offer four ways to bend
// the surface polyline, length offers side plus slope retention, slope
// and distance offer the side only; everything else is read-only.

import type { LengthSlopeCell, ProfileData, Ref, SpanCell } from "./types.js";

export type EditableRow = "project_elev" | "natural_elev" | "length" | "slope"
  | "distance";

export interface RowModel {
  title: string;
  editable: EditableRow | null;
  key: string;
}

// The eight rows of the main-data table, top to bottom; ground elevations,
// length\slope and distance accept edits, the rest mirror the engine.
export const ROW_MODEL: RowModel[] = [
  { title: "Отметка низа или лотка трубы", editable: null, key: "pipe_bottom" },
  { title: "Проектная отметка земли", editable: "project_elev", key: "project_elev" },
  { title: "Натурная отметка земли", editable: "natural_elev", key: "natural_elev" },
  { title: "Обозначение трубы и тип изоляции", editable: null, key: "pipe_designation" },
  { title: "Основание", editable: null, key: "base" },
  { title: "Длина\\Уклон", editable: null, key: "length_slope" },
  { title: "Расстояние", editable: "distance", key: "distance" },
  { title: "Номер колодца, точки угла поворота", editable: null, key: "designations" },
];

export interface Variant {
  id: string;
  label: string;
}

export const GROUND_VARIANTS: Variant[] = [
  { id: "add-vertex", label: "добавить вершину" },
  { id: "move-left", label: "сдвинуть левый конец отрезка" },
  { id: "move-right", label: "сдвинуть правый конец отрезка" },
  { id: "shift", label: "сдвинуть отрезок по вертикали" },
];

export const LENGTH_VARIANTS: Variant[] = [
  { id: "left", label: "сдвинуть трубы слева (изменяя уклон)" },
  { id: "right", label: "сдвинуть трубы справа (изменяя уклон)" },
  { id: "left-keep", label: "сдвинуть трубы слева, не изменяя уклона" },
  { id: "right-keep", label: "сдвинуть трубы справа, не изменяя уклона" },
];

export const SIDE_VARIANTS: Variant[] = [
  { id: "left", label: "сдвинуть находящиеся слева" },
  { id: "right", label: "сдвинуть находящиеся справа" },
];

export function variantsFor(row: EditableRow): Variant[] {
  switch (row) {
    case "project_elev":
    case "natural_elev":
      return GROUND_VARIANTS;
    case "length":
      return LENGTH_VARIANTS;
    case "slope":
    case "distance":
      return SIDE_VARIANTS;
  }
}

/** The pipe segment whose span matches a length/slope cell. */
export function findSegment(
  profile: ProfileData,
  cell: LengthSlopeCell,
): { pipe: Ref; seg: number } | null {
  for (const pipe of profile.pipe) {
    const pts = pipe.axis.points;
    for (let i = 0; i < pts.length - 1; i++) {
      if (pts[i].x === cell.x_lo && pts[i + 1].x === cell.x_hi) {
        return { pipe: `pipe:${pipe.id}`, seg: i };
      }
    }
  }
  return null;
}

/** The well/turn-point refs at the two ends of a distance cell. */
export function findStationRefs(
  profile: ProfileData,
  cell: SpanCell,
  tolerance = 0.5,
): { left: Ref; right: Ref } | null {
  const at = (x: number): Ref | null => {
    for (const well of profile.well) {
      if (Math.abs(well.axis_x - x) <= tolerance) return `well:${well.id}`;
    }
    for (const tp of profile.turn_point) {
      if (Math.abs(tp.x - x) <= tolerance) return `turn_point:${tp.id}`;
    }
    return null;
  };
  const left = at(cell.x_lo);
  const right = at(cell.x_hi);
  return left && right ? { left, right } : null;
}

export interface CellEdit {
  op: string;
  args: Record<string, unknown>;
}

export function buildCellEdit(
  row: EditableRow,
  profile: ProfileData,
  cell: { x?: number; x_lo?: number; x_hi?: number },
  value: number,
  variant: string,
): CellEdit | null {
  if (row === "project_elev" || row === "natural_elev") {
    return {
      op: "edit_ground",
      args: {
        role: row === "project_elev" ? "project" : "natural",
        x: cell.x,
        elev: value,
        choice: variant,
      },
    };
  }
  if (row === "length" || row === "slope") {
    const seg = findSegment(profile, cell as LengthSlopeCell);
    if (!seg) return null;
    if (row === "length") {
      return {
        op: "edit_length",
        args: {
          pipe: seg.pipe, seg: seg.seg, len: value,
          side: variant.startsWith("right") ? "right" : "left",
          keep_slope: variant.endsWith("-keep"),
        },
      };
    }
    return {
      op: "edit_slope",
      args: { pipe: seg.pipe, seg: seg.seg, slope: value, side: variant },
    };
  }
  const refs = findStationRefs(profile, cell as SpanCell);
  if (!refs) return null;
  return {
    op: "edit_distance",
    args: { left: refs.left, right: refs.right, dist: value, side: variant },
  };
}
