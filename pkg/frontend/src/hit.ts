// Client-side hit-testing over the rendered drawing.  The engine stays
// geometry-authoritative: targets are built from the fetched profile and
// located with the same natural-to-paper mapping the renderer uses.

import { Scales, toPaperX, toPaperY } from "./geometry.js";
import type { ProfileData, Ref } from "./types.js";

export type TargetShape = "axis" | "point" | "joint";

export interface PickTarget {
  ref: Ref;
  shape: TargetShape;
  /** paper mm */
  x: number;
  /** paper mm; axis targets are hit by X alone */
  y: number;
  /** for joints and surface vertices: the vertex index */
  vertex?: number;
}

export function buildTargets(profile: ProfileData, scales: Scales): PickTarget[] {
  const targets: PickTarget[] = [];
  for (const well of profile.well) {
    targets.push({ ref: `well:${well.id}`, shape: "axis",
                   x: toPaperX(well.axis_x, scales), y: 0 });
  }
  for (const tp of profile.turn_point) {
    targets.push({ ref: `turn_point:${tp.id}`, shape: "axis",
                   x: toPaperX(tp.x, scales), y: 0 });
  }
  for (const ag of profile.above_ground) {
    targets.push({ ref: `above_ground:${ag.id}`, shape: "axis",
                   x: toPaperX(ag.axis_x, scales), y: 0 });
  }
  for (const casing of profile.casing) {
    targets.push({ ref: `casing:${casing.id}`, shape: "axis",
                   x: toPaperX(casing.center_x, scales), y: 0 });
  }
  for (const section of profile.section) {
    targets.push({ ref: `section:${section.id}`, shape: "point",
                   x: toPaperX(section.center.x, scales),
                   y: toPaperY(section.center.y, scales) });
  }
  for (const text of profile.text) {
    targets.push({ ref: `text:${text.id}`, shape: "point",
                   x: toPaperX(text.origin.x, scales),
                   y: toPaperY(text.origin.y, scales) });
  }
  for (const pipe of profile.pipe) {
    pipe.axis.points.forEach((pt, index) => {
      targets.push({ ref: `pipe:${pipe.id}`, shape: "joint",
                     x: toPaperX(pt.x, scales), y: toPaperY(pt.y, scales),
                     vertex: index });
    });
  }
  const surfaceLines = [
    ["project", profile.surfaces.project_surface],
    ["natural", profile.surfaces.natural_surface],
    ["groundwater", profile.surfaces.groundwater],
  ] as const;
  for (const [role, line] of surfaceLines) {
    if (!line) continue;
    line.points.forEach((pt, index) => {
      targets.push({ ref: `surface:${role}`, shape: "joint",
                     x: toPaperX(pt.x, scales), y: toPaperY(pt.y, scales),
                     vertex: index });
    });
  }
  return targets;
}

/** Nearest target within the pick radius; points and joints beat bare
 *  axes at equal distance (they are more specific). */
export function hitTest(
  targets: PickTarget[],
  paperX: number,
  paperY: number,
  radius: number,
): PickTarget | null {
  let best: PickTarget | null = null;
  let bestScore = Infinity;
  for (const target of targets) {
    const dx = target.x - paperX;
    const distance = target.shape === "axis"
      ? Math.abs(dx)
      : Math.hypot(dx, target.y - paperY);
    if (distance > radius) continue;
    const bias = target.shape === "axis" ? 0.5 : 0;
    const score = distance + bias;
    if (score < bestScore) {
      bestScore = score;
      best = target;
    }
  }
  return best;
}
