// Natural-mm to paper-mm mapping, mirroring the engine's drawing
// transform so overlay pick targets land on the rendered geometry.
// The engine renders with the paper anchor at (0, 0): paper Y grows
// downward, elevations upward.

import type { SettingsData } from "./types.js";

export interface Scales {
  scaleH: number;
  scaleV: number;
}

export function scalesOf(settings: SettingsData): Scales {
  return { scaleH: settings.build.scale_h, scaleV: settings.build.scale_v };
}

export function toPaperX(naturalX: number, scales: Scales): number {
  return naturalX / scales.scaleH;
}

export function toPaperY(naturalY: number, scales: Scales): number {
  return -naturalY / scales.scaleV;
}

export function naturalDxFromPaper(paperDx: number, scales: Scales): number {
  return paperDx * scales.scaleH;
}

export function naturalDyFromPaper(paperDy: number, scales: Scales): number {
  return -paperDy * scales.scaleV;
}

/** Paper mm per CSS pixel of a rendered SVG element. */
export function paperPerPixel(viewBoxWidth: number, clientWidth: number): number {
  return clientWidth > 0 ? viewBoxWidth / clientWidth : 1;
}

export interface DragDelta {
  dxNatural: number;
  dyNatural: number;
}

/** A pointer drag in pixels as a natural-mm displacement. */
export function dragToNatural(
  pxDx: number,
  pxDy: number,
  mmPerPx: number,
  scales: Scales,
): DragDelta {
  return {
    dxNatural: naturalDxFromPaper(pxDx * mmPerPx, scales),
    dyNatural: naturalDyFromPaper(pxDy * mmPerPx, scales),
  };
}

/** Snap a natural-mm value to whole millimeters for tidy requests. */
export function snapMm(value: number): number {
  const rounded = Math.round(value);
  return rounded === 0 ? 0 : rounded;   // never emit -0 into JSON
}
