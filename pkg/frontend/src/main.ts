// Browser editor: renders the profile served by the engine, overlays
// pick targets, applies edit operations, and mirrors the main-data
// table with propagation dialogs.  One in-flight mutation at a time;
// a revision conflict triggers a full refetch.

import { ApiClient, ConflictError, DomainError } from "./api.js";
import { dragToNatural, paperPerPixel, scalesOf, snapMm, Scales } from "./geometry.js";
import { buildTargets, hitTest, PickTarget } from "./hit.js";
import {
  buildCellEdit,
  EditableRow,
  ROW_MODEL,
  variantsFor,
} from "./tabledlg.js";
import type { ProfileData, TableData } from "./types.js";

const HIT_RADIUS_PX = 8;
const SVG_NS = "http://www.w3.org/2000/svg";

const api = new ApiClient("");

interface ViewState {
  profile: ProfileData | null;
  table: TableData | null;
  targets: PickTarget[];
  scales: Scales | null;
  selection: PickTarget | null;
  addMode: "well" | "turn_point" | null;
  busy: boolean;
}

const state: ViewState = {
  profile: null, table: null, targets: [], scales: null,
  selection: null, addMode: null, busy: false,
};

const el = {
  drawing: document.getElementById("drawing") as HTMLDivElement,
  table: document.getElementById("table") as HTMLDivElement,
  status: document.getElementById("status") as HTMLDivElement,
  banner: document.getElementById("banner") as HTMLDivElement,
  prototypes: document.getElementById("prototypes") as HTMLDivElement,
  selection: document.getElementById("selection") as HTMLDivElement,
};

function status(message: string): void {
  el.status.textContent = message;
}

function banner(message: string | null): void {
  el.banner.textContent = message ?? "";
  el.banner.style.display = message ? "block" : "none";
}

async function refreshAll(): Promise<void> {
  try {
    state.profile = await api.getProfile();
    state.table = await api.getTable();
    const svgText = await api.getRenderSvg();
    banner(null);
    state.scales = scalesOf(state.profile.settings);
    state.targets = buildTargets(state.profile, state.scales);
    renderDrawing(svgText);
    renderTable(state.table);
    renderPrototypes();
    status(`ревизия ${api.revision}`);
  } catch (error) {
    if (!(error instanceof DomainError)) {
      banner("сервис недоступен — только просмотр");
    }
    throw error;
  }
}

async function applyOp(op: string, args: Record<string, unknown>): Promise<void> {
  if (state.busy) return;
  state.busy = true;
  try {
    await api.postOp(op, args);
    await refreshAll();
  } catch (error) {
    if (error instanceof ConflictError) {
      banner("профиль изменён в другом месте — перезагружаю");
      await refreshAll();
    } else if (error instanceof DomainError) {
      status(`ошибка: ${error.message} [${error.rule}]`);
    } else {
      throw error;
    }
  } finally {
    state.busy = false;
  }
}

// ---------------------------------------------------------------------------
// Drawing and overlay
// ---------------------------------------------------------------------------

interface SvgContext {
  svg: SVGSVGElement;
  viewX: number;
  viewY: number;
  mmPerPx: number;
}

let svgContext: SvgContext | null = null;

function renderDrawing(svgText: string): void {
  el.drawing.innerHTML = svgText;
  const svg = el.drawing.querySelector("svg");
  if (!svg) return;
  svg.removeAttribute("width");
  svg.removeAttribute("height");
  svg.style.width = "100%";
  const viewBox = (svg.getAttribute("viewBox") ?? "0 0 1 1").split(" ").map(Number);
  const rect = svg.getBoundingClientRect();
  svgContext = {
    svg: svg as SVGSVGElement,
    viewX: viewBox[0],
    viewY: viewBox[1],
    mmPerPx: paperPerPixel(viewBox[2], rect.width),
  };
  const overlay = document.createElementNS(SVG_NS, "g");
  overlay.setAttribute("id", "overlay");
  svg.appendChild(overlay);
  attachPointerHandlers(svg as SVGSVGElement, overlay);
  highlightSelection(overlay);
}

function toPaperPoint(event: PointerEvent): { x: number; y: number } {
  const ctx = svgContext!;
  const rect = ctx.svg.getBoundingClientRect();
  return {
    x: ctx.viewX + (event.clientX - rect.left) * ctx.mmPerPx,
    y: ctx.viewY + (event.clientY - rect.top) * ctx.mmPerPx,
  };
}

function crossMarker(overlay: Element, x: number, y: number, color: string): void {
  for (const [dx1, dy1, dx2, dy2] of [[-1.5, -1.5, 1.5, 1.5], [-1.5, 1.5, 1.5, -1.5]]) {
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(x + dx1));
    line.setAttribute("y1", String(y + dy1));
    line.setAttribute("x2", String(x + dx2));
    line.setAttribute("y2", String(y + dy2));
    line.setAttribute("stroke", color);
    line.setAttribute("stroke-width", "0.4");
    line.setAttribute("class", "marker");
    overlay.appendChild(line);
  }
}

function clearMarkers(overlay: Element): void {
  overlay.querySelectorAll(".marker").forEach((node) => node.remove());
}

function highlightSelection(overlay: Element): void {
  if (state.selection) {
    crossMarker(overlay, state.selection.x,
                state.selection.shape === "axis" ? 0 : state.selection.y,
                "#c00000");
  }
}

function attachPointerHandlers(svg: SVGSVGElement, overlay: Element): void {
  let dragStart: { px: number; py: number; target: PickTarget } | null = null;

  svg.addEventListener("pointermove", (event) => {
    if (dragStart) return;
    const pt = toPaperPoint(event);
    clearMarkers(overlay);
    highlightSelection(overlay);
    const hit = hitTest(state.targets, pt.x, pt.y,
                        HIT_RADIUS_PX * svgContext!.mmPerPx);
    // pipe ends and joints glow with a cross while hovering, as the
    // continuation/split workflow expects
    if (hit && hit.shape !== "axis") crossMarker(overlay, hit.x, hit.y, "#0060c0");
    svg.style.cursor = hit ? "pointer" : "default";
  });

  svg.addEventListener("pointerdown", (event) => {
    const pt = toPaperPoint(event);
    if (state.addMode) {
      void placeNewObject(pt.x);
      return;
    }
    const hit = hitTest(state.targets, pt.x, pt.y,
                        HIT_RADIUS_PX * svgContext!.mmPerPx);
    if (hit) {
      dragStart = { px: event.clientX, py: event.clientY, target: hit };
      svg.setPointerCapture(event.pointerId);
    }
  });

  svg.addEventListener("pointerup", (event) => {
    if (!dragStart) return;
    const { px, py, target } = dragStart;
    dragStart = null;
    const dxPx = event.clientX - px;
    const dyPx = event.clientY - py;
    if (Math.hypot(dxPx, dyPx) < 3) {
      state.selection = target;
      renderSelection();
      clearMarkers(overlay);
      highlightSelection(overlay);
      return;
    }
    const delta = dragToNatural(dxPx, dyPx, svgContext!.mmPerPx, state.scales!);
    void moveTarget(target, snapMm(delta.dxNatural), snapMm(delta.dyNatural));
  });
}

async function placeNewObject(paperX: number): Promise<void> {
  const kind = state.addMode!;
  state.addMode = null;
  const naturalX = snapMm(paperX * state.scales!.scaleH);
  const fields = kind === "well" ? { axis_x: naturalX } : { x: naturalX };
  await applyOp("add", { kind, fields });
}

async function moveTarget(target: PickTarget, dx: number, dy: number): Promise<void> {
  const args: Record<string, unknown> = { ref: target.ref, delta: [dx, dy] };
  if (target.vertex !== undefined) args.vertex = target.vertex;
  await applyOp("move", args);
}

// ---------------------------------------------------------------------------
// Selection panel and palette
// ---------------------------------------------------------------------------

function renderSelection(): void {
  el.selection.innerHTML = "";
  if (!state.selection) {
    el.selection.textContent = "ничего не выбрано";
    return;
  }
  const label = document.createElement("span");
  label.textContent = state.selection.ref
    + (state.selection.vertex !== undefined ? ` [${state.selection.vertex}]` : "");
  el.selection.appendChild(label);

  if (state.selection.ref.startsWith("surface:") && state.selection.vertex !== undefined) {
    const role = state.selection.ref.split(":")[1];
    const vertex = state.selection.vertex;
    addButton(el.selection, "удалить вершину", () =>
      applyOp("delete_surface_vertex", { role, vertex }));
    state.selection = null;
    return;
  }
  addButton(el.selection, "удалить", () => {
    const ref = state.selection!.ref;
    state.selection = null;
    renderSelection();
    return applyOp("delete", { ref });
  });
}

function addButton(parent: Element, caption: string,
                   onClick: () => Promise<void> | void): void {
  const button = document.createElement("button");
  button.textContent = caption;
  button.onclick = () => void onClick();
  parent.appendChild(button);
}

function renderPrototypes(): void {
  void api.getPrototypes().then((entries) => {
    el.prototypes.innerHTML = "";
    for (const entry of entries) {
      const row = document.createElement("div");
      row.textContent = `${entry.name} (${entry.size} Б)`
        + (entry.valid ? "" : " — повреждён");
      if (entry.valid) {
        addButton(row, "открыть", async () => {
          await api.loadPrototype(entry.name);
          await refreshAll();
        });
      }
      el.prototypes.appendChild(row);
    }
  });
}

function wirePalette(): void {
  const palette = document.getElementById("palette")!;
  addButton(palette, "новый", async () => { await api.newProfile(false); await refreshAll(); });
  addButton(palette, "образец", async () => { await api.newProfile(true); await refreshAll(); });
  addButton(palette, "сохранить…", async () => {
    const name = window.prompt("имя файла", "profile");
    if (name) {
      const saved = await api.saveAs(name);
      status(`сохранено: ${saved.name}, ${saved.size} Б`);
      renderPrototypes();
    }
  });
  addButton(palette, "+ колодец", () => { state.addMode = "well"; status("укажите ось колодца"); });
  addButton(palette, "+ точка поворота", () => { state.addMode = "turn_point"; status("укажите ось точки поворота"); });
}

// ---------------------------------------------------------------------------
// Main-data table
// ---------------------------------------------------------------------------

function renderTable(table: TableData): void {
  el.table.innerHTML = "";
  const grid = document.createElement("table");
  for (const { title, editable, key } of ROW_MODEL) {
    const row = document.createElement("tr");
    const head = document.createElement("th");
    head.textContent = title;
    row.appendChild(head);
    const body = document.createElement("td");
    fillRowCells(body, key, editable, table);
    row.appendChild(body);
    grid.appendChild(row);
  }
  el.table.appendChild(grid);
}

function fillRowCells(container: HTMLElement, key: string,
                      editable: EditableRow | null, table: TableData): void {
  const span = (text: string, onClick?: () => void): void => {
    const cell = document.createElement("span");
    cell.className = onClick ? "cell editable" : "cell";
    cell.textContent = text;
    if (onClick) cell.onclick = onClick;
    container.appendChild(cell);
  };
  if (key === "base") {
    span(table.base || "—");
    return;
  }
  if (key === "pipe_designation") {
    for (const cell of table.pipe_designation) span(cell.text);
    return;
  }
  if (key === "length_slope") {
    for (const cell of table.length_slope) {
      span(`${cell.length_text}\\${cell.slope_text}`, () =>
        editLengthSlopeCell(cell));
    }
    return;
  }
  if (key === "distance") {
    for (const cell of table.distance) {
      span(cell.text, () => editCell("distance", cell, "расстояние, мм"));
    }
    return;
  }
  const rows: Record<string, { x: number; text: string }[]> = {
    pipe_bottom: table.pipe_bottom,
    project_elev: table.project_elev,
    natural_elev: table.natural_elev,
    designations: table.designations,
  };
  for (const cell of rows[key] ?? []) {
    if (editable) {
      span(cell.text, () => editCell(editable, cell, "отметка, мм натуры"));
    } else {
      span(cell.text);   // read-only rows stay read-only
    }
  }
}

function editLengthSlopeCell(cell: { x_lo: number; x_hi: number }): void {
  const which = window.prompt("править: длина или уклон?", "длина");
  if (!which) return;
  if (which.startsWith("дл")) {
    editCell("length", cell, "горизонтальная длина, мм");
  } else {
    editCell("slope", cell, "уклон (в единицах таблицы)");
  }
}

function editCell(row: EditableRow, cell: object, caption: string): void {
  const valueText = window.prompt(caption);
  if (valueText === null) return;
  const value = Number(valueText);
  if (!Number.isFinite(value)) {
    status("не число");
    return;
  }
  const variants = variantsFor(row);
  const menu = variants.map((v, i) => `${i + 1} — ${v.label}`).join("\n");
  const pickText = window.prompt(`вариант изменения:\n${menu}`, "1");
  if (pickText === null) return;
  const pick = variants[Number(pickText) - 1];
  if (!pick) {
    status("нет такого варианта");
    return;
  }
  const edit = buildCellEdit(row, state.profile!, cell, value, pick.id);
  if (!edit) {
    status("ячейка не связана с объектом");
    return;
  }
  void applyOp(edit.op, edit.args);
}

// ---------------------------------------------------------------------------

wirePalette();
renderSelection();
void refreshAll().catch(() => undefined);
