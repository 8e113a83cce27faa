/** Studio app: author keypoint specifications on a scene, launch rollouts,
 * watch the stream, read metrics, revise and iterate. */

import * as api from "./api.js";
import { dist, fitView, pixelToWorld, type ViewTransform } from "./geometry.js";
import { drawDraft, drawScene, drawTracked } from "./render.js";
import { canonicalizeDocument, parseSpecDocument, serializeSpecDocument } from "./specdoc.js";
import {
  addKeypoint,
  applyPreset,
  emptyDraft,
  fromDocument,
  groupDrag,
  moveTarget,
  setSliceCount,
  toDocument,
  type DraftSpec,
} from "./state.js";
import { streamRollout, type StreamHandle } from "./ws.js";
import type { RolloutFrame, ScenePayload, Vec2 } from "./types.js";

interface App {
  scene: ScenePayload | null;
  draft: DraftSpec;
  activeSlice: number | null;
  view: ViewTransform | null;
  lastFrame: RolloutFrame | null;
  stream: StreamHandle | null;
  lastCanonical: string | null;
  drag: { h: number; k: number } | { h: number; bodyId: string; last: Vec2 } | null;
}

const app: App = {
  scene: null,
  draft: emptyDraft(),
  activeSlice: null,
  view: null,
  lastFrame: null,
  stream: null,
  lastCanonical: null,
  drag: null,
};

const $ = <T extends HTMLElement>(id: string) => document.getElementById(id) as T;
const canvas = $("studio") as unknown as HTMLCanvasElement;
const ctx = canvas.getContext("2d")!;

function status(text: string): void {
  $("status").textContent = text;
}

function redraw(): void {
  if (!app.scene || !app.view) return;
  drawScene(ctx, app.view, app.scene,
            app.lastFrame?.body_poses, app.lastFrame?.gripper);
  drawDraft(ctx, app.view, app.draft, app.activeSlice);
  if (app.lastFrame) drawTracked(ctx, app.view, app.lastFrame);
}

function setDraft(draft: DraftSpec): void {
  app.draft = draft;
  renderSliceList();
  redraw();
}

function renderSliceList(): void {
  const list = $("slices");
  list.innerHTML = "";
  app.draft.slices.forEach((_, h) => {
    if (h === 0) return;
    const btn = document.createElement("button");
    btn.textContent = `slice ${h}`;
    btn.className = h === app.activeSlice ? "active" : "";
    btn.onclick = () => {
      app.activeSlice = h;
      app.draft = { ...app.draft, mode: { kind: "edit-slice", h } };
      renderSliceList();
      redraw();
    };
    list.appendChild(btn);
  });
}

async function loadScene(): Promise<void> {
  const task = ($("task") as HTMLSelectElement).value;
  const seed = Number(($("seed") as HTMLInputElement).value) || 0;
  const scene = await api.createScene(task, seed);
  app.scene = scene;
  app.view = fitView(scene.workspace, canvas.width, canvas.height);
  app.lastFrame = null;
  app.activeSlice = null;
  setDraft(emptyDraft());
  status(`scene ${scene.scene_id} (${task}, seed ${seed})`);
  void refreshCheckpoints();
}

async function refreshCheckpoints(): Promise<void> {
  const sel = $("checkpoint") as HTMLSelectElement;
  sel.innerHTML = "";
  for (const ck of await api.listCheckpoints()) {
    const opt = document.createElement("option");
    opt.value = ck.name;
    opt.textContent = ck.name;
    sel.appendChild(opt);
  }
}

function nearestTarget(world: Vec2): { h: number; k: number } | null {
  if (!app.view || app.activeSlice === null) return null;
  const h = app.activeSlice;
  let best: { h: number; k: number } | null = null;
  let bestD = 12 / app.view.scale; // 12-pixel grab radius, in world units
  app.draft.slices[h]?.forEach((p, k) => {
    const d = dist(p, world);
    if (d < bestD) {
      bestD = d;
      best = { h, k };
    }
  });
  return best;
}

function bodyAt(world: Vec2): string | null {
  if (!app.scene) return null;
  let best: string | null = null;
  let bestD = 0.06;
  for (const kp of app.draft.keypoints) {
    const d = dist(kp.initial, world);
    if (d < bestD) {
      bestD = d;
      best = kp.bodyId;
    }
  }
  return best;
}

canvas.addEventListener("mousedown", async (ev) => {
  if (!app.scene || !app.view) return;
  const world = pixelToWorld(app.view, [ev.offsetX, ev.offsetY]);
  const mode = app.draft.mode;
  if (mode.kind === "pick-keypoints") {
    const hit = await api.clickKeypoint(app.scene.scene_id, world);
    if (!hit.accepted) {
      status(`click rejected: ${hit.reason}`);
      return;
    }
    setDraft(addKeypoint(app.draft, hit.id!, hit.body_id!, hit.point!));
    status(`keypoint ${hit.id} on ${hit.body_id}`);
  } else if (mode.kind === "edit-slice") {
    const target = nearestTarget(world);
    if (target && !ev.altKey) {
      app.drag = target;
    } else {
      const bodyId = bodyAt(world);
      if (bodyId) app.drag = { h: mode.h, bodyId, last: world };
    }
  }
});

canvas.addEventListener("mousemove", (ev) => {
  if (!app.drag || !app.view) return;
  const world = pixelToWorld(app.view, [ev.offsetX, ev.offsetY]);
  if ("k" in app.drag) {
    setDraft(moveTarget(app.draft, app.drag.h, app.drag.k, world));
  } else {
    const delta: Vec2 = [world[0] - app.drag.last[0], world[1] - app.drag.last[1]];
    const theta = ev.shiftKey ? (ev.movementX) * 0.01 : 0;
    setDraft(groupDrag(app.draft, app.drag.h, app.drag.bodyId, delta, theta));
    app.drag.last = world;
  }
});

canvas.addEventListener("mouseup", () => (app.drag = null));

async function validateDraft(): Promise<boolean> {
  if (!app.scene) return false;
  const doc = canonicalizeDocument(toDocument(app.draft, app.scene.workspace.length / 2,
    { scene_seed: app.scene.seed, task: app.scene.task }));
  const result = await api.submitSpec(app.scene.scene_id, doc);
  const box = $("violations");
  box.innerHTML = "";
  if (!result.ok) {
    for (const v of result.violations) {
      const li = document.createElement("li");
      li.textContent = `${v.code} at ${v.where}: ${v.detail}`;
      box.appendChild(li);
    }
    status("specification has violations");
    return false;
  }
  app.lastCanonical = result.canonical;
  app.draft = { ...app.draft, dirty: false };
  status("specification valid");
  return true;
}

async function launchRollout(): Promise<void> {
  if (!app.scene) return;
  if (!(await validateDraft())) return;
  const doc = canonicalizeDocument(toDocument(app.draft, 2,
    { scene_seed: app.scene.seed, task: app.scene.task }));
  const checkpoint = ($("checkpoint") as HTMLSelectElement).value;
  const seed = Number(($("rollout-seed") as HTMLInputElement).value) || 0;
  const { rollout_id } = await api.startRollout(app.scene.scene_id, doc, checkpoint, seed);
  status(`rollout ${rollout_id} running...`);
  app.stream?.close();
  app.stream = streamRollout(rollout_id, (frame) => {
    app.lastFrame = frame;
    redraw();
    if (frame.done) {
      const err = frame.tracking_error;
      $("metrics").textContent =
        `success: ${frame.success}  tracking error: ` +
        (err === null || err === undefined ? "-" : err.toFixed(4)) +
        `  steps: ${frame.steps}`;
      status(`rollout ${rollout_id} finished`);
    }
  }, (error) => {
    if (error) status(`stream ended: ${error}`);
  });
}

function exportSpec(): void {
  const doc = canonicalizeDocument(toDocument(app.draft, 2,
    app.scene ? { scene_seed: app.scene.seed, task: app.scene.task } : undefined));
  ($("spec-text") as HTMLTextAreaElement).value = serializeSpecDocument(doc);
  status("specification exported to the text panel");
}

function importSpec(): void {
  const text = ($("spec-text") as HTMLTextAreaElement).value;
  const doc = parseSpecDocument(text);
  const findBody = (p: Vec2): string => {
    const byKp = bodyAt(p);
    return byKp ?? app.scene?.bodies[0]?.id ?? "";
  };
  setDraft(fromDocument(doc, findBody));
  status("specification imported");
}

function reviseSpec(): void {
  // clone the last document back into edit mode, keypoint ids preserved
  app.lastFrame = null;
  app.draft = { ...app.draft, mode: { kind: "edit-slice", h: 1 }, dirty: true };
  app.activeSlice = app.draft.slices.length > 1 ? 1 : null;
  renderSliceList();
  redraw();
  status("editing specification (revision)");
}

function bind(): void {
  $("load").onclick = () => void loadScene();
  $("validate").onclick = () => void validateDraft();
  $("rollout").onclick = () => void launchRollout();
  $("export").onclick = exportSpec;
  $("import").onclick = importSpec;
  $("revise").onclick = reviseSpec;
  $("pick-mode").onclick = () => {
    app.draft = { ...app.draft, mode: { kind: "pick-keypoints" } };
    app.activeSlice = null;
    renderSliceList();
    redraw();
  };
  for (const name of ["sparse", "medium", "dense"]) {
    $(`preset-${name}`).onclick = () => {
      setDraft(applyPreset(app.draft, name));
      app.activeSlice = 1;
      app.draft = { ...app.draft, mode: { kind: "edit-slice", h: 1 } };
      renderSliceList();
      redraw();
    };
  }
  const hInput = $("slice-count") as HTMLInputElement;
  $("set-slices").onclick = () => setDraft(setSliceCount(app.draft, Number(hInput.value) || 2));
}

bind();
void loadScene();
