/** Canvas painting: scene bodies, gripper glyph, keypoints, target-slice
 * overlays on a hue ramp, and live tracked-keypoint markers. */

import { poseApply, sliceColor, worldToPixel, type ViewTransform } from "./geometry.js";
import type { DraftSpec } from "./state.js";
import type { BodyPayload, GripperPayload, RolloutFrame, ScenePayload } from "./types.js";

const KIND_FILL: Record<string, string> = {
  manipulable: "#b5d1ff",
  tool: "#ffd9a0",
  container: "#d8d8d8",
};

export function drawScene(ctx: CanvasRenderingContext2D, view: ViewTransform,
                          scene: ScenePayload,
                          poses?: Record<string, [number, number, number]>,
                          gripper?: GripperPayload): void {
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
  drawWorkspace(ctx, view, scene.workspace);
  for (const body of scene.bodies) {
    drawBody(ctx, view, body, poses?.[body.id] ?? body.pose);
  }
  drawGripper(ctx, view, gripper ?? scene.gripper);
}

function drawWorkspace(ctx: CanvasRenderingContext2D, view: ViewTransform,
                       ws: [number, number, number, number]): void {
  const [a, b] = [worldToPixel(view, [ws[0], ws[1]]), worldToPixel(view, [ws[2], ws[3]])];
  ctx.strokeStyle = "#999";
  ctx.lineWidth = 1;
  ctx.strokeRect(Math.min(a[0], b[0]), Math.min(a[1], b[1]),
                 Math.abs(b[0] - a[0]), Math.abs(b[1] - a[1]));
}

function drawBody(ctx: CanvasRenderingContext2D, view: ViewTransform,
                  body: BodyPayload, pose: [number, number, number]): void {
  ctx.beginPath();
  body.vertices.forEach((v, i) => {
    const p = worldToPixel(view, poseApply(pose, v));
    if (i === 0) ctx.moveTo(p[0], p[1]);
    else ctx.lineTo(p[0], p[1]);
  });
  ctx.closePath();
  ctx.fillStyle = KIND_FILL[body.kind] ?? "#eee";
  ctx.strokeStyle = "#555";
  ctx.fill();
  ctx.stroke();
  if (body.functional_dir) {
    const c = worldToPixel(view, poseApply(pose, [0, 0]));
    const tip = worldToPixel(view, poseApply(pose, [
      body.functional_dir[0] * 0.06, body.functional_dir[1] * 0.06]));
    ctx.beginPath();
    ctx.moveTo(c[0], c[1]);
    ctx.lineTo(tip[0], tip[1]);
    ctx.strokeStyle = "#c60";
    ctx.stroke();
  }
}

function drawGripper(ctx: CanvasRenderingContext2D, view: ViewTransform,
                     g: GripperPayload): void {
  const p = worldToPixel(view, [g.x, g.y]);
  ctx.beginPath();
  ctx.arc(p[0], p[1], 7, 0, 2 * Math.PI);
  ctx.strokeStyle = g.closed ? "#c00" : "#090";
  ctx.lineWidth = 2;
  ctx.stroke();
  const jaw = g.closed ? 2 : 5;
  const c = Math.cos(g.theta);
  const s = Math.sin(g.theta);
  for (const side of [-1, 1]) {
    ctx.beginPath();
    ctx.arc(p[0] - side * jaw * s, p[1] - side * jaw * c, 2, 0, 2 * Math.PI);
    ctx.fillStyle = "#333";
    ctx.fill();
  }
  ctx.lineWidth = 1;
}

export function drawDraft(ctx: CanvasRenderingContext2D, view: ViewTransform,
                          draft: DraftSpec, activeSlice: number | null): void {
  const H = draft.slices.length;
  for (let h = 1; h < H; h++) {
    const color = sliceColor(h, H, h === activeSlice ? 0.95 : 0.45);
    for (let k = 0; k < draft.keypoints.length; k++) {
      const from = (draft.slices[h - 1] ?? [])[k];
      const to = draft.slices[h][k];
      if (!from || !to) continue;
      const a = worldToPixel(view, from);
      const b = worldToPixel(view, to);
      ctx.beginPath();
      ctx.moveTo(a[0], a[1]);
      ctx.lineTo(b[0], b[1]);
      ctx.strokeStyle = color;
      ctx.stroke();
      ctx.beginPath();
      ctx.arc(b[0], b[1], h === activeSlice ? 5 : 3, 0, 2 * Math.PI);
      ctx.fillStyle = color;
      ctx.fill();
    }
  }
  draft.keypoints.forEach((kp, k) => {
    const p = worldToPixel(view, kp.initial);
    ctx.beginPath();
    ctx.arc(p[0], p[1], 5, 0, 2 * Math.PI);
    ctx.fillStyle = "#06c";
    ctx.fill();
    ctx.fillStyle = "#fff";
    ctx.font = "8px monospace";
    ctx.fillText(String(kp.id), p[0] - 2, p[1] + 3);
    void k;
  });
}

export function drawTracked(ctx: CanvasRenderingContext2D, view: ViewTransform,
                            frame: RolloutFrame): void {
  frame.u_t.forEach((u) => {
    const p = worldToPixel(view, u);
    ctx.beginPath();
    ctx.moveTo(p[0] - 4, p[1]);
    ctx.lineTo(p[0] + 4, p[1]);
    ctx.moveTo(p[0], p[1] - 4);
    ctx.lineTo(p[0], p[1] + 4);
    ctx.strokeStyle = "#e0b000";
    ctx.lineWidth = 2;
    ctx.stroke();
    ctx.lineWidth = 1;
  });
}
