/** World <-> pixel transforms and the rigid group-drag math. */

import type { Vec2 } from "./types.js";

export interface ViewTransform {
  scale: number;   // pixels per world unit
  offsetX: number; // pixel position of world (0, 0)
  offsetY: number;
  height: number;  // canvas height (world y points up, pixels point down)
}

export function fitView(workspace: [number, number, number, number],
                        width: number, height: number, margin = 20): ViewTransform {
  const [x0, y0, x1, y1] = workspace;
  const scale = Math.min((width - 2 * margin) / (x1 - x0),
                         (height - 2 * margin) / (y1 - y0));
  return {
    scale,
    offsetX: margin - x0 * scale,
    offsetY: margin - y0 * scale,
    height,
  };
}

export function worldToPixel(v: ViewTransform, p: Vec2): Vec2 {
  return [p[0] * v.scale + v.offsetX, v.height - (p[1] * v.scale + v.offsetY)];
}

export function pixelToWorld(v: ViewTransform, p: Vec2): Vec2 {
  return [(p[0] - v.offsetX) / v.scale, (v.height - p[1] - v.offsetY) / v.scale];
}

export function poseApply(pose: [number, number, number], p: Vec2): Vec2 {
  const c = Math.cos(pose[2]);
  const s = Math.sin(pose[2]);
  return [c * p[0] - s * p[1] + pose[0], s * p[0] + c * p[1] + pose[1]];
}

/** Rigid transform of a point set: rotate by `theta` about `pivot`, then translate. */
export function rigidTransform(points: Vec2[], pivot: Vec2, theta: number,
                               translation: Vec2): Vec2[] {
  const c = Math.cos(theta);
  const s = Math.sin(theta);
  return points.map(([x, y]) => {
    const dx = x - pivot[0];
    const dy = y - pivot[1];
    return [
      pivot[0] + c * dx - s * dy + translation[0],
      pivot[1] + s * dx + c * dy + translation[1],
    ];
  });
}

export function centroid(points: Vec2[]): Vec2 {
  let sx = 0;
  let sy = 0;
  for (const [x, y] of points) {
    sx += x;
    sy += y;
  }
  return [sx / points.length, sy / points.length];
}

export function dist(a: Vec2, b: Vec2): number {
  return Math.hypot(a[0] - b[0], a[1] - b[1]);
}

/** Hue ramp over slice indices: early slices cold, late slices warm. */
export function sliceColor(h: number, H: number, alpha = 1): string {
  const hue = H <= 1 ? 200 : 200 - (160 * h) / (H - 1);
  return `hsla(${hue}, 80%, 50%, ${alpha})`;
}
