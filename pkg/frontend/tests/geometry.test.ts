import { describe, expect, it } from "vitest";

import { centroid, dist, fitView, pixelToWorld, poseApply, rigidTransform,
         sliceColor, worldToPixel } from "../src/geometry.js";
import type { Vec2 } from "../src/types.js";

describe("view transform", () => {
  const view = fitView([0, 0, 1, 1], 640, 480);

  it("round-trips world points within half a pixel", () => {
    for (let i = 0; i < 100; i++) {
      const p: Vec2 = [Math.random(), Math.random()];
      const back = pixelToWorld(view, worldToPixel(view, p));
      const pixelErr = dist(back, p) * view.scale;
      expect(pixelErr).toBeLessThan(0.5);
    }
  });

  it("keeps the workspace inside the canvas", () => {
    for (const corner of [[0, 0], [1, 0], [0, 1], [1, 1]] as Vec2[]) {
      const [px, py] = worldToPixel(view, corner);
      expect(px).toBeGreaterThanOrEqual(0);
      expect(px).toBeLessThanOrEqual(640);
      expect(py).toBeGreaterThanOrEqual(0);
      expect(py).toBeLessThanOrEqual(480);
    }
  });

  it("points world +y up (screen -y)", () => {
    const low = worldToPixel(view, [0.5, 0.1]);
    const high = worldToPixel(view, [0.5, 0.9]);
    expect(high[1]).toBeLessThan(low[1]);
  });
});

describe("poseApply", () => {
  it("matches a quarter-turn by hand", () => {
    const out = poseApply([0.5, 0.5, Math.PI / 2], [0.1, 0.2]);
    expect(out[0]).toBeCloseTo(0.5 - 0.2, 12);
    expect(out[1]).toBeCloseTo(0.5 + 0.1, 12);
  });
});

describe("rigidTransform", () => {
  it("preserves pairwise distances to 1e-6", () => {
    const pts: Vec2[] = Array.from({ length: 6 }, () => [Math.random(), Math.random()]);
    const moved = rigidTransform(pts, centroid(pts), 0.7, [0.2, -0.1]);
    for (let i = 0; i < pts.length; i++) {
      for (let j = i + 1; j < pts.length; j++) {
        expect(Math.abs(dist(moved[i], moved[j]) - dist(pts[i], pts[j])))
          .toBeLessThan(1e-6);
      }
    }
  });

  it("pure translation moves every point equally", () => {
    const pts: Vec2[] = [[0.1, 0.1], [0.4, 0.2]];
    const moved = rigidTransform(pts, centroid(pts), 0, [0.05, 0.07]);
    moved.forEach((m, i) => {
      expect(m[0] - pts[i][0]).toBeCloseTo(0.05, 12);
      expect(m[1] - pts[i][1]).toBeCloseTo(0.07, 12);
    });
  });
});

describe("sliceColor", () => {
  it("ramps hue across slices", () => {
    expect(sliceColor(1, 8)).not.toBe(sliceColor(7, 8));
    expect(sliceColor(0, 1)).toContain("hsla");
  });
});
