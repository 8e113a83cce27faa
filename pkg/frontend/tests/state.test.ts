import { describe, expect, it } from "vitest";

import { dist } from "../src/geometry.js";
import {
  addKeypoint,
  applyPreset,
  emptyDraft,
  fromDocument,
  groupDrag,
  moveTarget,
  setSliceCount,
  toDocument,
} from "../src/state.js";
import type { Vec2 } from "../src/types.js";

function draftWithKeypoints() {
  let d = emptyDraft();
  d = addKeypoint(d, 0, "m0", [0.2, 0.2]);
  d = addKeypoint(d, 1, "m0", [0.25, 0.22]);
  d = addKeypoint(d, 2, "m1", [0.7, 0.6]);
  return setSliceCount(d, 4);
}

describe("draft editing", () => {
  it("slice 0 mirrors keypoint initials", () => {
    const d = draftWithKeypoints();
    d.keypoints.forEach((kp, k) => {
      expect(d.slices[0][k]).toEqual(kp.initial);
    });
  });

  it("presets pre-populate slice counts", () => {
    const d = applyPreset(draftWithKeypoints(), "sparse");
    expect(d.slices.length).toBe(5);
    expect(applyPreset(d, "dense").slices.length).toBe(32);
  });

  it("moveTarget edits only the addressed slot and never slice 0", () => {
    const d = draftWithKeypoints();
    const moved = moveTarget(d, 2, 1, [0.9, 0.9]);
    expect(moved.slices[2][1]).toEqual([0.9, 0.9]);
    expect(moved.slices[2][0]).toEqual(d.slices[2][0]);
    expect(moveTarget(d, 0, 1, [0.9, 0.9])).toBe(d);
  });

  it("group drag is rigid within a slice", () => {
    const d = draftWithKeypoints();
    const before = d.slices[1];
    const after = groupDrag(d, 1, "m0", [0.1, -0.05], 0.4).slices[1];
    // pairwise distance between the two m0 keypoints preserved
    expect(Math.abs(dist(after[0], after[1]) - dist(before[0], before[1])))
      .toBeLessThan(1e-6);
    // the m1 keypoint untouched
    expect(after[2]).toEqual(before[2]);
  });

  it("document round trip preserves keypoint ids and slices", () => {
    const d = draftWithKeypoints();
    const edited = moveTarget(d, 3, 2, [0.5, 0.1] as Vec2);
    const doc = toDocument(edited, 2, { scene_seed: 9, task: "transport" });
    const back = fromDocument(doc, () => "m0");
    expect(back.keypoints.map((kp) => kp.id)).toEqual([0, 1, 2]);
    expect(back.slices.length).toBe(edited.slices.length);
    expect(back.slices[3][2][0]).toBeCloseTo(0.5, 12);
  });

  it("adding a keypoint extends existing slices", () => {
    const d = draftWithKeypoints();
    const d2 = addKeypoint(d, 3, "m1", [0.8, 0.8]);
    expect(d2.slices.every((sl) => sl.length === 4)).toBe(true);
  });
});
