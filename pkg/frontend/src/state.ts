/** Draft-specification editing model: pure functions over immutable state,
 * so every gesture is unit-testable without a canvas. */

import { centroid, rigidTransform } from "./geometry.js";
import type { SpecDocument, Vec2 } from "./types.js";

export type EditMode =
  | { kind: "pick-keypoints" }
  | { kind: "edit-slice"; h: number }
  | { kind: "preview" };

export interface DraftKeypoint {
  id: number;
  bodyId: string;
  initial: Vec2;
}

export interface DraftSpec {
  keypoints: DraftKeypoint[];
  /** slices[h][k]: target of keypoint k at slice h; slice 0 mirrors initials */
  slices: Vec2[][];
  mode: EditMode;
  dirty: boolean; // edited since last successful validation
}

export const PRESETS: Record<string, { K: number; H: number }> = {
  sparse: { K: 5, H: 5 },
  medium: { K: 8, H: 12 },
  dense: { K: 32, H: 32 },
};

export function emptyDraft(): DraftSpec {
  return { keypoints: [], slices: [], mode: { kind: "pick-keypoints" }, dirty: false };
}

export function addKeypoint(draft: DraftSpec, id: number, bodyId: string,
                            point: Vec2): DraftSpec {
  const keypoints = [...draft.keypoints, { id, bodyId, initial: point }];
  const slices = draft.slices.length
    ? draft.slices.map((sl) => [...sl, point])
    : [];
  return { ...draft, keypoints, slices, dirty: true };
}

export function removeKeypoint(draft: DraftSpec, id: number): DraftSpec {
  const idx = draft.keypoints.findIndex((kp) => kp.id === id);
  if (idx < 0) return draft;
  return {
    ...draft,
    keypoints: draft.keypoints.filter((_, i) => i !== idx),
    slices: draft.slices.map((sl) => sl.filter((_, i) => i !== idx)),
    dirty: true,
  };
}

/** Allocate H slices: slice 0 = initials, later slices cloned from the last
 * known layout (or the initials when none exist yet). */
export function setSliceCount(draft: DraftSpec, H: number): DraftSpec {
  if (H < 2) H = 2;
  const initials = draft.keypoints.map((kp) => kp.initial);
  const slices: Vec2[][] = [initials.map((p) => [...p] as Vec2)];
  for (let h = 1; h < H; h++) {
    const src = draft.slices[h] ?? draft.slices[draft.slices.length - 1] ?? initials;
    slices.push(src.map((p) => [...p] as Vec2));
  }
  return { ...draft, slices, dirty: true };
}

export function applyPreset(draft: DraftSpec, name: keyof typeof PRESETS): DraftSpec {
  return setSliceCount(draft, PRESETS[name].H);
}

export function moveTarget(draft: DraftSpec, h: number, k: number, to: Vec2): DraftSpec {
  if (h <= 0 || h >= draft.slices.length) return draft; // slice 0 is pinned
  const slices = draft.slices.map((sl, i) =>
    i === h ? sl.map((p, j) => (j === k ? ([...to] as Vec2) : p)) : sl);
  return { ...draft, slices, dirty: true };
}

/** Rigid group-drag: move every keypoint of `bodyId` in slice h by the same
 * rotation (about their centroid) plus translation. */
export function groupDrag(draft: DraftSpec, h: number, bodyId: string,
                          translation: Vec2, theta = 0): DraftSpec {
  if (h <= 0 || h >= draft.slices.length) return draft;
  const idx = draft.keypoints
    .map((kp, i) => (kp.bodyId === bodyId ? i : -1))
    .filter((i) => i >= 0);
  if (!idx.length) return draft;
  const pts = idx.map((i) => draft.slices[h][i]);
  const moved = rigidTransform(pts, centroid(pts), theta, translation);
  const slice = [...draft.slices[h]];
  idx.forEach((i, j) => (slice[i] = moved[j]));
  const slices = draft.slices.map((sl, i) => (i === h ? slice : sl));
  return { ...draft, slices, dirty: true };
}

export function toDocument(draft: DraftSpec, coordDim = 2,
                           provenance?: SpecDocument["provenance"]): SpecDocument {
  const doc: SpecDocument = {
    version: "coil-spec-1",
    coord_dim: coordDim,
    keypoints: draft.keypoints.map((kp) => ({ id: kp.id, initial: [...kp.initial] })),
    slices: draft.slices.map((sl) => ({ targets: sl.map((p) => [...p]) })),
  };
  if (provenance) doc.provenance = provenance;
  return doc;
}

/** The revise-spec loop: rebuild an editable draft from a document, keeping
 * keypoint ids. Body ids are resolved by the caller (nearest body). */
export function fromDocument(doc: SpecDocument,
                             bodyOf: (p: Vec2) => string): DraftSpec {
  const keypoints = doc.keypoints.map((kp) => ({
    id: kp.id,
    bodyId: bodyOf(kp.initial as Vec2),
    initial: [kp.initial[0], kp.initial[1]] as Vec2,
  }));
  const slices = doc.slices.map((sl) => sl.targets.map((p) => [p[0], p[1]] as Vec2));
  return { keypoints, slices, mode: { kind: "preview" }, dirty: false };
}
