/** Thin REST client for the studio service. */

import type { ScenePayload, SpecDocument, Violation } from "./types.js";

const BASE = "";

async function postJson<T>(url: string, body: unknown): Promise<T> {
  const resp = await fetch(BASE + url, {
    method: "POST",
    headers: { "Content-Type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!resp.ok) {
    const detail = await resp.text();
    throw new Error(`${url}: ${resp.status} ${detail}`);
  }
  return resp.json() as Promise<T>;
}

export function createScene(task: string, seed: number): Promise<ScenePayload> {
  return postJson("/api/scenes", { task, seed });
}

export async function getScene(sceneId: string): Promise<ScenePayload> {
  const resp = await fetch(`${BASE}/api/scenes/${sceneId}`);
  if (!resp.ok) throw new Error(`scene ${sceneId}: ${resp.status}`);
  return resp.json();
}

export interface SnapResult {
  accepted: boolean;
  id?: number;
  point?: [number, number];
  body_id?: string;
  reason?: string;
}

export function clickKeypoint(sceneId: string, click: [number, number]): Promise<SnapResult> {
  return postJson(`/api/scenes/${sceneId}/keypoints`, { click });
}

export interface ValidationResult {
  ok: boolean;
  violations: Violation[];
  canonical: string | null;
}

export function submitSpec(sceneId: string, doc: SpecDocument): Promise<ValidationResult> {
  return postJson(`/api/scenes/${sceneId}/spec`, doc);
}

export interface CheckpointInfo {
  name: string;
  policy: Record<string, unknown>;
}

export async function listCheckpoints(): Promise<CheckpointInfo[]> {
  const resp = await fetch(`${BASE}/api/checkpoints`);
  const body = await resp.json();
  return body.checkpoints;
}

export function startRollout(sceneId: string, doc: SpecDocument, checkpoint: string,
                             seed: number): Promise<{ rollout_id: string }> {
  return postJson(`/api/scenes/${sceneId}/rollouts`, { spec: doc, checkpoint, seed });
}
