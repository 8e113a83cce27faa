/** Payload shapes of the studio service API. */

export type Vec2 = [number, number];

export interface BodyPayload {
  id: string;
  kind: "manipulable" | "tool" | "container";
  shape: string;
  vertices: Vec2[];        // body frame
  pose: [number, number, number];
  functional_dir: Vec2 | null;
}

export interface GripperPayload {
  x: number;
  y: number;
  theta: number;
  closed: boolean;
  held_body: string | null;
}

export interface KeypointPayload {
  id: number;
  body_id: string;
  offset: Vec2;
}

export interface ScenePayload {
  scene_id: string;
  task: string;
  seed: number;
  workspace: [number, number, number, number];
  bodies: BodyPayload[];
  gripper: GripperPayload;
  keypoints: KeypointPayload[];
  observation: { points: Vec2[]; proprio: number[] };
}

export interface SpecKeypoint {
  id: number;
  initial: number[];
}

export interface SpecSlice {
  targets: number[][];
}

export interface SpecDocument {
  version: string;
  coord_dim: number;
  keypoints: SpecKeypoint[];
  slices: SpecSlice[];
  provenance?: { scene_seed?: number | null; preset?: string | null; task?: string | null };
}

export interface Violation {
  code: string;
  where: string;
  detail: string;
}

export interface RolloutFrame {
  t: number;
  gripper: GripperPayload;
  body_poses: Record<string, [number, number, number]>;
  u_t: Vec2[];
  done: boolean;
  success?: boolean;
  tracking_error?: number | null;
  steps?: number;
  error?: string;
}
