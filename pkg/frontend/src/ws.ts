/** Rollout frame stream with reconnect-and-resume. */

import type { RolloutFrame } from "./types.js";

export interface StreamHandle {
  close(): void;
}

export function streamRollout(
  rolloutId: string,
  onFrame: (frame: RolloutFrame) => void,
  onEnd: (error?: string) => void,
  maxReconnects = 5,
): StreamHandle {
  let received = 0;
  let closed = false;
  let attempts = 0;
  let socket: WebSocket | null = null;

  const connect = () => {
    const proto = location.protocol === "https:" ? "wss" : "ws";
    socket = new WebSocket(
      `${proto}://${location.host}/api/rollouts/${rolloutId}/stream?from=${received}`);
    socket.onmessage = (ev) => {
      const frame = JSON.parse(ev.data) as RolloutFrame;
      if (frame.error) {
        closed = true;
        onEnd(frame.error);
        return;
      }
      received += 1;
      onFrame(frame);
      if (frame.done) {
        closed = true;
        onEnd();
      }
    };
    socket.onclose = () => {
      if (closed) return;
      // dropped mid-stream: resume from the next frame index
      if (attempts++ < maxReconnects) {
        setTimeout(connect, 250);
      } else {
        onEnd("stream dropped");
      }
    };
  };
  connect();
  return {
    close() {
      closed = true;
      socket?.close();
    },
  };
}
