import { readFileSync } from "node:fs";
import { describe, expect, it } from "vitest";

import { canonicalizeDocument, formatFloat, parseSpecDocument,
         serializeSpecDocument } from "../src/specdoc.js";
import type { SpecDocument } from "../src/types.js";

const fixture = JSON.parse(
  readFileSync(new URL("./fixtures/canonical.json", import.meta.url), "utf-8"));

describe("formatFloat", () => {
  it("matches the service formatter on shared vectors", () => {
    for (const { value, text } of fixture.floats) {
      expect(formatFloat(Number(value))).toBe(text);
    }
  });

  it("is idempotent through parse", () => {
    for (let i = 0; i < 200; i++) {
      const x = Math.random() * 2 - 1;
      const s = formatFloat(x);
      expect(formatFloat(Number(s))).toBe(s);
    }
  });

  it("rejects non-finite values", () => {
    expect(() => formatFloat(Number.NaN)).toThrow();
    expect(() => formatFloat(Infinity)).toThrow();
  });
});

describe("serializeSpecDocument", () => {
  it("reproduces the service's canonical bytes for the fixture document", () => {
    const doc = fixture.document as SpecDocument;
    expect(serializeSpecDocument(doc)).toBe(fixture.document_text);
  });

  it("round-trips byte-identically", () => {
    const doc = canonicalizeDocument({
      version: "coil-spec-1",
      coord_dim: 2,
      keypoints: [
        { id: 0, initial: [0.123456789123, 0.5] },
        { id: 1, initial: [0.25, 1 / 3] },
      ],
      slices: [
        { targets: [[0.123456789123, 0.5], [0.25, 1 / 3]] },
        { targets: [[0.9, 0.9], [0.8, 0.7]] },
      ],
      provenance: { scene_seed: 3, preset: "sparse", task: "transport" },
    });
    const text = serializeSpecDocument(doc);
    const again = serializeSpecDocument(parseSpecDocument(text));
    expect(again).toBe(text);
  });

  it("parse validates required fields", () => {
    expect(() => parseSpecDocument("{}")).toThrow(/missing field/);
  });
});
