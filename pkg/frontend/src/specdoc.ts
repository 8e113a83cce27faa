/** Canonical SpecDocument text, byte-compatible with the service's form. */

import type { SpecDocument } from "./types.js";

function roundHalfEven(v: number): number {
  const f = Math.floor(v);
  const diff = v - f;
  if (diff > 0.5) return f + 1;
  if (diff < 0.5) return f;
  return f % 2 === 0 ? f : f + 1;
}

/** 9 significant digits; plain decimal in [1e-4, 1e16), exponent form
 * outside; trailing zeros stripped. Mirrors the service formatter exactly. */
export function formatFloat(x: number): string {
  if (x === 0) return "0";
  if (!Number.isFinite(x)) throw new Error("non-finite value in specification");
  const neg = x < 0;
  const ax = Math.abs(x);
  let exp = Math.floor(Math.log10(ax));
  let digits = roundHalfEven(ax / Math.pow(10, exp - 8));
  if (digits < 1e8) {
    exp -= 1;
    digits = roundHalfEven(ax / Math.pow(10, exp - 8));
  }
  if (digits >= 1e9) {
    exp += 1;
    digits = roundHalfEven(ax / Math.pow(10, exp - 8));
  }
  let mantissa = String(digits).replace(/0+$/, "");
  if (mantissa === "") mantissa = "0";
  const point = exp + 1;
  let body: string;
  if (exp >= -4 && exp < 16) {
    if (point >= mantissa.length) {
      body = mantissa + "0".repeat(point - mantissa.length);
    } else if (point > 0) {
      body = mantissa.slice(0, point) + "." + mantissa.slice(point);
    } else {
      body = "0." + "0".repeat(-point) + mantissa;
    }
  } else {
    const frac = mantissa.slice(1);
    body = mantissa[0] + (frac ? "." + frac : "") + "e" + String(exp);
  }
  return (neg ? "-" : "") + body;
}

function fmtPoint(p: number[]): string {
  return "[" + p.map(formatFloat).join(", ") + "]";
}

export function serializeSpecDocument(doc: SpecDocument): string {
  const lines: string[] = ["{"];
  lines.push(`  "version": "${doc.version}",`);
  lines.push(`  "coord_dim": ${Math.trunc(doc.coord_dim)},`);
  lines.push('  "keypoints": [');
  doc.keypoints.forEach((kp, i) => {
    const sep = i + 1 < doc.keypoints.length ? "," : "";
    lines.push(`    {"id": ${Math.trunc(kp.id)}, "initial": ${fmtPoint(kp.initial)}}${sep}`);
  });
  lines.push("  ],");
  lines.push('  "slices": [');
  doc.slices.forEach((sl, h) => {
    const targets = sl.targets.map(fmtPoint).join(", ");
    const sep = h + 1 < doc.slices.length ? "," : "";
    lines.push(`    {"targets": [${targets}]}${sep}`);
  });
  const prov = doc.provenance;
  if (!prov) {
    lines.push("  ]");
  } else {
    lines.push("  ],");
    const items: string[] = [];
    for (const key of ["scene_seed", "preset", "task"] as const) {
      const val = prov[key];
      if (val !== undefined && val !== null) {
        items.push(`"${key}": ` + (typeof val === "number" ? String(val) : `"${val}"`));
      }
    }
    lines.push('  "provenance": {' + items.join(", ") + "}");
  }
  lines.push("}");
  return lines.join("\n") + "\n";
}

export function parseSpecDocument(text: string): SpecDocument {
  const doc = JSON.parse(text) as SpecDocument;
  for (const field of ["version", "coord_dim", "keypoints", "slices"] as const) {
    if (!(field in doc)) {
      throw new Error(`specification document missing field ${field}`);
    }
  }
  return doc;
}

/** Canonicalize in place: every coordinate rounded to its 9-digit text form,
 * so re-serialization after a round trip is byte-identical. */
export function canonicalizeDocument(doc: SpecDocument): SpecDocument {
  const r = (v: number) => Number(formatFloat(v));
  return {
    ...doc,
    keypoints: doc.keypoints.map((kp) => ({ id: kp.id, initial: kp.initial.map(r) })),
    slices: doc.slices.map((sl) => ({ targets: sl.targets.map((p) => p.map(r)) })),
  };
}
