/** EditScript construction and byte-exact serialization.
 *
 * The service's canonical script encoding separates items with ", " and keys
 * with ": " (Python's default json.dumps formatting) and writes action keys
 * in the fixed order op, i, scene, j.  serializeScript reproduces that byte
 * stream so a staged script and the service's own serialization are
 * interchangeable.
 */

import type { SamplerSettings } from "./types.js";

export type EditAction =
  | { op: "delete"; i: number }
  | { op: "replace"; i: number; scene: string; j: number }
  | { op: "insert"; scene: string; j: number };

export interface EditScript {
  actions: EditAction[];
}

function isIndex(v: unknown): v is number {
  return typeof v === "number" && Number.isInteger(v) && v >= 0;
}

export function deleteAction(i: number): EditAction {
  if (!isIndex(i)) throw new Error(`delete needs an integer slot index, got ${i}`);
  return { op: "delete", i };
}

export function replaceAction(i: number, scene: string, j: number): EditAction {
  if (!isIndex(i) || !isIndex(j) || !scene) {
    throw new Error("replace needs a target index, source scene and source row");
  }
  return { op: "replace", i, scene, j };
}

export function insertAction(scene: string, j: number): EditAction {
  if (!isIndex(j) || !scene) {
    throw new Error("insert needs a source scene and source row");
  }
  return { op: "insert", scene, j };
}

/** JSON string literal with every non-ASCII code point escaped, matching the
 * service's ensure-ascii output for arbitrary scene ids. */
export function jsonString(s: string): string {
  let out = '"';
  for (const ch of s) {
    const cp = ch.codePointAt(0)!;
    if (ch === '"') out += '\\"';
    else if (ch === "\\") out += "\\\\";
    else if (cp === 0x08) out += "\\b";
    else if (cp === 0x09) out += "\\t";
    else if (cp === 0x0a) out += "\\n";
    else if (cp === 0x0c) out += "\\f";
    else if (cp === 0x0d) out += "\\r";
    else if (cp < 0x20) out += "\\u" + cp.toString(16).padStart(4, "0");
    else if (cp < 0x7f) out += ch;
    else {
      // escape as UTF-16 units, surrogate pairs included
      for (let k = 0; k < ch.length; k++) {
        out += "\\u" + ch.charCodeAt(k).toString(16).padStart(4, "0");
      }
    }
  }
  return out + '"';
}

function jsonNumber(v: number): string {
  if (!Number.isFinite(v)) throw new Error(`non-finite number in payload: ${v}`);
  return String(v);
}

function pairs(entries: [string, string][]): string {
  return "{" + entries.map(([k, v]) => `${jsonString(k)}: ${v}`).join(", ") + "}";
}

export function serializeAction(a: EditAction): string {
  const entries: [string, string][] = [["op", jsonString(a.op)]];
  if (a.op === "delete" || a.op === "replace") entries.push(["i", jsonNumber(a.i)]);
  if (a.op === "replace" || a.op === "insert") {
    entries.push(["scene", jsonString(a.scene)]);
    entries.push(["j", jsonNumber(a.j)]);
  }
  return pairs(entries);
}

export function serializeScript(script: EditScript): string {
  const body = script.actions.map(serializeAction).join(", ");
  return `{"actions": [${body}]}`;
}

export function serializeSampler(s: SamplerSettings): string {
  return pairs([
    ["kind", jsonString(s.kind)],
    ["steps", s.steps === null ? "null" : jsonNumber(s.steps)],
    ["eta", jsonNumber(s.eta)],
    ["cfg", jsonNumber(s.cfg)],
    ["seed", jsonNumber(s.seed)],
  ]);
}

export function describeAction(a: EditAction): string {
  const short = (id: string) => (id.length > 8 ? id.slice(0, 8) + "…" : id);
  switch (a.op) {
    case "delete":
      return `delete slot ${a.i}`;
    case "replace":
      return `replace slot ${a.i} with ${short(a.scene)} slot ${a.j}`;
    case "insert":
      return `insert ${short(a.scene)} slot ${a.j}`;
  }
}
