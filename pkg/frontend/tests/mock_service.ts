/** Deterministic in-memory stand-in for the inference service.
 *
 * Responses are pure functions of the request body, so repeated identical
 * requests yield byte-identical payloads — which is what the pixel-identity
 * and call-sequence tests lean on.
 */

import type { FetchLike, HttpResponse } from "../src/api.js";

export interface LoggedCall {
  method: string;
  path: string;
  raw: string;
  body: Record<string, unknown> | null;
}

function fnv1a(s: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < s.length; i++) {
    h ^= s.charCodeAt(i);
    h = Math.imul(h, 0x01000193) >>> 0;
  }
  return h >>> 0;
}

function ok(doc: unknown): HttpResponse {
  return { ok: true, status: 200, json: async () => doc };
}

function err(status: number, code: string, message: string): HttpResponse {
  return { ok: false, status, json: async () => ({ code, message, detail: "" }) };
}

export class MockService {
  calls: LoggedCall[] = [];
  nSlots = 5;
  /** when set, every request rejects at the transport level */
  down = false;
  /** when set, every request returns this API error */
  forcedError: { status: number; code: string; message: string } | null = null;

  paths(): string[] {
    return this.calls.map((c) => c.path);
  }

  callsTo(path: string): LoggedCall[] {
    return this.calls.filter((c) => c.path === path);
  }

  reset(): void {
    this.calls = [];
  }

  fetch: FetchLike = async (url, init) => {
    if (this.down) throw new TypeError("fetch failed: connection refused");
    const path = new URL(url, "http://mock").pathname;
    const raw = init.body ?? "";
    let body: Record<string, unknown> | null = null;
    if (raw) body = JSON.parse(raw) as Record<string, unknown>;
    this.calls.push({ method: init.method, path, raw, body });
    if (this.forcedError) {
      const f = this.forcedError;
      return err(f.status, f.code, f.message);
    }
    switch (path) {
      case "/v1/health":
        return ok({ status: "ok", checkpoint_digest: "d".repeat(64), step: 123 });
      case "/v1/encode": {
        const image = String(body?.image ?? "");
        if (!image) return err(400, "bad_request", "missing image");
        const sceneId = fnv1a(image).toString(16).padStart(8, "0").repeat(8);
        return ok({
          scene_id: sceneId,
          n_slots: this.nSlots,
          masks: btoa(`labels:${sceneId}`),
          slot_soft_masks: Array.from({ length: this.nSlots }, (_, i) =>
            btoa(`soft:${sceneId}:${i}`),
          ),
        });
      }
      case "/v1/generate":
      case "/v1/edit": {
        if (!body?.scene_id) return err(400, "bad_request", "edit needs a 'scene_id'");
        // byte-determinism: the image depends on the exact request bytes
        const image = btoa(`img:${fnv1a(raw).toString(16)}`);
        return path === "/v1/edit" ? ok({ image, provenance: [] }) : ok({ image });
      }
      default:
        return err(404, "not_found", `no route ${init.method} ${path}`);
    }
  };
}
