/** Thin typed client for the inference service.
 *
 * The client never constructs slot vectors; it moves base64 PNGs and edit
 * scripts between the page and the service.  Encodes are cached by exact
 * image payload so re-loading the same file costs no second request.
 */

import type {
  ApiErrorDoc,
  EditResponse,
  EncodeResponse,
  GenerateResponse,
  HealthResponse,
  SamplerSettings,
} from "./types.js";
import { MAX_UPLOAD_BYTES } from "./types.js";
import { serializeSampler, serializeScript, jsonString } from "./serialize.js";
import type { EditScript } from "./serialize.js";

export interface HttpResponse {
  ok: boolean;
  status: number;
  json(): Promise<unknown>;
}

export type FetchLike = (
  url: string,
  init: { method: string; headers: Record<string, string>; body?: string },
) => Promise<HttpResponse>;

export type ClientErrorCode = ApiErrorDoc["code"] | "network_error";

export class ApiClientError extends Error {
  readonly code: ClientErrorCode;
  readonly detail: string;
  readonly status: number | null;

  constructor(code: ClientErrorCode, message: string, detail = "", status: number | null = null) {
    super(message);
    this.name = "ApiClientError";
    this.code = code;
    this.detail = detail;
    this.status = status;
  }
}

export function bytesToBase64(bytes: Uint8Array): string {
  let bin = "";
  const chunk = 0x8000;
  for (let i = 0; i < bytes.length; i += chunk) {
    bin += String.fromCharCode(...bytes.subarray(i, i + chunk));
  }
  return btoa(bin);
}

export class ApiClient {
  readonly baseUrl: string;
  private readonly fetchImpl: FetchLike;
  private readonly encodeCache = new Map<string, EncodeResponse>();

  constructor(baseUrl: string, fetchImpl?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    const impl = fetchImpl ?? (globalThis.fetch as unknown as FetchLike);
    if (!impl) throw new Error("no fetch implementation available");
    this.fetchImpl = impl.bind(globalThis);
  }

  private async request(method: string, path: string, body?: string): Promise<unknown> {
    let res: HttpResponse;
    try {
      res = await this.fetchImpl(this.baseUrl + path, {
        method,
        headers: { "Content-Type": "application/json" },
        body,
      });
    } catch (e) {
      throw new ApiClientError("network_error", `service unreachable: ${String(e)}`);
    }
    let doc: unknown;
    try {
      doc = await res.json();
    } catch {
      throw new ApiClientError("model_error", `malformed response (HTTP ${res.status})`, "", res.status);
    }
    if (!res.ok) {
      const err = doc as Partial<ApiErrorDoc>;
      throw new ApiClientError(
        (err.code as ClientErrorCode) ?? "model_error",
        err.message ?? `HTTP ${res.status}`,
        err.detail ?? "",
        res.status,
      );
    }
    return doc;
  }

  async health(): Promise<HealthResponse> {
    return (await this.request("GET", "/v1/health")) as HealthResponse;
  }

  /** Encode an uploaded PNG. Identical payloads reuse the cached response. */
  async encode(pngBytes: Uint8Array): Promise<EncodeResponse> {
    if (pngBytes.length > MAX_UPLOAD_BYTES) {
      throw new ApiClientError(
        "payload_too_large",
        `image is ${pngBytes.length} bytes; limit ${MAX_UPLOAD_BYTES}`,
      );
    }
    return this.encodeBase64(bytesToBase64(pngBytes));
  }

  /** Encode an image already in base64 form (e.g. a generation result). */
  async encodeBase64(imageB64: string): Promise<EncodeResponse> {
    const hit = this.encodeCache.get(imageB64);
    if (hit) return hit;
    const body = `{"image": ${jsonString(imageB64)}}`;
    const doc = (await this.request("POST", "/v1/encode", body)) as EncodeResponse;
    this.encodeCache.set(imageB64, doc);
    return doc;
  }

  async generate(sceneId: string, sampler: SamplerSettings): Promise<GenerateResponse> {
    const body = `{"scene_id": ${jsonString(sceneId)}, "sampler": ${serializeSampler(sampler)}}`;
    return (await this.request("POST", "/v1/generate", body)) as GenerateResponse;
  }

  async edit(sceneId: string, script: EditScript, sampler: SamplerSettings): Promise<EditResponse> {
    const body =
      `{"scene_id": ${jsonString(sceneId)}, ` +
      `"script": ${serializeScript(script)}, ` +
      `"sampler": ${serializeSampler(sampler)}}`;
    return (await this.request("POST", "/v1/edit", body)) as EditResponse;
  }
}
