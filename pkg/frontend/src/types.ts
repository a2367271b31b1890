/** Wire types for the inference service HTTP/JSON contract. */

export interface HealthResponse {
  status: string;
  checkpoint_digest: string;
  step: number;
}

export interface EncodeResponse {
  scene_id: string;
  n_slots: number;
  /** base64 PNG, one label image at input resolution */
  masks: string;
  /** per-slot base64 grayscale PNGs */
  slot_soft_masks: string[];
}

export interface GenerateResponse {
  image: string;
}

export interface EditResponse {
  image: string;
  /** per-slot [scene_id, source_row] pairs */
  provenance: [string, number][];
}

export type ApiErrorCode =
  | "bad_request"
  | "not_found"
  | "model_error"
  | "payload_too_large";

export interface ApiErrorDoc {
  code: ApiErrorCode;
  message: string;
  detail: string;
}

export type SamplerKind = "ddim" | "ddpm";

export interface SamplerSettings {
  kind: SamplerKind;
  /** null runs the full schedule (required for ddpm) */
  steps: number | null;
  eta: number;
  cfg: number;
  seed: number;
}

export const DEFAULT_SAMPLER: SamplerSettings = {
  kind: "ddim",
  steps: 50,
  eta: 0,
  cfg: 1.3,
  seed: 0,
};

export const MAX_UPLOAD_BYTES = 4 * 1024 * 1024;
