/** Two-panel slot editor: target scene on the left, source scene on the
 * right, staged edit script and sampler settings between them, generation
 * result below.  All numerics live on the service side; the page only moves
 * base64 PNGs, slot indices and scene ids.
 */

import { ApiClient, ApiClientError, bytesToBase64 } from "./api.js";
import { EditDraft } from "./draft.js";
import { slotColor } from "./palette.js";
import { deleteAction, insertAction, replaceAction } from "./serialize.js";
import type { EncodeResponse, SamplerSettings } from "./types.js";
import { DEFAULT_SAMPLER } from "./types.js";

export type PanelName = "target" | "source";

interface PanelState {
  name: PanelName;
  sceneId: string | null;
  nSlots: number;
  imageB64: string | null;
  selected: number | null;
  root: HTMLElement;
  stage: HTMLElement;
  chips: HTMLElement;
}

function el<K extends keyof HTMLElementTagNameMap>(
  doc: Document,
  tag: K,
  attrs: Record<string, string> = {},
  text = "",
): HTMLElementTagNameMap[K] {
  const node = doc.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  if (text) node.textContent = text;
  return node;
}

export class App {
  readonly client: ApiClient;
  readonly draft = new EditDraft();
  private readonly doc: Document;
  private readonly panels: Record<PanelName, PanelState>;
  private readonly banner: HTMLElement;
  private readonly bannerMsg: HTMLElement;
  private retryFn: (() => void) | null = null;
  private scriptList: HTMLOListElement;
  private scriptJson: HTMLPreElement;
  private buttons: {
    delete: HTMLButtonElement;
    replace: HTMLButtonElement;
    insert: HTMLButtonElement;
    undo: HTMLButtonElement;
    run: HTMLButtonElement;
    continue: HTMLButtonElement;
  };
  private samplerInputs: {
    kind: HTMLSelectElement;
    steps: HTMLInputElement;
    eta: HTMLInputElement;
    cfg: HTMLInputElement;
    seed: HTMLInputElement;
  };
  private resultImg: HTMLImageElement;
  private resultB64: string | null = null;
  private inFlight = false;

  constructor(root: HTMLElement, client: ApiClient, doc?: Document) {
    this.client = client;
    this.doc = doc ?? root.ownerDocument;
    const d = this.doc;

    this.banner = el(d, "div", { class: "banner", "data-testid": "banner", hidden: "" });
    this.bannerMsg = el(d, "span", { class: "banner-msg" });
    const retry = el(d, "button", { "data-action": "retry" }, "Retry");
    retry.addEventListener("click", () => {
      const fn = this.retryFn;
      this.hideBanner();
      fn?.();
    });
    const dismiss = el(d, "button", { "data-action": "dismiss" }, "Dismiss");
    dismiss.addEventListener("click", () => this.hideBanner());
    this.banner.append(this.bannerMsg, retry, dismiss);
    root.append(this.banner);

    const panelsRow = el(d, "div", { class: "panels" });
    this.panels = {
      target: this.buildPanel("target", panelsRow),
      source: this.buildPanel("source", panelsRow),
    };
    root.append(panelsRow);

    const aside = el(d, "aside", { class: "script-panel" });
    this.scriptList = el(d, "ol", { "data-testid": "script-list" });
    this.scriptJson = el(d, "pre", { "data-testid": "script-json" });
    this.buttons = {
      delete: el(d, "button", { "data-action": "delete", disabled: "" }, "Delete slot"),
      replace: el(d, "button", { "data-action": "replace", disabled: "" }, "Replace slot"),
      insert: el(d, "button", { "data-action": "insert", disabled: "" }, "Insert slot"),
      undo: el(d, "button", { "data-action": "undo", disabled: "" }, "Undo"),
      run: el(d, "button", { "data-action": "run", disabled: "" }, "Generate"),
      continue: el(d, "button", { "data-action": "continue", disabled: "" }, "Continue editing from result"),
    };
    this.buttons.delete.addEventListener("click", () => this.stageDelete());
    this.buttons.replace.addEventListener("click", () => this.stageReplace());
    this.buttons.insert.addEventListener("click", () => this.stageInsert());
    this.buttons.undo.addEventListener("click", () => this.undo());
    this.buttons.run.addEventListener("click", () => void this.run());
    this.buttons.continue.addEventListener("click", () => void this.continueFromResult());

    const form = el(d, "div", { class: "sampler", "data-testid": "sampler" });
    const kind = el(d, "select", { "data-sampler": "kind" });
    kind.append(el(d, "option", { value: "ddim" }, "ddim"), el(d, "option", { value: "ddpm" }, "ddpm"));
    const steps = el(d, "input", { "data-sampler": "steps", type: "number", value: String(DEFAULT_SAMPLER.steps) });
    const eta = el(d, "input", { "data-sampler": "eta", type: "number", value: String(DEFAULT_SAMPLER.eta) });
    const cfg = el(d, "input", { "data-sampler": "cfg", type: "number", value: String(DEFAULT_SAMPLER.cfg) });
    const seed = el(d, "input", { "data-sampler": "seed", type: "number", value: String(DEFAULT_SAMPLER.seed) });
    kind.value = DEFAULT_SAMPLER.kind;
    kind.addEventListener("change", () => {
      steps.disabled = kind.value === "ddpm"; // ddpm runs the full schedule
    });
    this.samplerInputs = { kind, steps, eta, cfg, seed };
    for (const [label, input] of [
      ["kind", kind], ["steps", steps], ["eta", eta], ["cfg", cfg], ["seed", seed],
    ] as const) {
      const wrap = el(d, "label", {}, label + " ");
      wrap.append(input);
      form.append(wrap);
    }

    aside.append(
      this.scriptList, this.scriptJson,
      this.buttons.delete, this.buttons.replace, this.buttons.insert, this.buttons.undo,
      form, this.buttons.run,
    );
    root.append(aside);

    const result = el(d, "section", { class: "result", "data-testid": "result" });
    this.resultImg = el(d, "img", { "data-testid": "result-img", alt: "generation result" });
    result.append(this.resultImg, this.buttons.continue);
    root.append(result);

    this.renderScript();
  }

  // ------------------------------------------------------------- panels
  private buildPanel(name: PanelName, parent: HTMLElement): PanelState {
    const d = this.doc;
    const root = el(d, "section", { class: "panel", "data-panel": name });
    root.append(el(d, "h2", {}, name));
    const file = el(d, "input", { type: "file", accept: "image/png", "data-testid": `${name}-file` });
    file.addEventListener("change", () => {
      const f = file.files?.[0];
      if (!f) return;
      void f.arrayBuffer().then((buf) => this.loadScene(name, new Uint8Array(buf)));
    });
    const stage = el(d, "div", { class: "stage" });
    const chips = el(d, "div", { class: "chips" });
    root.append(file, stage, chips);
    parent.append(root);
    return { name, sceneId: null, nSlots: 0, imageB64: null, selected: null, root, stage, chips };
  }

  /** Encode an image and render it with per-slot overlays. */
  async loadScene(name: PanelName, pngBytes: Uint8Array): Promise<void> {
    await this.loadSceneB64(name, bytesToBase64(pngBytes));
  }

  async loadSceneB64(name: PanelName, imageB64: string): Promise<void> {
    let res: EncodeResponse;
    try {
      res = await this.client.encodeBase64(imageB64);
    } catch (e) {
      this.showError(e, () => void this.loadSceneB64(name, imageB64));
      return;
    }
    const panel = this.panels[name];
    panel.sceneId = res.scene_id;
    panel.nSlots = res.n_slots;
    panel.imageB64 = imageB64;
    panel.selected = null;
    this.renderPanel(panel, res);
    if (name === "target") this.draft.clear();
    this.renderScript();
    this.refreshButtons();
  }

  private renderPanel(panel: PanelState, res: EncodeResponse): void {
    const d = this.doc;
    panel.stage.replaceChildren();
    panel.chips.replaceChildren();

    const base = el(d, "img", {
      class: "base",
      src: `data:image/png;base64,${panel.imageB64}`,
      alt: `${panel.name} scene`,
    });
    panel.stage.append(base);

    res.slot_soft_masks.forEach((maskB64, i) => {
      const overlay = el(d, "div", {
        class: "overlay",
        "data-slot": String(i),
        style:
          `background-color: ${slotColor(i)}; ` +
          `mask-image: url(data:image/png;base64,${maskB64}); ` +
          `-webkit-mask-image: url(data:image/png;base64,${maskB64});`,
      });
      overlay.addEventListener("mouseenter", () => overlay.classList.add("highlight"));
      overlay.addEventListener("mouseleave", () => overlay.classList.remove("highlight"));
      panel.stage.append(overlay);

      const chip = el(d, "span", { class: "chip", "data-slot": String(i) });
      const select = el(d, "button", { class: "chip-select", "data-slot": String(i) }, `slot ${i}`);
      select.style.borderColor = slotColor(i);
      select.addEventListener("click", () => this.selectSlot(panel.name, i));
      const toggle = el(d, "button", { class: "chip-toggle", "data-toggle": String(i) }, "👁");
      toggle.addEventListener("click", () => {
        overlay.hidden = !overlay.hidden;
        toggle.classList.toggle("off", overlay.hidden);
      });
      chip.append(select, toggle);
      panel.chips.append(chip);
    });
  }

  /** Select slot i in a panel; selecting it again deselects (0 or 1 selected). */
  selectSlot(name: PanelName, i: number): void {
    const panel = this.panels[name];
    if (i < 0 || i >= panel.nSlots) throw new Error(`slot ${i} out of range`);
    panel.selected = panel.selected === i ? null : i;
    panel.chips.querySelectorAll(".chip-select").forEach((b) => {
      const idx = Number((b as HTMLElement).dataset.slot);
      b.classList.toggle("selected", idx === panel.selected);
    });
    this.refreshButtons();
  }

  selection(name: PanelName): number | null {
    return this.panels[name].selected;
  }

  sceneId(name: PanelName): string | null {
    return this.panels[name].sceneId;
  }

  // ------------------------------------------------------------- staging
  stageDelete(): void {
    const i = this.panels.target.selected;
    if (i === null) return;
    this.draft.stage(deleteAction(i));
    this.renderScript();
  }

  stageReplace(): void {
    const i = this.panels.target.selected;
    const src = this.panels.source;
    if (i === null || src.sceneId === null || src.selected === null) return;
    this.draft.stage(replaceAction(i, src.sceneId, src.selected));
    this.renderScript();
  }

  stageInsert(): void {
    const src = this.panels.source;
    if (src.sceneId === null || src.selected === null) return;
    this.draft.stage(insertAction(src.sceneId, src.selected));
    this.renderScript();
  }

  undo(): void {
    this.draft.undo();
    this.renderScript();
  }

  private renderScript(): void {
    this.scriptList.replaceChildren(
      ...this.draft.describe().map((txt) => el(this.doc, "li", {}, txt)),
    );
    this.scriptJson.textContent = this.draft.serialized();
    this.refreshButtons();
  }

  private refreshButtons(): void {
    const target = this.panels.target;
    const source = this.panels.source;
    this.buttons.delete.disabled = target.selected === null;
    this.buttons.replace.disabled =
      target.selected === null || source.sceneId === null || source.selected === null;
    this.buttons.insert.disabled = source.sceneId === null || source.selected === null;
    this.buttons.undo.disabled = this.draft.length === 0;
    this.buttons.run.disabled = target.sceneId === null || this.inFlight;
    this.buttons.continue.disabled = this.resultB64 === null || this.inFlight;
  }

  // ---------------------------------------------------------- generation
  sampler(): SamplerSettings {
    const { kind, steps, eta, cfg, seed } = this.samplerInputs;
    const k = kind.value as SamplerSettings["kind"];
    return {
      kind: k,
      steps: k === "ddpm" ? null : Number(steps.value),
      eta: Number(eta.value),
      cfg: Number(cfg.value),
      seed: Number(seed.value),
    };
  }

  /** POST the staged script (identity allowed) and show the result. */
  async run(): Promise<void> {
    const sceneId = this.panels.target.sceneId;
    if (sceneId === null || this.inFlight) return;
    this.inFlight = true;
    this.refreshButtons();
    try {
      const res = await this.client.edit(sceneId, this.draft.script(), this.sampler());
      this.resultB64 = res.image;
      this.resultImg.src = `data:image/png;base64,${res.image}`;
    } catch (e) {
      this.showError(e, () => void this.run());
    } finally {
      this.inFlight = false;
      this.refreshButtons();
    }
  }

  /** Re-encode the last result as the new target scene. */
  async continueFromResult(): Promise<void> {
    if (this.resultB64 === null || this.inFlight) return;
    await this.loadSceneB64("target", this.resultB64);
  }

  // -------------------------------------------------------------- errors
  private showError(e: unknown, retry: (() => void) | null): void {
    const msg =
      e instanceof ApiClientError
        ? `${e.code}: ${e.message}${e.detail ? ` (${e.detail})` : ""}`
        : String(e);
    this.bannerMsg.textContent = msg;
    this.banner.hidden = false;
    this.retryFn = retry;
  }

  private hideBanner(): void {
    this.banner.hidden = true;
    this.retryFn = null;
  }
}

export function createApp(root: HTMLElement, client: ApiClient, doc?: Document): App {
  return new App(root, client, doc);
}
