/**
 * Translation panel: ranked variants with counts, a sense dropdown per
 * translated word, and re-tuning when the translator overrides a sense.
 *
 * Choosing an alternative only calls /translate/retune — word sense
 * disambiguation is not re-run and the budget is not spent again.
 */

import type { ApiClient, SenseOption, Variant } from "./api";

export interface SenseDropdown {
  position: number; // source token position the dropdown belongs to
  surface: string; // currently rendered target surface
  options: SenseOption[]; // strictly in the API's resolve order
  chosenTargetId: string | null;
}

export class TranslationPanelModel {
  text = "";
  source = "EN";
  target = "LT";
  useWsd = true;
  activeDomain: string | null = null;

  variants: Variant[] = [];
  dropdowns: SenseDropdown[] = [];
  rendered = "";
  /** "counts" when ranked by corpus counts, "priority" otherwise. */
  rankingBadge: "counts" | "priority" = "priority";
  fallbackBanner: string | null = null;

  constructor(private api: ApiClient) {}

  async run(text: string): Promise<void> {
    this.text = text;
    const resp = await this.api.translate({
      text,
      source: this.source,
      target: this.target,
      use_wsd: this.useWsd,
      active_domain: this.activeDomain,
    });
    this.variants = resp.variants;
    this.rankingBadge = resp.used_wsd && !resp.used_fallback ? "counts" : "priority";
    this.fallbackBanner = resp.used_fallback
      ? "query budget exhausted or no corpus evidence — showing priority ranking"
      : null;

    const top = resp.variants[0];
    this.rendered = top ? top.rendered : "";
    this.dropdowns = [];
    if (!top) return;
    resp.alternatives.forEach((options, i) => {
      const slot = top.slots[i];
      if (!slot || options.length === 0) return;
      this.dropdowns.push({
        position: slot.source_position,
        surface: slot.surface,
        options,
        chosenTargetId: slot.target_id,
      });
    });
  }

  topScore(): number | null {
    return this.variants[0]?.score ?? null;
  }

  /** Translator picked a different sense for one word. */
  async chooseAlternative(position: number, targetId: string): Promise<void> {
    const chosen: Record<string, string> = {};
    for (const dd of this.dropdowns) {
      const id = dd.position === position ? targetId : dd.chosenTargetId;
      if (id) chosen[String(dd.position)] = id;
    }
    const variant = await this.api.retune(this.text, this.source, this.target, chosen);
    this.rendered = variant.rendered;
    for (const dd of this.dropdowns) {
      if (dd.position === position) dd.chosenTargetId = targetId;
      const slot = variant.slots.find((s) => s.source_position === dd.position);
      if (slot) dd.surface = slot.surface;
    }
  }
}
