/**
 * POS panel registry and the paradigm table view model.
 *
 * Panels are generated from the descriptors served by /pos-panels, so a
 * new paradigm or attribute field shows up without a UI change.
 */

import type { ApiClient, ParadigmRow, PosPanel } from "./api";

export class PanelRegistry {
  private byKey = new Map<string, PosPanel>();

  constructor(panels: PosPanel[]) {
    for (const p of panels) this.byKey.set(`${p.language}:${p.pos}`, p);
  }

  static async load(api: ApiClient): Promise<PanelRegistry> {
    return new PanelRegistry(await api.posPanels());
  }

  panelFor(language: string, pos: string): PosPanel {
    const panel = this.byKey.get(`${language}:${pos}`);
    if (!panel) throw new Error(`no panel for ${language}/${pos}`);
    return panel;
  }

  panelsFor(language: string): PosPanel[] {
    return [...this.byKey.values()].filter((p) => p.language === language);
  }
}

/**
 * Editable paradigm table.  Every row returned by the preview endpoint
 * is rendered; rows are never added or dropped client-side.  Edits are
 * tracked as exception overrides and flagged dirty.
 */
export class ParadigmTableView {
  readonly rows: ParadigmRow[];
  readonly exceptions = new Map<string, string>();
  dirty = false;

  constructor(rows: ParadigmRow[]) {
    this.rows = rows.map((r) => ({ ...r }));
  }

  get rowCount(): number {
    return this.rows.length;
  }

  surfaceAt(features: string): string {
    const override = this.exceptions.get(features);
    if (override !== undefined) return override;
    const row = this.rows.find((r) => r.features === features);
    if (!row) throw new Error(`no row for ${features}`);
    return row.surface;
  }

  editException(features: string, surface: string): void {
    if (!this.rows.some((r) => r.features === features)) {
      throw new Error(`no row for ${features}`);
    }
    this.exceptions.set(features, surface);
    this.dirty = true;
  }
}
