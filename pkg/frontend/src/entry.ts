/**
 * Lexeme entry flow: pick a POS panel, type a lemma, check the live
 * paradigm preview, then save.  Every save round-trips; the table shown
 * after saving is re-fetched from the service, never kept optimistic.
 */

import { ApiError, type ApiClient, type Lexeme } from "./api";
import { PanelRegistry, ParadigmTableView } from "./panels";

export class EntryPanelModel {
  language = "";
  pos = "";
  lemma = "";
  paradigmId = "";
  attributes: Record<string, string> = {};
  preview: ParadigmTableView | null = null;
  savedTable: ParadigmTableView | null = null;
  saved: Lexeme | null = null;
  /** Stable error code of the last failed call, shown inline. */
  errorCode: string | null = null;
  errorMessage: string | null = null;

  constructor(
    private api: ApiClient,
    private registry: PanelRegistry,
  ) {}

  selectPanel(language: string, pos: string): void {
    const panel = this.registry.panelFor(language, pos);
    this.language = panel.language;
    this.pos = panel.pos;
    this.paradigmId = panel.paradigms[0] ?? "";
    this.preview = null;
    this.saved = null;
    this.errorCode = null;
    this.errorMessage = null;
  }

  /** OOV triage hands a surface straight into the matching panel. */
  prefill(surface: string, language: string, pos: string): void {
    this.selectPanel(language, pos);
    this.lemma = surface;
  }

  fieldsToShow(): string[] {
    return this.registry.panelFor(this.language, this.pos).fields;
  }

  async refreshPreview(): Promise<void> {
    this.errorCode = null;
    try {
      const rows = await this.api.previewParadigm(this.lemma, this.language, this.paradigmId);
      this.preview = new ParadigmTableView(rows);
    } catch (err) {
      this.captureError(err);
    }
  }

  async save(actor: string): Promise<Lexeme | null> {
    this.errorCode = null;
    try {
      this.saved = await this.api.addLexeme(
        {
          lemma: this.lemma,
          language: this.language,
          pos: this.pos,
          paradigm_id: this.paradigmId,
          attributes: this.attributes,
          domains: [],
        },
        actor,
      );
      // displayed table must equal a fresh GET after save
      this.savedTable = new ParadigmTableView(await this.api.getParadigm(this.saved.id));
      return this.saved;
    } catch (err) {
      this.captureError(err);
      return null;
    }
  }

  private captureError(err: unknown): void {
    if (err instanceof ApiError) {
      this.errorCode = err.code;
      this.errorMessage = err.message;
    } else {
      throw err;
    }
  }
}
