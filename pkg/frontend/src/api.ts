/**
 * Typed client for the lexitransfer HTTP service.
 *
 * The workbench never computes morphology or ranking itself; every
 * displayed form, order and score comes from these endpoints.
 */

export interface PosPanel {
  language: string;
  pos: string;
  paradigms: string[];
  fields: string[];
}

export interface ParadigmRow {
  features: string;
  surface: string;
}

export interface Lexeme {
  id: string;
  language: string;
  lemma: string;
  pos: string;
  paradigm_id: string;
  attributes: Record<string, string>;
  domains: string[];
}

export interface SenseOption {
  target: Lexeme;
  priority: number;
}

export interface VariantSlot {
  kind: string;
  source_surface: string;
  source_position: number;
  target_id: string | null;
  target_lemma: string | null;
  features: string | null;
  surface: string;
  priority: number | null;
}

export interface Variant {
  rendered: string;
  score: number | null;
  sense_priorities: number[];
  slots: VariantSlot[];
}

export interface TranslateResponse {
  variants: Variant[];
  alternatives: SenseOption[][];
  used_wsd: boolean;
  used_fallback: boolean;
  diagnostics: string[];
}

export interface QueueItem {
  id: number;
  surface: string;
  language: string;
  frequency: number;
  suggested_pos: string | null;
  status: string;
  sample_contexts: string[];
}

export interface NewLexeme {
  lemma: string;
  language: string;
  pos: string;
  paradigm_id: string;
  attributes?: Record<string, string>;
  domains?: string[];
}

export interface TranslateRequest {
  text: string;
  source: string;
  target: string;
  use_wsd?: boolean;
  max_variants?: number;
  active_domain?: string | null;
}

/** Error body of the service, rethrown with its stable code. */
export class ApiError extends Error {
  constructor(
    public code: string,
    message: string,
    public status: number,
  ) {
    super(message);
  }
}

export interface ApiClient {
  posPanels(): Promise<PosPanel[]>;
  previewParadigm(lemma: string, language: string, paradigmId: string): Promise<ParadigmRow[]>;
  addLexeme(body: NewLexeme, actor: string): Promise<Lexeme>;
  getParadigm(lexemeId: string): Promise<ParadigmRow[]>;
  senses(lexemeId: string, domain?: string): Promise<SenseOption[]>;
  translate(body: TranslateRequest): Promise<TranslateResponse>;
  retune(
    text: string,
    source: string,
    target: string,
    chosenTargets: Record<string, string>,
  ): Promise<Variant>;
  oovQueue(status?: string): Promise<QueueItem[]>;
  setQueueStatus(itemId: number, status: string, actor: string): Promise<QueueItem>;
}

export class HttpApiClient implements ApiClient {
  constructor(
    private baseUrl = "",
    private fetchFn: typeof fetch = fetch,
  ) {}

  private async call<T>(method: string, path: string, body?: unknown, actor?: string): Promise<T> {
    const headers: Record<string, string> = { "Content-Type": "application/json" };
    if (actor) headers["X-Actor"] = actor;
    const resp = await this.fetchFn(this.baseUrl + path, {
      method,
      headers,
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const data = await resp.json();
    if (!resp.ok) {
      throw new ApiError(data.code ?? "unknown", data.message ?? resp.statusText, resp.status);
    }
    return data as T;
  }

  async posPanels(): Promise<PosPanel[]> {
    const data = await this.call<{ panels: PosPanel[] }>("GET", "/pos-panels");
    return data.panels;
  }

  async previewParadigm(lemma: string, language: string, paradigmId: string): Promise<ParadigmRow[]> {
    const data = await this.call<{ forms: ParadigmRow[] }>("POST", "/paradigm/preview", {
      lemma,
      language,
      paradigm_id: paradigmId,
    });
    return data.forms;
  }

  addLexeme(body: NewLexeme, actor: string): Promise<Lexeme> {
    return this.call<Lexeme>("POST", "/lexemes", body, actor);
  }

  async getParadigm(lexemeId: string): Promise<ParadigmRow[]> {
    const data = await this.call<{ forms: ParadigmRow[] }>(
      "GET",
      `/lexemes/${encodeURIComponent(lexemeId)}/paradigm`,
    );
    return data.forms;
  }

  async senses(lexemeId: string, domain?: string): Promise<SenseOption[]> {
    const suffix = domain ? `?domain=${encodeURIComponent(domain)}` : "";
    const data = await this.call<{ senses: SenseOption[] }>(
      "GET",
      `/lexemes/${encodeURIComponent(lexemeId)}/senses${suffix}`,
    );
    return data.senses;
  }

  translate(body: TranslateRequest): Promise<TranslateResponse> {
    return this.call<TranslateResponse>("POST", "/translate", body);
  }

  retune(
    text: string,
    source: string,
    target: string,
    chosenTargets: Record<string, string>,
  ): Promise<Variant> {
    return this.call<Variant>("POST", "/translate/retune", {
      text,
      source,
      target,
      chosen_targets: chosenTargets,
    });
  }

  async oovQueue(status = "pending"): Promise<QueueItem[]> {
    const data = await this.call<{ items: QueueItem[] }>("GET", `/oov/queue?status=${status}`);
    return data.items;
  }

  setQueueStatus(itemId: number, status: string, actor: string): Promise<QueueItem> {
    return this.call<QueueItem>("POST", `/oov/queue/${itemId}/status`, { status }, actor);
  }
}
