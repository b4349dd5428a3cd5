/**
 * DOM wiring for the workbench: three tabs (entry, translate, OOV)
 * rendered into #app.  All state lives in the view models; this file
 * only paints them and forwards events.
 */

import { HttpApiClient, type ApiClient } from "./api";
import { EntryPanelModel } from "./entry";
import { OovQueueModel } from "./oov";
import { PanelRegistry } from "./panels";
import { TranslationPanelModel } from "./translation";

const ACTOR = "workbench";

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  text?: string,
  cls?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (text !== undefined) node.textContent = text;
  if (cls) node.className = cls;
  return node;
}

function renderParadigmTable(rows: { features: string; surface: string }[]): HTMLTableElement {
  const table = el("table", undefined, "paradigm");
  for (const row of rows) {
    const tr = el("tr");
    tr.append(el("td", row.features), el("td", row.surface));
    table.append(tr);
  }
  return table;
}

function renderEntry(root: HTMLElement, entry: EntryPanelModel, registry: PanelRegistry): void {
  root.replaceChildren();
  const picker = el("div", undefined, "pos-picker");
  for (const lang of ["LT", "EN"]) {
    for (const panel of registry.panelsFor(lang)) {
      const btn = el("button", `${lang} ${panel.pos}`);
      btn.onclick = () => {
        entry.selectPanel(lang, panel.pos);
        renderEntry(root, entry, registry);
      };
      picker.append(btn);
    }
  }
  root.append(picker);
  if (!entry.pos) return;

  const form = el("div", undefined, "entry-form");
  const lemma = el("input");
  lemma.value = entry.lemma;
  lemma.placeholder = "lemma";
  lemma.oninput = () => (entry.lemma = lemma.value);
  const previewBtn = el("button", "preview");
  previewBtn.onclick = async () => {
    await entry.refreshPreview();
    renderEntry(root, entry, registry);
  };
  const saveBtn = el("button", "save");
  saveBtn.onclick = async () => {
    await entry.save(ACTOR);
    renderEntry(root, entry, registry);
  };
  form.append(el("span", `${entry.language} ${entry.pos} / ${entry.paradigmId}`), lemma, previewBtn, saveBtn);
  root.append(form);

  if (entry.errorCode) {
    root.append(el("p", `${entry.errorCode}: ${entry.errorMessage}`, "error"));
  }
  const table = entry.savedTable ?? entry.preview;
  if (table) root.append(renderParadigmTable(table.rows));
}

function renderTranslate(root: HTMLElement, panel: TranslationPanelModel): void {
  root.replaceChildren();
  const input = el("input");
  input.value = panel.text;
  input.placeholder = "text to translate";
  const wsd = el("input");
  wsd.type = "checkbox";
  wsd.checked = panel.useWsd;
  wsd.onchange = () => (panel.useWsd = wsd.checked);
  const go = el("button", "translate");
  go.onclick = async () => {
    await panel.run(input.value);
    renderTranslate(root, panel);
  };
  root.append(input, wsd, el("span", "WSD"), go, el("span", panel.rankingBadge, "badge"));
  if (panel.fallbackBanner) root.append(el("p", panel.fallbackBanner, "banner"));

  const list = el("ol");
  for (const variant of panel.variants) {
    const score = variant.score === null ? "—" : String(variant.score);
    list.append(el("li", `${variant.rendered}  (${score})`));
  }
  root.append(list);

  const senses = el("div", undefined, "dropdowns");
  for (const dd of panel.dropdowns) {
    const select = el("select");
    for (const opt of dd.options) {
      const option = el("option", opt.target.lemma);
      option.value = opt.target.id;
      option.selected = opt.target.id === dd.chosenTargetId;
      select.append(option);
    }
    select.onchange = async () => {
      await panel.chooseAlternative(dd.position, select.value);
      renderTranslate(root, panel);
    };
    senses.append(el("label", dd.surface + " "), select);
  }
  root.append(senses, el("p", panel.rendered, "rendered"));
}

function renderOov(
  root: HTMLElement,
  queue: OovQueueModel,
  entry: EntryPanelModel,
  registry: PanelRegistry,
  entryRoot: HTMLElement,
): void {
  root.replaceChildren();
  const table = el("table", undefined, "oov");
  for (const item of queue.items) {
    const tr = el("tr");
    const open = el("button", "open in panel");
    open.onclick = () => {
      queue.openInPanel(item, entry);
      renderEntry(entryRoot, entry, registry);
    };
    const reject = el("button", "reject");
    reject.onclick = async () => {
      await queue.reject(item, ACTOR);
      renderOov(root, queue, entry, registry, entryRoot);
    };
    const contexts = item.sample_contexts.join(" | ");
    tr.append(
      el("td", item.surface),
      el("td", String(item.frequency)),
      el("td", contexts),
      el("td"),
    );
    tr.lastElementChild!.append(open, reject);
    table.append(tr);
  }
  root.append(table);
}

export async function boot(api: ApiClient = new HttpApiClient()): Promise<void> {
  const app = document.getElementById("app");
  if (!app) throw new Error("missing #app mount point");

  const registry = await PanelRegistry.load(api);
  const entry = new EntryPanelModel(api, registry);
  const translation = new TranslationPanelModel(api);
  const queue = new OovQueueModel(api);
  await queue.refresh().catch(() => undefined);

  const entryRoot = el("section");
  const translateRoot = el("section");
  const oovRoot = el("section");
  app.replaceChildren(
    el("h1", "lexitransfer workbench"),
    el("h2", "lexeme entry"),
    entryRoot,
    el("h2", "translate"),
    translateRoot,
    el("h2", "OOV queue"),
    oovRoot,
  );
  renderEntry(entryRoot, entry, registry);
  renderTranslate(translateRoot, translation);
  renderOov(oovRoot, queue, entry, registry, entryRoot);
}

if (typeof document !== "undefined" && document.getElementById("app")) {
  void boot();
}
