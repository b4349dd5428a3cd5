import { beforeEach, describe, expect, it } from "vitest";

import { EntryPanelModel } from "../src/entry";
import { OovQueueModel } from "../src/oov";
import { PanelRegistry, ParadigmTableView } from "../src/panels";
import { TranslationPanelModel } from "../src/translation";
import { FakeApi } from "./fake_api";

let api: FakeApi;
let registry: PanelRegistry;

beforeEach(async () => {
  api = new FakeApi();
  registry = await PanelRegistry.load(api);
});

describe("POS panels", () => {
  it("offers 11 panels for LT and 12 for EN, straight from the API", () => {
    expect(registry.panelsFor("LT")).toHaveLength(11);
    expect(registry.panelsFor("EN")).toHaveLength(12);
    expect(registry.panelFor("EN", "determiner").pos).toBe("determiner");
    expect(() => registry.panelFor("LT", "determiner")).toThrow();
  });
});

describe("paradigm table", () => {
  it("renders exactly the rows the API returned — none added or dropped", async () => {
    const ltRows = await api.previewParadigm("stalas", "LT", "lt-noun-as-m");
    const ltView = new ParadigmTableView(ltRows);
    expect(ltView.rowCount).toBe(ltRows.length);
    expect(ltView.rowCount).toBe(14);

    const enRows = await api.previewParadigm("pen", "EN", "generic");
    expect(new ParadigmTableView(enRows).rowCount).toBe(enRows.length);
  });

  it("exception edits mark the view dirty without touching other rows", async () => {
    const view = new ParadigmTableView(await api.previewParadigm("stalas", "LT", "x"));
    expect(view.dirty).toBe(false);
    view.editException("case=vocative|number=sg", "stale");
    expect(view.dirty).toBe(true);
    expect(view.surfaceAt("case=vocative|number=sg")).toBe("stale");
    expect(view.surfaceAt("case=genitive|number=sg")).toBe("stalo");
  });
});

describe("lexeme entry flow", () => {
  it("previews, saves, and shows the re-fetched paradigm after save", async () => {
    const entry = new EntryPanelModel(api, registry);
    entry.selectPanel("LT", "noun");
    entry.lemma = "stalas";
    await entry.refreshPreview();
    expect(entry.preview!.rowCount).toBe(14);
    expect(entry.preview!.surfaceAt("case=genitive|number=sg")).toBe("stalo");

    const saved = await entry.save("lex1");
    expect(saved).not.toBeNull();
    expect(api.calls.getParadigm).toBe(1); // displayed table is a fresh GET
    expect(entry.savedTable!.rows).toEqual(entry.preview!.rows);
  });

  it("surfaces duplicate_lexeme inline and saves nothing", async () => {
    const entry = new EntryPanelModel(api, registry);
    entry.selectPanel("LT", "noun");
    entry.lemma = "stalas";
    await entry.save("lex1");
    const again = await entry.save("lex1");
    expect(again).toBeNull();
    expect(entry.errorCode).toBe("duplicate_lexeme");
    expect(api.lexemes.size).toBe(1);
  });
});

describe("translation panel", () => {
  it("renders the winning variant with its count visible", async () => {
    const panel = new TranslationPanelModel(api);
    await panel.run("pen is on the table");
    expect(panel.variants).toHaveLength(9);
    expect(panel.variants[0].rendered).toBe("Rašiklis yra ant stalo");
    expect(panel.topScore()).toBe(301);
    expect(panel.rankingBadge).toBe("counts");
  });

  it("sense dropdowns list alternatives in exactly the API's order", async () => {
    const panel = new TranslationPanelModel(api);
    await panel.run("pen is on the table");
    const pen = panel.dropdowns.find((d) => d.position === 0)!;
    const served = await api.senses("en:pen");
    expect(pen.options.map((o) => o.target.lemma)).toEqual(
      served.map((o) => o.target.lemma),
    );
    expect(JSON.stringify(pen.options)).toBe(JSON.stringify(served));
    expect(pen.options.map((o) => o.target.lemma)).toEqual(["rašiklis", "gulbė", "areštinė"]);
  });

  it("re-tunes on sense override without re-running disambiguation", async () => {
    const panel = new TranslationPanelModel(api);
    await panel.run("pen is on the table");
    expect(api.calls.translate).toBe(1);

    await panel.chooseAlternative(0, "lt:gulbe");
    expect(panel.rendered).toBe("Gulbė yra ant stalo");
    expect(api.calls.retune).toBe(1);
    expect(api.calls.translate).toBe(1); // unchanged: no second WSD pass
  });

  it("labels priority ranking when WSD is off", async () => {
    const panel = new TranslationPanelModel(api);
    panel.useWsd = false;
    await panel.run("pen is on the table");
    expect(panel.rankingBadge).toBe("priority");
    expect(panel.topScore()).toBeNull();
  });

  it("shows a banner when the service fell back mid-scoring", async () => {
    api.useFallback = true;
    const panel = new TranslationPanelModel(api);
    await panel.run("pen is on the table");
    expect(panel.fallbackBanner).toMatch(/budget/);
    expect(panel.rankingBadge).toBe("priority");
  });
});

describe("OOV triage", () => {
  it("clicking an item prefills the matching POS panel", async () => {
    const entry = new EntryPanelModel(api, registry);
    const queue = new OovQueueModel(api);
    await queue.refresh();
    expect(queue.items.map((i) => i.surface)).toEqual(["plokščiakalnis", "namas"]);

    queue.openInPanel(queue.items[0], entry);
    expect(entry.language).toBe("LT");
    expect(entry.pos).toBe("noun");
    expect(entry.lemma).toBe("plokščiakalnis");
    expect(entry.paradigmId).toBe("lt-noun-as-m"); // panel's first paradigm preselected
  });

  it("save from the prefilled panel marks the item entered", async () => {
    const entry = new EntryPanelModel(api, registry);
    const queue = new OovQueueModel(api);
    await queue.refresh();
    queue.openInPanel(queue.items[0], entry);

    await entry.save("lex1");
    await queue.confirmEntered("lex1");
    expect(api.queue[0].status).toBe("entered");
    expect(queue.items.map((i) => i.surface)).toEqual(["namas"]);
  });

  it("reject removes the item from the pending list", async () => {
    const queue = new OovQueueModel(api);
    await queue.refresh();
    await queue.reject(queue.items[1], "lex1");
    expect(queue.items.map((i) => i.surface)).toEqual(["plokščiakalnis"]);
    expect(api.queue[1].status).toBe("rejected");
  });
});
