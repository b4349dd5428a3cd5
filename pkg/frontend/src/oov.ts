/**
 * OOV triage: the pending queue (already frequency-sorted by the
 * service) with two actions per item — open the matching POS panel
 * prefilled with the surface, or reject.
 */

import type { ApiClient, QueueItem } from "./api";
import type { EntryPanelModel } from "./entry";

export class OovQueueModel {
  items: QueueItem[] = [];
  /** Queue item whose surface is currently loaded in the entry panel. */
  openItem: QueueItem | null = null;

  constructor(private api: ApiClient) {}

  async refresh(): Promise<void> {
    this.items = await this.api.oovQueue("pending");
    this.openItem = null;
  }

  /** "Open in panel": hand the surface to the lexeme entry flow. */
  openInPanel(item: QueueItem, entry: EntryPanelModel): void {
    entry.prefill(item.surface, item.language, item.suggested_pos ?? "noun");
    this.openItem = item;
  }

  /** Saving the prefilled panel marks the queue item entered. */
  async confirmEntered(actor: string): Promise<void> {
    if (!this.openItem) return;
    await this.api.setQueueStatus(this.openItem.id, "entered", actor);
    this.items = this.items.filter((i) => i.id !== this.openItem!.id);
    this.openItem = null;
  }

  async reject(item: QueueItem, actor: string): Promise<void> {
    await this.api.setQueueStatus(item.id, "rejected", actor);
    this.items = this.items.filter((i) => i.id !== item.id);
  }
}
