/** Application shell: load a matrix, keep one session, render all panels.
 *
 * Every number on screen comes from a service bundle field; the only
 * client-side processing is parsing the text the user typed.  Edits are
 * queued so at most one mutation is in flight at a time.
 */

import { ApiError, SessionApi } from "./api.js";
import type { SessionClient } from "./api.js";
import { renderBars } from "./bars.js";
import { renderCopPanel } from "./cop.js";
import { parseCellValue } from "./format.js";
import { cellInputId, renderGrid } from "./grid.js";
import { renderHeatmap } from "./heatmap.js";
import { renderHistory } from "./history.js";
import { renderSuggestion } from "./suggestion.js";
import type { MatrixPayload, SessionDoc, WhatIfDoc } from "./types.js";

/** The classical 4-concept example: inconsistent enough to break POIP. */
export const DEMO_MATRIX: MatrixPayload = {
  labels: ["c1", "c2", "c3", "c4"],
  matrix: [
    [1, 2.5, 4, 9.5],
    [0.4, 1, 3, 6.5],
    [0.25, 1 / 3, 1, 5],
    [1 / 9.5, 1 / 6.5, 0.2, 1],
  ],
};

/** Parse pasted/uploaded matrix text: the JSON interchange form or CSV
 * (optional label header, fractions like 1/3 allowed). */
export function parseMatrixText(text: string): MatrixPayload {
  const trimmed = text.trim();
  if (trimmed === "") throw new Error("empty matrix input");
  if (trimmed.startsWith("{")) {
    const doc = JSON.parse(trimmed);
    if (!doc || !Array.isArray(doc.matrix)) throw new Error('expected {"matrix": [[...]]}');
    return { labels: doc.labels, matrix: doc.matrix };
  }
  const rows = trimmed.split(/\r?\n/).map((line) => line.split(",")).filter((r) => r.join("").trim() !== "");
  let labels: string[] | undefined;
  const firstParsed = rows[0].map((cell) => parseCellValue(cell));
  if (firstParsed.some((v) => v === null)) {
    labels = rows.shift()!.map((cell) => cell.trim());
  }
  const matrix = rows.map((row, rowIndex) =>
    row.map((cell, colIndex) => {
      const value = parseCellValue(cell);
      if (value === null) {
        throw new Error(`cannot parse entry (${rowIndex + 1},${colIndex + 1}): ${cell.trim()}`);
      }
      return value;
    }),
  );
  return { labels, matrix };
}

function describeError(exc: unknown): string {
  if (exc instanceof ApiError) {
    const where = exc.detail.row !== null ? ` at (${exc.detail.row},${exc.detail.col})` : "";
    return `${exc.status}${where}: ${exc.detail.reason}`;
  }
  return exc instanceof Error ? exc.message : String(exc);
}

export class App {
  private session: SessionDoc | null = null;
  private whatIf: WhatIfDoc | null = null;
  private toast = "";
  private queue: Promise<void> = Promise.resolve();

  private readonly loaderRoot: HTMLElement;
  private readonly sessionRoot: HTMLElement;

  constructor(root: HTMLElement, private readonly api: SessionClient) {
    root.replaceChildren();
    this.loaderRoot = document.createElement("div");
    this.sessionRoot = document.createElement("div");
    root.append(this.loaderRoot, this.sessionRoot);
    this.renderLoader();
    this.render();
  }

  /** Resolves when every queued mutation so far has settled. */
  whenIdle(): Promise<void> {
    return this.queue;
  }

  currentSession(): SessionDoc | null {
    return this.session;
  }

  loadMatrixText(text: string): Promise<void> {
    let payload: MatrixPayload;
    try {
      payload = parseMatrixText(text);
    } catch (exc) {
      this.toast = describeError(exc);
      this.render();
      return Promise.resolve();
    }
    return this.loadMatrix(payload);
  }

  loadMatrix(payload: MatrixPayload): Promise<void> {
    return this.enqueue(async () => {
      this.session = await this.api.createSession(payload);
      this.whatIf = null;
    });
  }

  /** Commit a grid edit.  Invalid input never reaches the network. */
  editEntry(i: number, j: number, text: string): Promise<void> {
    if (!this.session) return Promise.resolve();
    const value = parseCellValue(text);
    if (value === null) {
      this.setGridMessage(`"${text.trim()}" is not a positive number; cell (${i},${j}) left unchanged`);
      return Promise.resolve();
    }
    this.setGridMessage("");
    const id = this.session.id;
    return this.enqueue(async () => {
      this.session = await this.api.patchEntry(id, i, j, value);
      this.whatIf = null;
    });
  }

  /** Prefill the argmax cell's editor with the consistent target; the
   * expert confirms or adjusts, nothing is applied automatically. */
  acceptSuggestion(): void {
    if (!this.session) return;
    const s = this.session.bundle.suggestion;
    const [i, j] = s.position;
    const input = this.sessionRoot.querySelector<HTMLInputElement>(`#${cellInputId(i, j)}`);
    if (input) {
      input.value = String(s.consistent_target);
      input.focus();
    }
  }

  undo(): Promise<void> {
    if (!this.session) return Promise.resolve();
    const id = this.session.id;
    return this.enqueue(async () => {
      this.session = await this.api.undo(id);
      this.whatIf = null;
    });
  }

  setWhatIf(deltaText: string): Promise<void> {
    if (!this.session) return Promise.resolve();
    const delta = Number(deltaText);
    if (deltaText.trim() === "" || !Number.isFinite(delta) || delta < 0) {
      this.setWhatIfMessage("delta must be a nonnegative number");
      return Promise.resolve();
    }
    const id = this.session.id;
    return this.enqueue(async () => {
      this.whatIf = await this.api.whatIf(id, delta);
    });
  }

  clearWhatIf(): void {
    this.whatIf = null;
    this.render();
  }

  private enqueue(task: () => Promise<void>): Promise<void> {
    this.queue = this.queue.then(async () => {
      try {
        await task();
        this.toast = "";
      } catch (exc) {
        this.toast = describeError(exc);
      }
      this.render();
    });
    return this.queue;
  }

  private setGridMessage(text: string): void {
    const message = this.sessionRoot.querySelector("#grid-message");
    if (message) message.textContent = text;
  }

  private setWhatIfMessage(text: string): void {
    const message = this.sessionRoot.querySelector("#what-if-message");
    if (message) message.textContent = text;
  }

  private flaggedCells(): Set<string> {
    const flagged = new Set<string>();
    if (!this.session) return flagged;
    const mark = (i: number, j: number) => flagged.add(`${i},${j}`);
    if (this.whatIf) {
      for (const [i, j] of this.whatIf.pop_failures) mark(i, j);
      for (const [i, j, k, l] of this.whatIf.poip_failures) {
        mark(i, j);
        mark(k, l);
      }
      for (const [i, j] of this.whatIf.pop_violations) mark(i, j);
      for (const [i, j, k, l] of this.whatIf.poip_violations) {
        mark(i, j);
        mark(k, l);
      }
    }
    return flagged;
  }

  private renderLoader(): void {
    const panel = document.createElement("section");
    panel.className = "panel loader";

    const heading = document.createElement("h2");
    heading.textContent = "load judgments";
    panel.appendChild(heading);

    const textarea = document.createElement("textarea");
    textarea.id = "matrix-input";
    textarea.rows = 6;
    textarea.placeholder = 'CSV rows or {"labels": [...], "matrix": [[...]]}';
    panel.appendChild(textarea);

    const controls = document.createElement("div");
    const load = document.createElement("button");
    load.id = "load-button";
    load.textContent = "start session";
    load.addEventListener("click", () => void this.loadMatrixText(textarea.value));
    controls.appendChild(load);

    const demo = document.createElement("button");
    demo.id = "load-demo";
    demo.textContent = "load the classical example";
    demo.addEventListener("click", () => void this.loadMatrix(DEMO_MATRIX));
    controls.appendChild(demo);

    const file = document.createElement("input");
    file.id = "csv-upload";
    file.type = "file";
    file.accept = ".csv,.json";
    file.addEventListener("change", () => {
      const chosen = file.files && file.files[0];
      if (!chosen) return;
      void chosen.text().then((text) => {
        textarea.value = text;
        return this.loadMatrixText(text);
      });
    });
    controls.appendChild(file);

    const exportButton = document.createElement("button");
    exportButton.id = "export-json";
    exportButton.textContent = "export current as JSON";
    exportButton.addEventListener("click", () => {
      if (!this.session) return;
      const { labels, matrix } = this.session.bundle;
      textarea.value = JSON.stringify({ labels, matrix });
    });
    controls.appendChild(exportButton);

    panel.appendChild(controls);
    this.loaderRoot.replaceChildren(panel);
  }

  private render(): void {
    const children: HTMLElement[] = [];

    const toast = document.createElement("div");
    toast.id = "toast";
    toast.className = this.toast ? "toast visible" : "toast";
    toast.textContent = this.toast;
    children.push(toast);

    if (this.session) {
      const doc = this.session;
      children.push(
        renderGrid(doc.bundle, this.flaggedCells(), {
          onEdit: (i, j, text) => void this.editEntry(i, j, text),
        }),
        renderBars(doc.bundle),
        renderHeatmap(doc.bundle),
        renderCopPanel(doc.bundle, this.whatIf, {
          onWhatIf: (deltaText) => void this.setWhatIf(deltaText),
          onClearWhatIf: () => this.clearWhatIf(),
        }),
        renderSuggestion(doc.bundle, { onAccept: () => this.acceptSuggestion() }),
        renderHistory(doc, { onUndo: () => void this.undo() }),
      );
    }
    this.sessionRoot.replaceChildren(...children);
  }
}

export function mountApp(root: HTMLElement, baseUrl = ""): App {
  return new App(root, new SessionApi(baseUrl));
}
