/** Judgment grid: upper triangle editable, lower triangle mirrored read-only.
 *
 * Reciprocity is enforced structurally: only cells above the diagonal carry
 * an input, the mirrored values are rendered straight from the bundle's
 * matrix field (the server stores exact reciprocals), never computed here.
 */

import { fmt3, fmtFull } from "./format.js";
import type { BundleDoc } from "./types.js";

export interface GridHandlers {
  /** Called with the raw editor text when the user commits a cell. */
  onEdit(i: number, j: number, text: string): void;
}

export function cellInputId(i: number, j: number): string {
  return `cell-${i}-${j}`;
}

export function renderGrid(bundle: BundleDoc, flagged: Set<string>, handlers: GridHandlers): HTMLElement {
  const section = document.createElement("section");
  section.className = "panel";
  section.id = "grid-panel";

  const heading = document.createElement("h2");
  heading.textContent = "judgments";
  section.appendChild(heading);

  const table = document.createElement("table");
  table.className = "grid";

  const head = document.createElement("tr");
  head.appendChild(document.createElement("th"));
  for (const label of bundle.labels) {
    const th = document.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }
  table.appendChild(head);

  for (let i = 1; i <= bundle.n; i++) {
    const row = document.createElement("tr");
    const rowHead = document.createElement("th");
    rowHead.textContent = bundle.labels[i - 1];
    row.appendChild(rowHead);

    for (let j = 1; j <= bundle.n; j++) {
      const td = document.createElement("td");
      const value = bundle.matrix[i - 1][j - 1];
      if (flagged.has(`${i},${j}`) || flagged.has(`${j},${i}`)) {
        td.classList.add("flagged");
      }
      if (i === j) {
        td.className += " diagonal";
        td.textContent = "1";
      } else if (i < j) {
        const input = document.createElement("input");
        input.id = cellInputId(i, j);
        input.className = "cell-input";
        input.value = fmt3(value);
        input.title = fmtFull(value);
        input.dataset.i = String(i);
        input.dataset.j = String(j);
        input.addEventListener("change", () => handlers.onEdit(i, j, input.value));
        td.appendChild(input);
      } else {
        td.className += " mirror";
        td.textContent = fmt3(value);
        td.title = fmtFull(value);
      }
      row.appendChild(td);
    }
    table.appendChild(row);
  }
  section.appendChild(table);

  const note = document.createElement("p");
  note.className = "hint";
  note.textContent = "edit cells above the diagonal; the mirrored half follows automatically";
  section.appendChild(note);

  const message = document.createElement("p");
  message.className = "validation-message";
  message.id = "grid-message";
  section.appendChild(message);

  return section;
}
