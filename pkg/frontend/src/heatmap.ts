/** Discrepancy heatmap: color scale anchored at 0 and the current global
 * maximum, with the argmax cell outlined. */

import { fmt3, fmtFull, heatColor } from "./format.js";
import type { BundleDoc } from "./types.js";

export function renderHeatmap(bundle: BundleDoc): HTMLElement {
  const section = document.createElement("section");
  section.className = "panel";
  section.id = "heatmap-panel";

  const heading = document.createElement("h2");
  heading.textContent = "discrepancy";
  section.appendChild(heading);

  const disc = bundle.discrepancy;
  const [argmaxI, argmaxJ] = disc.argmax;

  const table = document.createElement("table");
  table.className = "heatmap";

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
      const value = disc.values[i - 1][j - 1];
      td.style.backgroundColor = heatColor(value, disc.global);
      td.textContent = i === j ? "" : fmt3(value);
      td.title = fmtFull(value);
      if ((i === argmaxI && j === argmaxJ) || (i === argmaxJ && j === argmaxI)) {
        td.classList.add("argmax");
      }
      row.appendChild(td);
    }
    table.appendChild(row);
  }
  section.appendChild(table);

  const global = document.createElement("p");
  global.className = "stats";
  const value = document.createElement("span");
  value.id = "global-discrepancy";
  value.textContent = fmt3(disc.global);
  value.title = fmtFull(disc.global);
  global.append("global discrepancy ", value, ` at (${argmaxI},${argmaxJ})`);
  section.appendChild(global);

  return section;
}
