/** Step history with undo. */

import type { SessionDoc } from "./types.js";

export interface HistoryHandlers {
  onUndo(): void;
}

export function renderHistory(doc: SessionDoc, handlers: HistoryHandlers): HTMLElement {
  const section = document.createElement("section");
  section.className = "panel";
  section.id = "history-panel";

  const heading = document.createElement("h2");
  heading.textContent = "history";
  section.appendChild(heading);

  const list = document.createElement("ol");
  list.id = "step-list";
  for (const step of doc.step_log) {
    const li = document.createElement("li");
    const when = new Date(step.timestamp * 1000).toLocaleTimeString();
    li.textContent = `(${step.i},${step.j}) ${step.old_value} → ${step.new_value} at ${when}`;
    list.appendChild(li);
  }
  section.appendChild(list);

  const undo = document.createElement("button");
  undo.id = "undo-button";
  undo.textContent = "undo";
  undo.disabled = doc.step_log.length === 0;
  undo.addEventListener("click", () => handlers.onUndo());
  section.appendChild(undo);

  return section;
}
