/** Suggestion panel: where the next expert look should go.
 *
 * Accepting only prefills the grid editor with the consistent target; the
 * expert still has to confirm (or adjust) before anything is applied.
 */

import { fmt3, fmtFull } from "./format.js";
import type { BundleDoc } from "./types.js";

export interface SuggestionHandlers {
  onAccept(): void;
}

export function renderSuggestion(bundle: BundleDoc, handlers: SuggestionHandlers): HTMLElement {
  const section = document.createElement("section");
  section.className = "panel";
  section.id = "suggestion-panel";

  const heading = document.createElement("h2");
  heading.textContent = "next revision";
  section.appendChild(heading);

  const s = bundle.suggestion;
  const [i, j] = s.position;

  const text = document.createElement("p");
  text.id = "suggestion-text";
  const target = document.createElement("span");
  target.id = "suggestion-target";
  target.textContent = fmt3(s.consistent_target);
  target.title = fmtFull(s.consistent_target);
  text.append(
    `worst judgment is (${i},${j}): currently ${fmt3(s.current_value)}, ` +
    `local discrepancy ${fmt3(s.local_discrepancy)}; the ranking suggests `,
    target,
  );
  section.appendChild(text);

  const accept = document.createElement("button");
  accept.id = "accept-suggestion";
  accept.textContent = "prefill editor";
  accept.addEventListener("click", () => handlers.onAccept());
  section.appendChild(accept);

  return section;
}
