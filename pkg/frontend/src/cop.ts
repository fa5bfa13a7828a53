/** Order-preservation panel: safety badges, thresholds, margins, direct
 * violations, and the what-if delta overlay. */

import { fmt3, fmtFull } from "./format.js";
import type { BundleDoc, WhatIfDoc } from "./types.js";

export interface CopHandlers {
  onWhatIf(deltaText: string): void;
  onClearWhatIf(): void;
}

function badge(id: string, safe: boolean, hasViolations: boolean): HTMLElement {
  const span = document.createElement("span");
  span.id = id;
  if (safe) {
    span.className = "badge safe";
    span.textContent = "guaranteed";
  } else if (hasViolations) {
    span.className = "badge violated";
    span.textContent = "violated";
  } else {
    span.className = "badge unknown";
    span.textContent = "not guaranteed";
  }
  return span;
}

function marginText(margin: number | null): string {
  return margin === null ? "n/a" : fmt3(margin);
}

export function renderCopPanel(bundle: BundleDoc, whatIf: WhatIfDoc | null,
                               handlers: CopHandlers): HTMLElement {
  const section = document.createElement("section");
  section.className = "panel";
  section.id = "cop-panel";

  const heading = document.createElement("h2");
  heading.textContent = "order preservation";
  section.appendChild(heading);

  const cop = bundle.cop;

  const popRow = document.createElement("p");
  popRow.append("POP ", badge("pop-badge", cop.pop_safe, cop.pop_violations.length > 0));
  const popDetail = document.createElement("span");
  popDetail.className = "detail";
  popDetail.textContent = ` entries must exceed ${fmt3(cop.pop_threshold)} (margin ${marginText(cop.pop_margin)})`;
  popDetail.title = fmtFull(cop.pop_threshold);
  popRow.appendChild(popDetail);
  section.appendChild(popRow);

  const poipRow = document.createElement("p");
  poipRow.append("POIP ", badge("poip-badge", cop.poip_safe, cop.poip_violations.length > 0));
  const poipDetail = document.createElement("span");
  poipDetail.className = "detail";
  poipDetail.textContent = ` ratios must exceed ${fmt3(cop.poip_threshold)} (margin ${marginText(cop.poip_margin)})`;
  poipDetail.title = fmtFull(cop.poip_threshold);
  poipRow.appendChild(poipDetail);
  section.appendChild(poipRow);

  const violations = document.createElement("ul");
  violations.id = "violation-list";
  for (const [i, j] of cop.pop_violations) {
    const li = document.createElement("li");
    li.textContent = `POP broken: m(${i},${j}) > 1 but the ranking puts ${j} first`;
    violations.appendChild(li);
  }
  for (const [i, j, k, l] of cop.poip_violations) {
    const li = document.createElement("li");
    li.textContent = `POIP broken: m(${i},${j}) > m(${k},${l}) > 1 but the ranking reverses the intensities`;
    violations.appendChild(li);
  }
  if (!violations.children.length) {
    const li = document.createElement("li");
    li.textContent = "no direct violations";
    violations.appendChild(li);
  }
  section.appendChild(violations);

  const whatIfBox = document.createElement("div");
  whatIfBox.className = "what-if";
  const label = document.createElement("label");
  label.textContent = "what if delta were ";
  const input = document.createElement("input");
  input.id = "what-if-delta";
  input.type = "number";
  input.step = "0.01";
  input.min = "0";
  if (whatIf) input.value = String(whatIf.delta);
  label.appendChild(input);
  whatIfBox.appendChild(label);

  const apply = document.createElement("button");
  apply.id = "what-if-apply";
  apply.textContent = "overlay";
  apply.addEventListener("click", () => handlers.onWhatIf(input.value));
  whatIfBox.appendChild(apply);

  const clear = document.createElement("button");
  clear.id = "what-if-clear";
  clear.textContent = "clear";
  clear.addEventListener("click", () => handlers.onClearWhatIf());
  whatIfBox.appendChild(clear);

  const message = document.createElement("span");
  message.id = "what-if-message";
  message.className = "validation-message";
  whatIfBox.appendChild(message);
  section.appendChild(whatIfBox);

  if (whatIf) {
    const summary = document.createElement("p");
    summary.id = "what-if-summary";
    summary.textContent =
      `at delta ${fmt3(whatIf.delta)}: POP ${whatIf.pop_safe ? "guaranteed" : "not guaranteed"}` +
      ` (threshold ${fmt3(whatIf.pop_threshold)}), POIP ${whatIf.poip_safe ? "guaranteed" : "not guaranteed"}` +
      ` (threshold ${fmt3(whatIf.poip_threshold)})`;
    section.appendChild(summary);

    const flags = document.createElement("ul");
    flags.id = "what-if-flags";
    for (const [i, j] of whatIf.pop_failures) {
      const li = document.createElement("li");
      li.textContent = `entry (${i},${j}) would fall below the entry threshold`;
      flags.appendChild(li);
    }
    for (const [i, j, k, l] of whatIf.poip_failures) {
      const li = document.createElement("li");
      li.textContent = `pair m(${i},${j}) vs m(${k},${l}) would fall below the ratio threshold`;
      flags.appendChild(li);
    }
    if (!flags.children.length) {
      const li = document.createElement("li");
      li.textContent = "no entries or pairs at risk beyond the direct violations";
      flags.appendChild(li);
    }
    section.appendChild(flags);
  }

  return section;
}
