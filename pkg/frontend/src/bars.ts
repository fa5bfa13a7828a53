/** Ranking bars: one horizontal bar per concept, widths from the weights. */

import { fmt3, fmtFull } from "./format.js";
import type { BundleDoc } from "./types.js";

export function renderBars(bundle: BundleDoc): HTMLElement {
  const section = document.createElement("section");
  section.className = "panel";
  section.id = "ranking-panel";

  const heading = document.createElement("h2");
  heading.textContent = "ranking";
  section.appendChild(heading);

  const maxWeight = Math.max(...bundle.ranking.weights);
  bundle.ranking.weights.forEach((weight, index) => {
    const row = document.createElement("div");
    row.className = "bar-row";

    const label = document.createElement("span");
    label.className = "bar-label";
    label.textContent = bundle.labels[index];
    row.appendChild(label);

    const track = document.createElement("div");
    track.className = "bar-track";
    const bar = document.createElement("div");
    bar.className = "bar";
    bar.style.width = `${(100 * weight) / maxWeight}%`;
    track.appendChild(bar);
    row.appendChild(track);

    const value = document.createElement("span");
    value.className = "bar-value";
    value.id = `weight-${index + 1}`;
    value.textContent = fmt3(weight);
    value.title = fmtFull(weight);
    row.appendChild(value);

    section.appendChild(row);
  });

  const stats = document.createElement("p");
  stats.className = "stats";
  stats.innerHTML = "";
  const lambda = document.createElement("span");
  lambda.id = "lambda-max";
  lambda.textContent = `lambda_max ${fmt3(bundle.eigen.lambda_max)}`;
  lambda.title = fmtFull(bundle.eigen.lambda_max);
  const saaty = document.createElement("span");
  saaty.id = "saaty-index";
  saaty.textContent = `saaty index ${fmt3(bundle.saaty_index)}`;
  saaty.title = fmtFull(bundle.saaty_index);
  stats.append(lambda, " · ", saaty, ` · method ${bundle.ranking.method}`);
  section.appendChild(stats);

  return section;
}
