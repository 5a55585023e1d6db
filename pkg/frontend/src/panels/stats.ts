import type { StatsDoc } from "../types.js";
import { fmtCount } from "../format.js";

/** Summary statistics panel: coverage, correlation, most-downloaded models. */
export function renderStats(container: HTMLElement, stats: StatsDoc): void {
  container.replaceChildren();

  const list = document.createElement("dl");
  list.className = "stats-list";
  const row = (label: string, value: string, cls: string) => {
    const dt = document.createElement("dt");
    dt.textContent = label;
    const dd = document.createElement("dd");
    dd.textContent = value;
    dd.className = cls;
    list.appendChild(dt);
    list.appendChild(dd);
  };
  row("models", fmtCount(stats.model_count), "stat-models");
  row(
    "params inferred",
    `${fmtCount(stats.params_inferred_count)} (${(stats.params_inferred_fraction * 100).toFixed(1)}%)`,
    "stat-params",
  );
  row(
    "likes/downloads pearson r",
    stats.likes_downloads_pearson === null ? "n/a" : stats.likes_downloads_pearson.toFixed(3),
    "stat-pearson",
  );
  container.appendChild(list);

  const heading = document.createElement("h4");
  heading.textContent = "most downloaded";
  container.appendChild(heading);
  const top = document.createElement("ol");
  top.className = "stats-top-models";
  for (const model of stats.top_models) {
    const item = document.createElement("li");
    item.textContent = `${model.name} (${fmtCount(model.downloads)})`;
    top.appendChild(item);
  }
  container.appendChild(top);
}
