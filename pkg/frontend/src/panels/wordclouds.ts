import type { WordcloudsDoc } from "../types.js";

export const FONT_MIN = 11;
export const FONT_MAX = 30;

export function fontSizeFor(count: number, minCount: number, maxCount: number): number {
  if (maxCount === minCount) {
    return (FONT_MIN + FONT_MAX) / 2;
  }
  // linear in count, so more frequent words always render at least as large
  return FONT_MIN + ((count - minCount) / (maxCount - minCount)) * (FONT_MAX - FONT_MIN);
}

/** One sized-text word list per cluster (deterministic word-cloud stand-in). */
export function renderWordclouds(container: HTMLElement, doc: WordcloudsDoc): void {
  container.replaceChildren();
  doc.tables.forEach((table, index) => {
    const card = document.createElement("div");
    card.className = "wordcloud-card";
    const title = document.createElement("h4");
    const size = doc.cluster_sizes[index];
    title.textContent = `cluster ${table.scope} (${size} model${size === 1 ? "" : "s"})`;
    card.appendChild(title);

    const body = document.createElement("p");
    body.className = "wordcloud-words";
    const counts = table.entries.map((e) => e.count);
    const minCount = Math.min(...counts);
    const maxCount = Math.max(...counts);
    for (const entry of table.entries) {
      const word = document.createElement("span");
      word.className = "wordcloud-word";
      word.textContent = entry.word;
      word.title = `${entry.count}`;
      word.dataset.count = String(entry.count);
      word.style.fontSize = `${fontSizeFor(entry.count, minCount, maxCount).toFixed(1)}px`;
      body.appendChild(word);
      body.appendChild(document.createTextNode(" "));
    }
    card.appendChild(body);
    container.appendChild(card);
  });
}
