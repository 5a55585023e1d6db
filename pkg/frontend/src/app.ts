import { ApiError, postAtlas, type FetchLike } from "./api.js";
import { renderDendrogram } from "./panels/dendrogram.js";
import { renderGraph } from "./panels/graph.js";
import { renderScatter } from "./panels/scatter.js";
import { renderStats } from "./panels/stats.js";
import { renderWordclouds } from "./panels/wordclouds.js";
import {
  DEFAULT_CONTROLS,
  validateControls,
  type AtlasBundle,
  type ControlsState,
} from "./types.js";

const PANELS = ["stats", "scatter", "dendrogram", "graph", "wordclouds"] as const;
type PanelName = (typeof PANELS)[number];

/**
 * Explorer shell: parameter controls on top, result panels below.
 *
 * All numbers on screen come from the last successfully fetched bundle;
 * the client performs no similarity or clustering math of its own.
 */
export class App {
  readonly panels: Record<PanelName, HTMLElement>;
  bundle: AtlasBundle | null = null;
  loading = false;

  private readonly banner: HTMLElement;
  private readonly runButton: HTMLButtonElement;
  private readonly inputs: {
    min_downloads: HTMLInputElement;
    k: HTMLInputElement;
    seed: HTMLInputElement;
    show_wordclouds: HTMLInputElement;
  };

  constructor(
    root: HTMLElement,
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {
    root.replaceChildren();
    const controls = document.createElement("form");
    controls.className = "controls";
    controls.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.run();
    });

    const numberInput = (label: string, name: string, value: number, min?: number) => {
      const wrap = document.createElement("label");
      wrap.textContent = label;
      const input = document.createElement("input");
      input.type = "number";
      input.name = name;
      input.value = String(value);
      if (min !== undefined) {
        input.min = String(min);
      }
      wrap.appendChild(input);
      controls.appendChild(wrap);
      return input;
    };

    this.inputs = {
      min_downloads: numberInput(
        "Minimum downloads an LLM must have",
        "min_downloads",
        DEFAULT_CONTROLS.min_downloads,
        0,
      ),
      k: numberInput("Number of clusters to group into", "k", DEFAULT_CONTROLS.k, 1),
      seed: numberInput("Seed", "seed", DEFAULT_CONTROLS.seed),
      show_wordclouds: (() => {
        const wrap = document.createElement("label");
        wrap.textContent = "Show word clouds?";
        const input = document.createElement("input");
        input.type = "checkbox";
        input.name = "show_wordclouds";
        input.checked = DEFAULT_CONTROLS.show_wordclouds;
        input.addEventListener("change", () => this.applyWordcloudVisibility());
        wrap.appendChild(input);
        controls.appendChild(wrap);
        return input;
      })(),
    };

    this.runButton = document.createElement("button");
    this.runButton.type = "submit";
    this.runButton.className = "run-button";
    this.runButton.textContent = "Run Clustering";
    controls.appendChild(this.runButton);
    root.appendChild(controls);

    this.banner = document.createElement("div");
    this.banner.className = "error-banner";
    this.banner.hidden = true;
    root.appendChild(this.banner);

    const grid = document.createElement("div");
    grid.className = "panel-grid";
    this.panels = {} as Record<PanelName, HTMLElement>;
    for (const name of PANELS) {
      const section = document.createElement("section");
      section.className = `panel panel-${name}`;
      const heading = document.createElement("h3");
      heading.textContent = name;
      const body = document.createElement("div");
      body.className = "panel-body";
      section.appendChild(heading);
      section.appendChild(body);
      grid.appendChild(section);
      this.panels[name] = body;
    }
    root.appendChild(grid);
  }

  controls(): ControlsState {
    return {
      min_downloads: Number(this.inputs.min_downloads.value),
      k: Number(this.inputs.k.value),
      seed: Number(this.inputs.seed.value),
      show_wordclouds: this.inputs.show_wordclouds.checked,
    };
  }

  get errorText(): string | null {
    return this.banner.hidden ? null : this.banner.textContent;
  }

  /** POST the current controls; re-render everything on success. */
  async run(): Promise<void> {
    if (this.loading) {
      return;
    }
    const controls = this.controls();
    const invalid = validateControls(controls);
    if (invalid) {
      this.showError(invalid);
      return;
    }
    this.setLoading(true);
    this.banner.hidden = true;
    try {
      this.bundle = await postAtlas(controls, this.fetchFn);
      this.renderAll();
    } catch (error) {
      // keep the previous bundle rendered; surface the server's message
      this.showError(error instanceof ApiError ? error.message : `request failed: ${error}`);
    } finally {
      this.setLoading(false);
    }
  }

  private renderAll(): void {
    if (!this.bundle) {
      return;
    }
    renderStats(this.panels.stats, this.bundle.stats);
    renderScatter(this.panels.scatter, this.bundle.scatter);
    renderDendrogram(this.panels.dendrogram, this.bundle.tree);
    renderGraph(this.panels.graph, this.bundle.graph);
    renderWordclouds(this.panels.wordclouds, this.bundle.wordclouds);
    this.applyWordcloudVisibility();
  }

  private applyWordcloudVisibility(): void {
    const section = this.panels.wordclouds.parentElement;
    if (section) {
      (section as HTMLElement).hidden = !this.inputs.show_wordclouds.checked;
    }
  }

  private showError(message: string): void {
    this.banner.textContent = message;
    this.banner.hidden = false;
  }

  private setLoading(value: boolean): void {
    this.loading = value;
    this.runButton.disabled = value;
    for (const input of Object.values(this.inputs)) {
      input.disabled = value;
    }
  }
}
