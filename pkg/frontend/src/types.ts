/** Wire types for the atlas API; field names match the server's JSON. */

export interface AtlasQuery {
  min_downloads: number;
  k: number;
  threshold: number;
  seed: number;
}

export interface TopModel {
  name: string;
  downloads: number;
}

export interface StatsDoc {
  model_count: number;
  params_inferred_count: number;
  params_inferred_fraction: number;
  likes_downloads_pearson: number | null;
  top_models: TopModel[];
}

export interface LeafMeta {
  downloads: number | null;
  likes: number | null;
  params_millions: number | null;
}

export interface TreeNode {
  name?: string;
  height: number;
  children: TreeNode[];
  meta?: LeafMeta;
}

export interface GraphNode {
  id: number;
  name: string;
  downloads: number | null;
  likes: number | null;
  params_millions: number | null;
  community: number;
  x: number;
  y: number;
}

export interface GraphEdge {
  source: number;
  target: number;
  weight: number;
}

export interface GraphCommunity {
  id: number;
  size: number;
  cx: number;
  cy: number;
}

export interface GraphDoc {
  nodes: GraphNode[];
  edges: GraphEdge[];
  communities: GraphCommunity[];
  frame: { width: number; height: number };
}

export interface WordEntry {
  word: string;
  count: number;
}

export interface WordTable {
  scope: string;
  entries: WordEntry[];
}

export interface WordcloudsDoc {
  cluster_sizes: number[];
  tables: WordTable[];
}

export interface ScatterPoint {
  log_downloads: number;
  log_likes: number;
  name: string;
}

export interface ScatterDoc {
  points: ScatterPoint[];
}

export interface AtlasBundle {
  query: AtlasQuery;
  computed_at: string;
  stats: StatsDoc;
  tree: TreeNode;
  graph: GraphDoc;
  wordclouds: WordcloudsDoc;
  scatter: ScatterDoc;
}

/** Client-side control values; mirrors the server's query validation. */
export interface ControlsState {
  min_downloads: number;
  k: number;
  show_wordclouds: boolean;
  seed: number;
}

export const DEFAULT_CONTROLS: ControlsState = {
  min_downloads: 10000,
  k: 20,
  show_wordclouds: true,
  seed: 42,
};

export function validateControls(c: ControlsState): string | null {
  if (!Number.isInteger(c.min_downloads) || c.min_downloads < 0) {
    return "minimum downloads must be a non-negative integer";
  }
  if (!Number.isInteger(c.k) || c.k < 1) {
    return "cluster count must be a positive integer";
  }
  if (!Number.isInteger(c.seed)) {
    return "seed must be an integer";
  }
  return null;
}
