// Page logic, kept free of DOM so it is directly testable: the renderer
// subscribes to `onChange` and redraws from the controller's fields.

import { Api } from "./api.js";
import { buildScene, Scene } from "./mapModel.js";
import {
  clearSelection,
  initialState,
  selectCell,
  selectCounty,
  ViewState,
} from "./state.js";
import { CommentDetail, LayoutDoc, SongSummary } from "./types.js";

export const MAX_COMMENT_CHARS = 280;

export function validateDraft(text: string): string | null {
  if (!text.trim()) {
    return "comment must not be empty";
  }
  if (text.length > MAX_COMMENT_CHARS) {
    return `comment exceeds ${MAX_COMMENT_CHARS} characters (${text.length})`;
  }
  return null;
}

export class ExplorerController {
  songs: SongSummary[] = [];
  tagFilter: string | null = null;
  layout: LayoutDoc | null = null;
  scene: Scene | null = null;
  state: ViewState = initialState();
  panel: CommentDetail | null = null;
  panelError: string | null = null;
  postError: string | null = null;
  loadError: string | null = null;
  posting = false;
  playing = false;

  onChange: () => void = () => {};

  constructor(private readonly api: Api) {}

  private changed(): void {
    this.onChange();
  }

  async loadSongs(): Promise<void> {
    try {
      this.songs = await this.api.getSongs();
      this.loadError = null;
    } catch (err) {
      this.loadError = String((err as Error).message ?? err);
    }
    this.changed();
  }

  visibleSongs(): SongSummary[] {
    if (!this.tagFilter) {
      return this.songs;
    }
    return this.songs.filter((s) => s.tags.some((t) => t.word === this.tagFilter));
  }

  toggleTagFilter(word: string): void {
    this.tagFilter = this.tagFilter === word ? null : word;
    this.changed();
  }

  async openSong(songId: string): Promise<void> {
    this.state = { ...initialState(), songId };
    this.panel = null;
    this.postError = null;
    try {
      this.layout = await this.api.getLayout(songId);
      this.scene = buildScene(this.layout);
      this.loadError = null;
    } catch (err) {
      this.layout = null;
      this.scene = null;
      this.loadError = String((err as Error).message ?? err);
    }
    this.changed();
  }

  async clickCell(q: number, r: number): Promise<void> {
    if (!this.layout) {
      return;
    }
    const before = this.state;
    this.state = selectCell(this.state, this.layout, q, r);
    if (this.state === before) {
      return;   // empty cell: no-op
    }
    const cell = this.layout.cells.find((c) => c.q === q && c.r === r)!;
    try {
      this.panel = await this.api.getComment(cell.comment_id);
      this.panelError = null;
    } catch (err) {
      this.panel = null;
      this.panelError = String((err as Error).message ?? err);
    }
    this.changed();
  }

  clickCounty(county: number): void {
    if (!this.layout) {
      return;
    }
    this.state = selectCounty(this.state, this.layout, county);
    this.changed();
  }

  escape(): void {
    this.state = clearSelection(this.state);
    this.panel = null;
    this.changed();
  }

  togglePlay(): void {
    this.playing = !this.playing;
    this.changed();
  }

  /** Post a comment, then re-fetch the layout so the new cell appears. */
  async submitComment(text: string, userId?: string): Promise<boolean> {
    const problem = validateDraft(text);
    if (problem) {
      this.postError = problem;
      this.changed();
      return false;
    }
    if (this.posting || !this.state.songId) {
      return false;   // double-submit guard
    }
    this.posting = true;
    this.postError = null;
    this.changed();
    try {
      await this.api.postComment(this.state.songId, text, userId);
      this.layout = await this.api.getLayout(this.state.songId);
      this.scene = buildScene(this.layout);
      return true;
    } catch (err) {
      this.postError = String((err as Error).message ?? err);
      return false;
    } finally {
      this.posting = false;
      this.changed();
    }
  }
}
