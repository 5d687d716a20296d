import { readFileSync } from "node:fs";
import { resolve } from "node:path";

import { Api } from "../src/api.js";
import { CommentDetail, LayoutDoc, SongSummary } from "../src/types.js";

// resolved from the package root so it works in both node and jsdom runs
export function fixture<T>(name: string): T {
  const path = resolve(process.cwd(), "tests", "fixtures", name);
  return JSON.parse(readFileSync(path, "utf-8")) as T;
}

export const goldenLayout = (): LayoutDoc => fixture<LayoutDoc>("golden_layout.json");
export const goldenLayoutPlus1 = (): LayoutDoc =>
  fixture<LayoutDoc>("golden_layout_plus1.json");
export const goldenSongs = (): SongSummary[] =>
  fixture<SongSummary[]>("golden_songs.json");
export const goldenComments = (): Record<string, CommentDetail> =>
  fixture<Record<string, CommentDetail>>("golden_comments.json");
export const goldenPosted = (): CommentDetail =>
  fixture<CommentDetail>("golden_posted_comment.json");

/** In-memory API over the golden fixtures; posting swaps in the +1 layout. */
export class FakeApi implements Api {
  layout = goldenLayout();
  songs = goldenSongs();
  comments = goldenComments();
  posts: string[] = [];
  calls: string[] = [];
  failPost: string | null = null;

  async getSongs(): Promise<SongSummary[]> {
    this.calls.push("getSongs");
    return this.songs;
  }

  async getLayout(songId: string): Promise<LayoutDoc> {
    this.calls.push(`getLayout:${songId}`);
    if (songId !== this.layout.song_id) {
      throw new Error(`unknown song ${songId}`);
    }
    return this.layout;
  }

  async getComment(commentId: string): Promise<CommentDetail> {
    this.calls.push(`getComment:${commentId}`);
    const found = this.comments[commentId];
    if (!found) {
      throw new Error(`unknown comment ${commentId}`);
    }
    return found;
  }

  async postComment(songId: string, text: string): Promise<CommentDetail> {
    this.calls.push(`postComment:${songId}`);
    if (this.failPost) {
      throw new Error(this.failPost);
    }
    this.posts.push(text);
    this.layout = goldenLayoutPlus1();
    return goldenPosted();
  }
}
