// HTTP client for the explorer service endpoints.

import { CommentDetail, LayoutDoc, SongSummary, validateLayout } from "./types.js";

export interface Api {
  getSongs(): Promise<SongSummary[]>;
  getLayout(songId: string): Promise<LayoutDoc>;
  getComment(commentId: string): Promise<CommentDetail>;
  postComment(songId: string, text: string, userId?: string): Promise<CommentDetail>;
}

export class ApiError extends Error {
  constructor(message: string, public readonly status: number,
              public readonly stage?: string) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseError(resp: Response): Promise<ApiError> {
  let message = `${resp.status} ${resp.statusText}`;
  let stage: string | undefined;
  try {
    const body = await resp.json();
    if (body && typeof body.error === "string") {
      message = body.error;
      stage = body.stage;
    }
  } catch {
    // keep the HTTP status text
  }
  return new ApiError(message, resp.status, stage);
}

export class HttpApi implements Api {
  constructor(private readonly baseUrl: string) {}

  private async getJson(path: string): Promise<unknown> {
    const resp = await fetch(`${this.baseUrl}${path}`);
    if (!resp.ok) {
      throw await parseError(resp);
    }
    return resp.json();
  }

  async getSongs(): Promise<SongSummary[]> {
    return (await this.getJson("/songs")) as SongSummary[];
  }

  async getLayout(songId: string): Promise<LayoutDoc> {
    const doc = await this.getJson(`/songs/${encodeURIComponent(songId)}/layout`);
    return validateLayout(doc);
  }

  async getComment(commentId: string): Promise<CommentDetail> {
    return (await this.getJson(
      `/comments/${encodeURIComponent(commentId)}`)) as CommentDetail;
  }

  async postComment(songId: string, text: string,
                    userId?: string): Promise<CommentDetail> {
    const resp = await fetch(
      `${this.baseUrl}/songs/${encodeURIComponent(songId)}/comments`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(userId ? { text, user_id: userId } : { text }),
      });
    if (!resp.ok) {
      throw await parseError(resp);
    }
    return (await resp.json()) as CommentDetail;
  }
}
