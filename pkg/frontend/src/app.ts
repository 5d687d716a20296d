// Application bootstrap: hash routing between the song list page and the
// comment details page, all rendering driven by the controller state.

import { HttpApi } from "./api.js";
import { ExplorerController, MAX_COMMENT_CHARS } from "./controller.js";
import { timelineRows } from "./mechanism.js";
import { el, renderCloud, renderCommentPanel, renderMap, renderSongList,
         renderTimeline } from "./render.js";
import { globalCloud, placeWords } from "./wordCloud.js";

declare global {
  interface Window {
    API_BASE?: string;
  }
}

const apiBase = window.API_BASE
  ?? new URLSearchParams(window.location.search).get("api")
  ?? "http://127.0.0.1:8000";

const controller = new ExplorerController(new HttpApi(apiBase));
const root = document.getElementById("app")!;

function currentRoute(): { page: "list" } | { page: "song"; id: string } {
  const hash = window.location.hash;
  const match = hash.match(/^#\/song\/(.+)$/);
  return match ? { page: "song", id: decodeURIComponent(match[1]) } : { page: "list" };
}

function playerBar(title: string): HTMLElement {
  const bar = el("div", "cm-player");
  const button = el("button", "cm-play", controller.playing ? "⏸" : "▶");
  button.type = "button";
  button.addEventListener("click", () => controller.togglePlay());
  bar.appendChild(button);
  bar.appendChild(el("span", "cm-player-title",
                     title + (controller.playing ? "  (playing)" : "")));
  return bar;
}

function renderListPage(): void {
  root.replaceChildren();
  const page = el("div", "cm-page");
  page.appendChild(el("h1", "cm-h1", "Song list"));
  if (controller.loadError) {
    const banner = el("div", "cm-banner", `API unreachable: ${controller.loadError} `);
    const retry = el("button", "cm-retry", "retry");
    retry.type = "button";
    retry.addEventListener("click", () => { void controller.loadSongs(); });
    banner.appendChild(retry);
    page.appendChild(banner);
  }
  page.appendChild(renderSongList(controller.visibleSongs(), controller.tagFilter, {
    onOpen: (songId) => { window.location.hash = `#/song/${encodeURIComponent(songId)}`; },
    onTag: (word) => controller.toggleTagFilter(word),
  }));
  const first = controller.visibleSongs()[0];
  page.appendChild(playerBar(first ? first.title : "nothing selected"));
  root.appendChild(page);
}

function renderSongPage(): void {
  root.replaceChildren();
  const page = el("div", "cm-page cm-details");
  const song = controller.songs.find((s) => s.id === controller.state.songId);

  const lyricPane = el("div", "cm-lyrics");
  lyricPane.appendChild(el("h2", "cm-h2", song ? song.title : controller.state.songId ?? ""));
  lyricPane.appendChild(el("p", "cm-lyrics-text",
    "Lyrics are not bundled with this corpus; the comment map on the right " +
    "tells the song's story over time."));
  lyricPane.appendChild(playerBar(song ? song.title : ""));
  const back = el("button", "cm-back", "← song list");
  back.type = "button";
  back.addEventListener("click", () => { window.location.hash = "#/"; });
  lyricPane.appendChild(back);
  page.appendChild(lyricPane);

  const commentView = el("div", "cm-comment-view");

  const form = el("div", "cm-post");
  const input = el("textarea", "cm-post-input") as HTMLTextAreaElement;
  input.placeholder = `Share a comment (max ${MAX_COMMENT_CHARS} characters)`;
  const send = el("button", "cm-post-send", "Post");
  send.type = "button";
  send.disabled = controller.posting;
  send.addEventListener("click", () => {
    void controller.submitComment(input.value).then((ok) => {
      if (ok) {
        input.value = "";
      }
    });
  });
  form.appendChild(input);
  form.appendChild(send);
  if (controller.postError) {
    form.appendChild(el("span", "cm-error cm-inline", controller.postError));
  }
  commentView.appendChild(form);

  if (controller.loadError) {
    commentView.appendChild(el("div", "cm-banner", controller.loadError));
  } else if (controller.layout && controller.scene) {
    const selectedCounty = controller.state.county;
    const cloudSource = selectedCounty !== null
      ? controller.layout.counties.find((c) => c.id === selectedCounty)?.cloud ?? []
      : globalCloud(controller.layout);
    commentView.appendChild(renderCloud(placeWords(cloudSource)));

    const middle = el("div", "cm-middle");
    middle.appendChild(renderTimeline(
      timelineRows(controller.layout, controller.state.county)));
    middle.appendChild(renderMap(controller.scene, controller.state, {
      onCellClick: (q, r) => { void controller.clickCell(q, r); },
      onCountyHover: () => {},
    }));
    middle.appendChild(renderCommentPanel(controller.panel, controller.panelError));
    commentView.appendChild(middle);
  }
  page.appendChild(commentView);
  root.appendChild(page);
}

function render(): void {
  const route = currentRoute();
  if (route.page === "list") {
    renderListPage();
  } else {
    renderSongPage();
  }
}

async function onRoute(): Promise<void> {
  const route = currentRoute();
  if (route.page === "song" && controller.state.songId !== route.id) {
    await controller.openSong(route.id);
  }
  render();
}

controller.onChange = render;
window.addEventListener("hashchange", () => { void onRoute(); });
window.addEventListener("keydown", (ev) => {
  if (ev.key === "Escape") {
    controller.escape();
  }
});

void controller.loadSongs().then(onRoute);
