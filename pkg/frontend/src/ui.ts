// DOM wiring: a 27-kind tile picker, the hand, the seen-tile log with
// undo, and the advice table.  State persists to localStorage so a
// reload restores the session.

import { createClient } from "./api";
import { adviceSummary, fractionLabel, noCompletionWithinHorizon } from "./render";
import { KINDS, Session } from "./session";

const STORAGE_KEY = "mahjong0-advisor-session";
const baseUrl = (window as { MAHJONG0_API?: string }).MAHJONG0_API ?? "http://127.0.0.1:8000";
const client = createClient(baseUrl);

let session = new Session();
try {
  const saved = localStorage.getItem(STORAGE_KEY);
  if (saved) {
    session = Session.restore(saved);
  }
} catch {
  session = new Session();
}

const el = (id: string) => document.getElementById(id) as HTMLElement;

function persist(): void {
  localStorage.setItem(STORAGE_KEY, session.serialize());
}

function renderPicker(): void {
  const picker = el("picker");
  picker.innerHTML = "";
  for (const kind of KINDS) {
    const button = document.createElement("button");
    const left = session.availability(kind);
    button.textContent = `${kind} (${left})`;
    button.className = "tile";
    button.addEventListener("click", () => {
      session.addTile(kind);
      refresh();
    });
    button.addEventListener("contextmenu", (event) => {
      event.preventDefault();
      session.recordSeen(kind);
      refresh();
    });
    picker.appendChild(button);
  }
}

function renderHand(): void {
  const handBox = el("hand");
  handBox.innerHTML = "";
  for (const token of session.hand) {
    const button = document.createElement("button");
    button.textContent = token;
    button.className = "tile in-hand";
    button.title = "click to remove";
    button.addEventListener("click", () => {
      session.removeTile(token);
      refresh();
    });
    handBox.appendChild(button);
  }
  el("hand-count").textContent = `${session.hand.length}/14`;
  (el("advise") as HTMLButtonElement).disabled = !session.canAdvise();
}

function renderLog(): void {
  const log = el("log");
  log.textContent = session.observations.join(" ") || "(nothing seen yet)";
  (el("undo") as HTMLButtonElement).disabled = session.observations.length === 0;
  el("kb").textContent = session.kbString();
}

function renderAdvice(): void {
  const box = el("advice");
  box.innerHTML = "";
  const advice = session.lastAdvice;
  if (!advice) {
    box.textContent = "no advice yet";
    return;
  }
  if (noCompletionWithinHorizon(advice)) {
    const banner = document.createElement("p");
    banner.className = "banner";
    banner.textContent = `no completion within ${advice.k} changes`;
    box.appendChild(banner);
  }
  const headline = document.createElement("p");
  headline.className = "headline";
  headline.textContent = adviceSummary(advice);
  box.appendChild(headline);
  const table = document.createElement("table");
  advice.entries.forEach((entry, i) => {
    const row = table.insertRow();
    if (i === advice.recommended_index) {
      row.className = "recommended";
    }
    row.insertCell().textContent = entry.tile;
    row.insertCell().textContent = fractionLabel(entry);
    row.insertCell().textContent = entry.value_decimal.toFixed(4);
  });
  box.appendChild(table);
}

function renderWarning(): void {
  el("warning").textContent = session.warning ?? "";
}

function refresh(): void {
  renderPicker();
  renderHand();
  renderLog();
  renderAdvice();
  renderWarning();
  persist();
}

el("advise").addEventListener("click", () => {
  session.horizon = Number((el("horizon") as HTMLSelectElement).value);
  session
    .requestAdvice(client)
    .then(refresh)
    .catch(refresh);
});

el("undo").addEventListener("click", () => {
  session.undo();
  refresh();
});

el("clear").addEventListener("click", () => {
  session.clearHand();
  refresh();
});

client
  .health()
  .then((health) => {
    const select = el("horizon") as HTMLSelectElement;
    select.innerHTML = "";
    for (let k = 1; k <= health.horizon_cap; k += 1) {
      const option = document.createElement("option");
      option.value = String(k);
      option.textContent = `within ${k} changes`;
      select.appendChild(option);
    }
    select.value = String(Math.min(session.horizon, health.horizon_cap));
    el("status").textContent = `service ${health.version}, horizon cap ${health.horizon_cap}`;
  })
  .catch(() => {
    el("status").textContent = `service unreachable at ${baseUrl}`;
  });

refresh();
