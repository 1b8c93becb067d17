// End-to-end session against the real analysis service: spawn it, walk
// the live-play flow, and check the exact recommendation.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { createClient } from "../src/api";
import { fractionLabel } from "../src/render";
import { Session } from "../src/session";

const PORT = 18640 + (process.pid % 100);
const BASE = `http://127.0.0.1:${PORT}`;

const EX3_TILES = [
  "B1", "B2", "B3", "B7", "B8", "B9",
  "C2", "C2", "C2",
  "D1", "D2", "D3", "D5", "D9",
];

let service: ChildProcess;

async function waitForHealth(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  for (;;) {
    try {
      const res = await fetch(`${BASE}/health`);
      if (res.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    if (Date.now() > deadline) {
      throw new Error("service did not come up");
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
}

beforeAll(async () => {
  service = spawn(
    "python3",
    ["-m", "mahjong0.cli", "serve", "--host", "127.0.0.1", "--port", String(PORT)],
    { stdio: "ignore" },
  );
  await waitForHealth(30_000);
}, 40_000);

afterAll(() => {
  service?.kill();
});

describe("live-play session against the service", () => {
  it("recommends D9 at 7/12, and undo restores the advice", async () => {
    const client = createClient(BASE);
    const health = await client.health();
    expect(health.horizon_cap).toBeGreaterThanOrEqual(2);

    const session = new Session();
    for (const tile of EX3_TILES) {
      expect(session.addTile(tile)).toBe(true);
    }
    // mark seen discards until only one D2, D4, D5 and D9 remain out
    const target: Record<string, number> = { D2: 1, D4: 1, D5: 1, D9: 1 };
    for (const suit of ["B", "C", "D"]) {
      for (let n = 1; n <= 9; n += 1) {
        const token = `${suit}${n}`;
        while (session.availability(token) > (target[token] ?? 0)) {
          expect(session.recordSeen(token)).toBe(true);
        }
      }
    }
    expect(session.kbString()).toBe("(000000000)(000000000)(010110001)");

    session.horizon = 2;
    const first = await session.requestAdvice(client);
    const pick = first.entries[first.recommended_index];
    expect(pick.tile).toBe("D9");
    expect(fractionLabel(pick)).toBe("7/12");

    // a further observation changes the pool and the advice...
    expect(session.recordSeen("D2")).toBe(true);
    const second = await session.requestAdvice(client);
    expect(second).not.toEqual(first);

    // ...and undoing it restores the previous recommendation exactly
    expect(session.undo()).toBe(true);
    const third = await session.requestAdvice(client);
    expect(third).toEqual(first);
  }, 60_000);

  it("surfaces service errors verbatim", async () => {
    const client = createClient(BASE);
    const session = new Session();
    for (const tile of EX3_TILES) {
      session.addTile(tile);
    }
    session.horizon = 99;
    await expect(session.requestAdvice(client)).rejects.toMatchObject({
      code: "horizon_exceeded",
    });
    expect(session.warning).toContain("99");
  });
});
