import { describe, expect, it } from "vitest";

import type { Client } from "../src/api";
import { adviceSummary, fractionLabel, noCompletionWithinHorizon } from "../src/render";
import { Session } from "../src/session";
import type { AdviseResponse } from "../src/types";

const EQ1_TILES = [
  "B1", "B2", "B2", "B3", "B3", "B4", "B7", "B7", "B7",
  "C1", "C1", "D4", "D5", "D6",
];

const EX3_TILES = [
  "B1", "B2", "B3", "B7", "B8", "B9",
  "C2", "C2", "C2",
  "D1", "D2", "D3", "D5", "D9",
];

function fakeAdvice(k: number, numerators: number[]): AdviseResponse {
  const entries = numerators.map((n, i) => ({
    tile: EX3_TILES[i],
    value_numerator: n,
    value_denominator: 12,
    value_decimal: n / 12,
  }));
  const best = numerators.indexOf(Math.max(...numerators));
  return {
    schema_version: 1,
    hand: EX3_TILES.join(""),
    k,
    entries,
    recommended_index: best,
  };
}

describe("hand editing", () => {
  it("derives availability from the hand", () => {
    const s = new Session();
    for (const t of EQ1_TILES) {
      expect(s.addTile(t)).toBe(true);
    }
    expect(s.availability("B2")).toBe(2);
    expect(s.availability("C1")).toBe(2);
    expect(s.availability("C9")).toBe(4);
    expect(s.canAdvise()).toBe(true);
  });

  it("rejects a fifth copy", () => {
    const s = new Session();
    for (let i = 0; i < 4; i += 1) {
      expect(s.addTile("B1")).toBe(true);
    }
    expect(s.addTile("B1")).toBe(false);
    expect(s.warning).toContain("four copies");
  });

  it("rejects a fifteenth tile and clears", () => {
    const s = new Session();
    EQ1_TILES.forEach((t) => s.addTile(t));
    expect(s.addTile("D9")).toBe(false);
    s.clearHand();
    expect(s.hand).toHaveLength(0);
    expect(s.canAdvise()).toBe(false);
  });

  it("keeps the hand sorted", () => {
    const s = new Session();
    s.addTile("D5");
    s.addTile("B2");
    s.addTile("C1");
    expect(s.hand).toEqual(["B2", "C1", "D5"]);
  });
});

describe("observation log", () => {
  it("decrements availability and undoes exactly", () => {
    const s = new Session();
    expect(s.availability("D5")).toBe(4);
    expect(s.recordSeen("D5")).toBe(true);
    expect(s.availability("D5")).toBe(3);
    const before = s.kbString();
    s.recordSeen("D7");
    expect(s.undo()).toBe(true);
    expect(s.kbString()).toBe(before);
  });

  it("warns on an impossible sighting", () => {
    const s = new Session();
    for (let i = 0; i < 4; i += 1) {
      s.recordSeen("D5");
    }
    expect(s.recordSeen("D5")).toBe(false);
    expect(s.warning).toContain("inconsistent");
    expect(s.availability("D5")).toBe(0);
  });

  it("counts hand tiles against sightings", () => {
    const s = new Session();
    s.addTile("B1");
    s.addTile("B1");
    s.recordSeen("B1");
    s.recordSeen("B1");
    expect(s.recordSeen("B1")).toBe(false);
    expect(s.addTile("B1")).toBe(false);
  });
});

describe("serialization", () => {
  it("round-trips the whole session", () => {
    const s = new Session();
    EX3_TILES.forEach((t) => s.addTile(t));
    s.recordSeen("D4");
    s.horizon = 2;
    s.lastAdvice = fakeAdvice(2, [0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0, 6, 7]);
    const restored = Session.restore(s.serialize());
    expect(restored.hand).toEqual(s.hand);
    expect(restored.observations).toEqual(s.observations);
    expect(restored.horizon).toBe(2);
    expect(restored.kbString()).toBe(s.kbString());
    expect(restored.lastAdvice).toEqual(s.lastAdvice);
  });
});

describe("advice requests", () => {
  it("sends the derived hand and kb, stores the result", async () => {
    const calls: Array<{ hand: string; kb: string; k: number }> = [];
    const stub: Client = {
      health: async () => ({ status: "ok", version: "x", horizon_cap: 3 }),
      analyze: async () => {
        throw new Error("unused");
      },
      advise: async (hand, kb, k) => {
        calls.push({ hand, kb, k });
        return fakeAdvice(k, [0, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0, 6, 7]);
      },
    };
    const s = new Session();
    EX3_TILES.forEach((t) => s.addTile(t));
    // mark discards until only D2, D4, D5 and D9 are believed available
    const target: Record<string, number> = { D2: 1, D4: 1, D5: 1, D9: 1 };
    for (const suit of ["B", "C", "D"]) {
      for (let n = 1; n <= 9; n += 1) {
        const token = `${suit}${n}`;
        const want = target[token] ?? 0;
        while (s.availability(token) > want) {
          expect(s.recordSeen(token)).toBe(true);
        }
      }
    }
    expect(s.kbString()).toBe("(000000000)(000000000)(010110001)");
    s.horizon = 2;
    const advice = await s.requestAdvice(stub);
    expect(calls).toHaveLength(1);
    expect(calls[0]).toEqual({
      hand: EX3_TILES.join(""),
      kb: "(000000000)(000000000)(010110001)",
      k: 2,
    });
    expect(advice.entries[advice.recommended_index].tile).toBe("D9");
    expect(fractionLabel(advice.entries[advice.recommended_index])).toBe("7/12");
    expect(adviceSummary(advice)).toBe("discard D9 (7/12)");
    expect(s.lastAdvice).toEqual(advice);
  });

  it("coalesces concurrent requests", async () => {
    let count = 0;
    const stub: Client = {
      health: async () => ({ status: "ok", version: "x", horizon_cap: 3 }),
      analyze: async () => {
        throw new Error("unused");
      },
      advise: async (hand, kb, k) => {
        count += 1;
        await new Promise((resolve) => setTimeout(resolve, 10));
        return fakeAdvice(k, Array(14).fill(0));
      },
    };
    const s = new Session();
    EX3_TILES.forEach((t) => s.addTile(t));
    const [a, b] = await Promise.all([s.requestAdvice(stub), s.requestAdvice(stub)]);
    expect(count).toBe(1);
    expect(a).toEqual(b);
    expect(s.lastAdvice && noCompletionWithinHorizon(s.lastAdvice)).toBe(true);
  });
});
