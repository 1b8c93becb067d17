// Live-play session state: the player's 14-tile hand, the log of tiles
// seen leaving the game, and the derived availability counts.  The
// availability of a kind is four minus copies in hand minus copies seen,
// so undoing an observation restores the counts exactly.

import type { Client } from "./api";
import { ApiError } from "./api";
import type { AdviseResponse } from "./types";

export const SUITS = ["B", "C", "D"] as const;
export const KINDS: string[] = SUITS.flatMap((s) =>
  Array.from({ length: 9 }, (_, i) => `${s}${i + 1}`),
);

export const HAND_SIZE = 14;
export const MAX_COPIES = 4;

export interface SessionSnapshot {
  hand: string[];
  observations: string[];
  horizon: number;
  lastAdvice: AdviseResponse | null;
}

function countOf(tokens: string[], token: string): number {
  return tokens.filter((t) => t === token).length;
}

export class Session {
  hand: string[] = [];
  observations: string[] = [];
  horizon = 1;
  lastAdvice: AdviseResponse | null = null;
  warning: string | null = null;
  private inFlight: Promise<AdviseResponse> | null = null;

  availability(token: string): number {
    return MAX_COPIES - countOf(this.hand, token) - countOf(this.observations, token);
  }

  kbCounts(): number[] {
    return KINDS.map((k) => this.availability(k));
  }

  kbString(): string {
    const digits = this.kbCounts();
    const group = (s: number) => digits.slice(9 * s, 9 * s + 9).join("");
    return `(${group(0)})(${group(1)})(${group(2)})`;
  }

  handString(): string {
    return this.hand.join("");
  }

  canAdvise(): boolean {
    return this.hand.length === HAND_SIZE;
  }

  addTile(token: string): boolean {
    this.warning = null;
    if (!KINDS.includes(token)) {
      this.warning = `unknown tile ${token}`;
      return false;
    }
    if (this.hand.length >= HAND_SIZE) {
      this.warning = "the hand already holds 14 tiles";
      return false;
    }
    if (countOf(this.hand, token) >= MAX_COPIES) {
      this.warning = `only four copies of ${token} exist`;
      return false;
    }
    if (this.availability(token) <= 0) {
      this.warning = `inconsistent: all copies of ${token} are accounted for`;
      return false;
    }
    this.hand.push(token);
    this.hand.sort();
    this.lastAdvice = null;
    return true;
  }

  removeTile(token: string): boolean {
    const i = this.hand.indexOf(token);
    if (i < 0) {
      return false;
    }
    this.hand.splice(i, 1);
    this.lastAdvice = null;
    this.warning = null;
    return true;
  }

  clearHand(): void {
    this.hand = [];
    this.lastAdvice = null;
    this.warning = null;
  }

  recordSeen(token: string): boolean {
    this.warning = null;
    if (!KINDS.includes(token)) {
      this.warning = `unknown tile ${token}`;
      return false;
    }
    if (this.availability(token) <= 0) {
      this.warning =
        `inconsistent: no copies of ${token} should be left to see`;
      return false;
    }
    this.observations.push(token);
    return true;
  }

  undo(): boolean {
    this.warning = null;
    if (this.observations.length === 0) {
      return false;
    }
    this.observations.pop();
    return true;
  }

  requestAdvice(client: Client): Promise<AdviseResponse> {
    if (this.inFlight) {
      return this.inFlight; // one request at a time; callers share it
    }
    const promise = client
      .advise(this.handString(), this.kbString(), this.horizon)
      .then((advice) => {
        this.lastAdvice = advice;
        this.inFlight = null;
        return advice;
      })
      .catch((err: unknown) => {
        this.inFlight = null;
        this.warning = err instanceof ApiError ? err.message : String(err);
        throw err;
      });
    this.inFlight = promise;
    return promise;
  }

  serialize(): string {
    const snapshot: SessionSnapshot = {
      hand: this.hand,
      observations: this.observations,
      horizon: this.horizon,
      lastAdvice: this.lastAdvice,
    };
    return JSON.stringify(snapshot);
  }

  static restore(text: string): Session {
    const snapshot = JSON.parse(text) as SessionSnapshot;
    const session = new Session();
    session.hand = [...snapshot.hand].sort();
    session.observations = [...snapshot.observations];
    session.horizon = snapshot.horizon;
    session.lastAdvice = snapshot.lastAdvice;
    return session;
  }
}
