/**
 * Query-string persistence. The whole form state travels in two keys,
 * `problem` and `strategy`, percent-encoded, so a URL is a complete
 * shareable configuration.
 */

export interface QueryState {
  problem: string;
  strategy: string;
}

export interface LoadedState {
  state: QueryState;
  warning: string | null;
}

const KEYS = ["problem", "strategy"] as const;

export function toQuery(state: QueryState): string {
  const parts: string[] = [];
  for (const key of KEYS) {
    const value = state[key];
    if (value) parts.push(`${key}=${encodeURIComponent(value)}`);
  }
  return parts.join("&");
}

/** Parse a location.search style string; unknown keys are ignored.
 * Malformed percent-encoding resets to empty defaults with a warning. */
export function loadFromQuery(query: string): LoadedState {
  const state: QueryState = { problem: "", strategy: "" };
  const q = query.startsWith("?") ? query.slice(1) : query;
  if (!q) return { state, warning: null };
  for (const pair of q.split("&")) {
    if (!pair) continue;
    const eq = pair.indexOf("=");
    const key = eq < 0 ? pair : pair.slice(0, eq);
    if (key !== "problem" && key !== "strategy") continue;
    const encoded = eq < 0 ? "" : pair.slice(eq + 1);
    try {
      state[key] = decodeURIComponent(encoded);
    } catch {
      return {
        state: { problem: "", strategy: "" },
        warning:
          "the link carries malformed percent-encoding; starting from an empty form",
      };
    }
  }
  return { state, warning: null };
}

/** Absolute link for the given state, based on origin + pathname. */
export function shareLink(state: QueryState, base: string): string {
  const q = toQuery(state);
  return q ? `${base}?${q}` : base;
}
