import { describe, expect, it } from "vitest";

import { loadFromQuery, shareLink, toQuery, type QueryState } from "../src/url.js";

// deterministic RNG for the round-trip property
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a = (a + 0x6d2b79f5) >>> 0;
    let t = a;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const ALPHABET = "abz019 +=&%?#()[];,>_\"'\\\n\täß→∀";

function randomText(rng: () => number): string {
  const n = Math.floor(rng() * 24);
  let out = "";
  for (let i = 0; i < n; i++) {
    out += ALPHABET[Math.floor(rng() * ALPHABET.length)];
  }
  return out;
}

describe("toQuery / loadFromQuery", () => {
  it("keeps the documented percent-encoding style", () => {
    expect(encodeURIComponent("(VAR x y)")).toBe("(VAR%20x%20y)");
    const q = toQuery({ problem: "(VAR x y)", strategy: "kbo" });
    expect(q).toBe("problem=(VAR%20x%20y)&strategy=kbo");
  });

  it("parses with or without the leading question mark", () => {
    const bare = loadFromQuery("problem=a&strategy=lpo");
    const marked = loadFromQuery("?problem=a&strategy=lpo");
    expect(bare).toEqual(marked);
    expect(bare.state).toEqual({ problem: "a", strategy: "lpo" });
    expect(bare.warning).toBeNull();
  });

  it("empty query gives the default empty form", () => {
    expect(loadFromQuery("")).toEqual({
      state: { problem: "", strategy: "" },
      warning: null,
    });
    expect(loadFromQuery("?")).toEqual({
      state: { problem: "", strategy: "" },
      warning: null,
    });
  });

  it("ignores unknown keys", () => {
    const { state, warning } = loadFromQuery("?x=1&problem=p&utm_source=mail");
    expect(state).toEqual({ problem: "p", strategy: "" });
    expect(warning).toBeNull();
  });

  it("partial queries fill only what they carry", () => {
    expect(loadFromQuery("?strategy=kbo").state).toEqual({
      problem: "",
      strategy: "kbo",
    });
  });

  it("malformed percent-encoding resets to defaults with a warning", () => {
    const { state, warning } = loadFromQuery("?problem=%E0%A4%A&strategy=kbo");
    expect(state).toEqual({ problem: "", strategy: "" });
    expect(warning).toMatch(/percent-encoding/);
  });

  it("omits empty fields instead of writing empty pairs", () => {
    expect(toQuery({ problem: "", strategy: "lpo" })).toBe("strategy=lpo");
    expect(toQuery({ problem: "", strategy: "" })).toBe("");
  });

  it("round-trips random states", () => {
    const rng = mulberry32(0xbeef);
    for (let i = 0; i < 200; i++) {
      const state: QueryState = {
        problem: randomText(rng),
        strategy: randomText(rng),
      };
      const back = loadFromQuery(`?${toQuery(state)}`);
      expect(back.warning).toBeNull();
      expect(back.state).toEqual(state);
    }
  });
});

describe("shareLink", () => {
  it("appends the query to the base URL", () => {
    const url = shareLink(
      { problem: "(VAR x)(RULES f(x) -> x)", strategy: "lpo" },
      "http://localhost:8080/",
    );
    expect(url).toBe(
      "http://localhost:8080/?problem=(VAR%20x)(RULES%20f(x)%20-%3E%20x)&strategy=lpo",
    );
  });

  it("leaves the base alone for an empty state", () => {
    expect(shareLink({ problem: "", strategy: "" }, "http://h/p")).toBe("http://h/p");
  });

  it("round-trips through loadFromQuery", () => {
    const state: QueryState = {
      problem: "(VAR x y)\n(RULES\n  +(0,y) -> y\n)",
      strategy: 'kbo -prec "+ > s > 0"',
    };
    const url = shareLink(state, "http://localhost/");
    const query = url.slice(url.indexOf("?"));
    expect(loadFromQuery(query).state).toEqual(state);
  });
});
