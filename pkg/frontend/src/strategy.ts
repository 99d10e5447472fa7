/**
 * Strategy strings, assembled from dedicated form fields so nobody has
 * to remember the flags. A non-empty raw string overrides the fields.
 * Assembly must produce exactly what the command line accepts.
 */

export const METHODS = ["lpo", "kbo", "poly", "matrix"] as const;
export type Method = (typeof METHODS)[number];

export interface StrategyFields {
  method: Method;
  prec: string;
  w0: string;
  weights: string;
  inters: string;
  dim: string;
  raw: string;
}

export function emptyFields(): StrategyFields {
  return { method: "lpo", prec: "", w0: "", weights: "", inters: "", dim: "", raw: "" };
}

type ValueField = "prec" | "w0" | "weights" | "inters" | "dim";

// flag, backing field, whether the value is quoted when assembled
const FLAGS: Record<Method, Array<[string, ValueField, boolean]>> = {
  lpo: [["-prec", "prec", true]],
  kbo: [
    ["-prec", "prec", true],
    ["-w0", "w0", false],
    ["-weights", "weights", true],
  ],
  poly: [["-inters", "inters", true]],
  matrix: [
    ["-inters", "inters", true],
    ["-dim", "dim", false],
  ],
};

const FLAG_TO_FIELD: Record<string, ValueField> = {
  "-prec": "prec",
  "-w0": "w0",
  "-weights": "weights",
  "-inters": "inters",
  "-dim": "dim",
};

export function assembleStrategy(fields: StrategyFields): string {
  const raw = fields.raw.trim();
  if (raw) return raw;
  const parts: string[] = [fields.method];
  for (const [flag, field, quoted] of FLAGS[fields.method]) {
    const value = fields[field].trim();
    if (!value) continue;
    parts.push(flag, quoted ? `"${value}"` : value);
  }
  return parts.join(" ");
}

function tokenize(text: string): string[] | null {
  const tokens: string[] = [];
  let i = 0;
  while (i < text.length) {
    if (text[i] === " " || text[i] === "\t") {
      i++;
      continue;
    }
    let tok = "";
    while (i < text.length && text[i] !== " " && text[i] !== "\t") {
      const c = text[i];
      if (c === '"' || c === "'") {
        const close = text.indexOf(c, i + 1);
        if (close < 0) return null; // unbalanced quote
        tok += text.slice(i + 1, close);
        i = close + 1;
      } else {
        tok += c;
        i++;
      }
    }
    tokens.push(tok);
  }
  return tokens;
}

function isMethod(name: string | undefined): name is Method {
  return (METHODS as readonly string[]).includes(name ?? "");
}

/**
 * Split a strategy string back into dedicated fields when it only uses
 * flags the form has inputs for. Anything else (extra flags, unbalanced
 * quotes) is kept verbatim in `raw` so no information is dropped; the
 * method selector is still set when the first word names a method.
 */
export function parseStrategyFields(text: string): StrategyFields {
  const fields = emptyFields();
  const trimmed = text.trim();
  if (!trimmed) return fields;

  const tokens = tokenize(trimmed);
  if (tokens && isMethod(tokens[0])) fields.method = tokens[0];
  const rawFallback: StrategyFields = { ...emptyFields(), method: fields.method, raw: trimmed };
  if (!tokens || !isMethod(tokens[0])) return rawFallback;

  const allowed = new Set(FLAGS[fields.method].map(([flag]) => flag));
  for (let i = 1; i < tokens.length; i += 2) {
    const flag = tokens[i];
    const value = tokens[i + 1];
    const field = FLAG_TO_FIELD[flag];
    if (field === undefined || !allowed.has(flag) || value === undefined) {
      return rawFallback;
    }
    fields[field] = value;
  }
  return fields;
}
