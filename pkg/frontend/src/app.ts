import { renderReply, requestProof } from "./api.js";
import {
  assembleStrategy,
  emptyFields,
  parseStrategyFields,
  type Method,
  type StrategyFields,
} from "./strategy.js";
import { loadFromQuery, shareLink } from "./url.js";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const problemInput = el<HTMLTextAreaElement>("problem");
const methodSelect = el<HTMLSelectElement>("method");
const precInput = el<HTMLInputElement>("prec");
const w0Input = el<HTMLInputElement>("w0");
const weightsInput = el<HTMLInputElement>("weights");
const intersInput = el<HTMLInputElement>("inters");
const dimInput = el<HTMLInputElement>("dim");
const rawInput = el<HTMLInputElement>("raw");
const runButton = el<HTMLButtonElement>("run");
const shareButton = el<HTMLButtonElement>("share");
const linkOutput = el<HTMLInputElement>("link");
const resultPane = el<HTMLPreElement>("result");
const noticePane = el<HTMLDivElement>("notice");

function fieldsFromForm(): StrategyFields {
  return {
    method: methodSelect.value as Method,
    prec: precInput.value,
    w0: w0Input.value,
    weights: weightsInput.value,
    inters: intersInput.value,
    dim: dimInput.value,
    raw: rawInput.value,
  };
}

function fillForm(fields: StrategyFields): void {
  methodSelect.value = fields.method;
  precInput.value = fields.prec;
  w0Input.value = fields.w0;
  weightsInput.value = fields.weights;
  intersInput.value = fields.inters;
  dimInput.value = fields.dim;
  rawInput.value = fields.raw;
  updateVisibility();
}

function updateVisibility(): void {
  const method = methodSelect.value;
  for (const row of document.querySelectorAll<HTMLElement>("[data-for]")) {
    const applies = (row.dataset.for ?? "").split(" ").includes(method);
    row.style.display = applies ? "" : "none";
  }
}

function notify(text: string | null): void {
  noticePane.textContent = text ?? "";
  noticePane.style.display = text ? "" : "none";
}

async function onRun(): Promise<void> {
  const problem = problemInput.value;
  if (!problem.trim()) {
    notify("enter a rewrite system first; no request was sent");
    return;
  }
  notify(null);
  const strategy = assembleStrategy(fieldsFromForm());
  runButton.disabled = true; // one request in flight at a time
  resultPane.textContent = "running...";
  try {
    const reply = await requestProof("", problem, strategy, 10, fetch.bind(window));
    resultPane.textContent = renderReply(reply);
  } catch (err) {
    resultPane.textContent = `error: ${err instanceof Error ? err.message : String(err)}`;
  } finally {
    runButton.disabled = false;
  }
}

function onShare(): void {
  const state = {
    problem: problemInput.value,
    strategy: assembleStrategy(fieldsFromForm()),
  };
  const url = shareLink(state, window.location.origin + window.location.pathname);
  window.history.replaceState(null, "", url);
  linkOutput.value = url;
  linkOutput.style.display = "";
  linkOutput.select();
}

function init(): void {
  const { state, warning } = loadFromQuery(window.location.search);
  notify(warning);
  const fields = state.strategy ? parseStrategyFields(state.strategy) : emptyFields();
  fillForm(fields);
  problemInput.value = state.problem;

  methodSelect.addEventListener("change", updateVisibility);
  runButton.addEventListener("click", () => void onRun());
  shareButton.addEventListener("click", onShare);
}

init();
