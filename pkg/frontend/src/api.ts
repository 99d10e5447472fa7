/** Thin client for the JSON proof endpoint. */

export interface ProveReply {
  status: number;
  result?: string;
  proof?: string;
  reason?: string;
  error?: string;
}

export async function requestProof(
  base: string,
  problem: string,
  strategy: string,
  timeout: number,
  fetchImpl: typeof fetch = fetch,
): Promise<ProveReply> {
  const res = await fetchImpl(`${base}/prove`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify({ problem, strategy, timeout }),
  });
  const body = (await res.json()) as Omit<ProveReply, "status">;
  return { status: res.status, ...body };
}

/** The proof panel text: the verdict line, a blank line, the proof body. */
export function renderReply(reply: ProveReply): string {
  if (reply.error !== undefined) return `error: ${reply.error}`;
  return `${reply.result}\n\n${reply.proof}`;
}
