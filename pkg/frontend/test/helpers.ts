import { fileURLToPath } from "node:url";
import { dirname, join } from "node:path";
import type { SpawnSettings } from "../src/protocol.js";

/** Repo root, resolved from the compiled test location (dist/test/). */
export function repoRoot(): string {
  return join(dirname(fileURLToPath(import.meta.url)), "..", "..", "..");
}

/** Spawn settings that run the core from the repository checkout. */
export function coreSettings(): SpawnSettings {
  const root = repoRoot();
  return {
    command: ["python3", "-m", "indbench", "serve"],
    cwd: root,
    env: { PYTHONPATH: join(root, "src") },
  };
}

/** Deterministic Park-Miller stream; products stay exact in doubles. */
export class Lcg {
  private state: number;

  constructor(seed: number) {
    this.state = seed % 2147483647;
    if (this.state <= 0) {
      this.state += 2147483646;
    }
  }

  next(): number {
    this.state = (this.state * 48271) % 2147483647;
    return this.state / 2147483647;
  }

  /** One action: three components in [-1, 1]. */
  action(): [number, number, number] {
    return [2 * this.next() - 1, 2 * this.next() - 1, 2 * this.next() - 1];
  }
}
