/**
 * Line-delimited JSON client for the simulator's stdio service.
 *
 * One spawned core process serves one environment. Requests carry an id;
 * responses are matched by id, so the transport stays correct even though
 * the server answers strictly in order. Floats cross the pipe as shortest
 * round-trip decimal strings and parse back to identical IEEE-754 doubles,
 * which the parity tests rely on.
 */

import { spawn, type ChildProcessWithoutNullStreams } from "node:child_process";
import { createInterface, type Interface } from "node:readline";

export interface SpawnSettings {
  /** Command used to start the core service. */
  command?: string[];
  cwd?: string;
  env?: Record<string, string | undefined>;
}

const DEFAULT_COMMAND = ["python3", "-m", "indbench", "serve"];

/** Error reported by the core for a single request. */
export class RemoteError extends Error {
  readonly remoteType: string;

  constructor(remoteType: string, message: string) {
    super(`${remoteType}: ${message}`);
    this.name = "RemoteError";
    this.remoteType = remoteType;
  }
}

interface Pending {
  resolve: (value: unknown) => void;
  reject: (reason: Error) => void;
}

interface WireResponse {
  id: number;
  ok: boolean;
  result?: unknown;
  error?: { type: string; message: string };
}

export class ServiceClient {
  private readonly proc: ChildProcessWithoutNullStreams;
  private readonly lines: Interface;
  private readonly pending = new Map<number, Pending>();
  private nextId = 1;
  private stderrTail = "";
  private exited = false;

  constructor(settings: SpawnSettings = {}) {
    const command = settings.command ?? DEFAULT_COMMAND;
    this.proc = spawn(command[0], command.slice(1), {
      cwd: settings.cwd,
      env: { ...process.env, ...settings.env },
      stdio: ["pipe", "pipe", "pipe"],
    });
    this.proc.stderr.on("data", (chunk: Buffer) => {
      this.stderrTail = (this.stderrTail + chunk.toString()).slice(-2000);
    });
    this.lines = createInterface({ input: this.proc.stdout });
    this.lines.on("line", (line) => this.onLine(line));
    this.proc.on("exit", () => {
      this.exited = true;
      this.failAll(new Error(`core service exited${this.stderrTail ? `: ${this.stderrTail}` : ""}`));
    });
    this.proc.on("error", (err) => this.failAll(err));
  }

  /** Requests answered so far leave nothing queued (handle hygiene). */
  get pendingCount(): number {
    return this.pending.size;
  }

  request(op: string, payload: Record<string, unknown> = {}): Promise<unknown> {
    if (this.exited) {
      return Promise.reject(new Error("core service is not running"));
    }
    const id = this.nextId++;
    const line = JSON.stringify({ id, op, ...payload }) + "\n";
    return new Promise((resolve, reject) => {
      this.pending.set(id, { resolve, reject });
      this.proc.stdin.write(line, (err) => {
        if (err) {
          this.pending.delete(id);
          reject(err);
        }
      });
    });
  }

  /** Stop the child process; pending requests are rejected. */
  dispose(): void {
    this.failAll(new Error("client disposed"));
    this.lines.close();
    if (!this.exited) {
      this.proc.stdin.end();
      this.proc.kill();
    }
  }

  private onLine(line: string): void {
    let response: WireResponse;
    try {
      response = JSON.parse(line) as WireResponse;
    } catch {
      return; // not a protocol line; ignore
    }
    const waiter = this.pending.get(response.id);
    if (!waiter) {
      return;
    }
    this.pending.delete(response.id);
    if (response.ok) {
      waiter.resolve(response.result);
    } else {
      const err = response.error ?? { type: "Error", message: "unknown failure" };
      waiter.reject(new RemoteError(err.type, err.message));
    }
  }

  private failAll(reason: Error): void {
    for (const waiter of this.pending.values()) {
      waiter.reject(reason);
    }
    this.pending.clear();
  }
}
