// Request pacing for drag interactions: collapse bursts with a short
// debounce, and drop responses that arrive after a newer one.

export class Debouncer {
  private handle: ReturnType<typeof setTimeout> | undefined;

  constructor(readonly timeout = 60) {}

  run(op: () => void) {
    if (this.handle !== undefined) clearTimeout(this.handle);
    this.handle = setTimeout(() => {
      this.handle = undefined;
      op();
    }, this.timeout);
  }

  cancel() {
    if (this.handle !== undefined) clearTimeout(this.handle);
    this.handle = undefined;
  }
}

export class ResponseGate {
  private issued = 0;
  private applied = 0;

  next(): number {
    return ++this.issued;
  }

  // true when this response is newer than everything applied so far
  accept(seq: number): boolean {
    if (seq <= this.applied) return false;
    this.applied = seq;
    return true;
  }
}
