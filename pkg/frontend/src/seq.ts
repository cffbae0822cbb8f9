/**
 * Monotonic ticket counter used to discard superseded responses.
 *
 * Each panel keeps one gate: a refresh takes a ticket before the fetch
 * and renders only if its ticket is still the freshest when the
 * response lands. Older in-flight responses fall through silently.
 */
export class SequenceGate {
  private seq = 0;

  next(): number {
    this.seq += 1;
    return this.seq;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.seq;
  }
}
