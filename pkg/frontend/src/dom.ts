/** Tiny DOM construction helpers shared by the workbench components. */

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

export function clear(node: HTMLElement): void {
  while (node.firstChild) node.removeChild(node.firstChild);
}

/** Transient notification in the corner; errors linger a bit longer. */
export function toast(message: string, kind: 'info' | 'error' = 'info'): void {
  const note = el('div', `toast toast-${kind}`, message);
  document.body.appendChild(note);
  setTimeout(() => note.remove(), kind === 'error' ? 6000 : 3500);
}
