import { el, clear } from './dom';

export interface EditorCallbacks {
  onInput: () => void;
  onCheck: () => void;
}

export interface EditorPane {
  root: HTMLElement;
  getText(): string;
  setText(text: string): void;
  /** Inline banner for parse failures; position is optional. */
  showError(message: string, line?: number, column?: number): void;
  showBanner(message: string): void;
  clearError(): void;
  getMeta(): { description: string; domain: string; cqs: string[] };
}

/**
 * Left-hand pane: the Turtle buffer, project metadata fields and the
 * Check button that pushes the buffer to the service.
 */
export function createEditor(initialText: string, callbacks: EditorCallbacks): EditorPane {
  const root = el('section', 'editor-pane');

  const header = el('div', 'editor-header');
  header.appendChild(el('h2', undefined, 'Working ontology'));
  const checkButton = el('button', 'check-button', 'Check ontology');
  checkButton.addEventListener('click', () => callbacks.onCheck());
  header.appendChild(checkButton);
  root.appendChild(header);

  const errorBox = el('div', 'editor-error hidden');
  root.appendChild(errorBox);

  const textarea = el('textarea', 'editor-text');
  textarea.spellcheck = false;
  textarea.value = initialText;
  textarea.addEventListener('input', () => callbacks.onInput());
  root.appendChild(textarea);

  const metaBox = el('div', 'meta-box');
  metaBox.appendChild(el('h3', undefined, 'Project details'));
  const description = el('input', 'meta-description');
  description.placeholder = 'Short description of the ontology';
  const domain = el('input', 'meta-domain');
  domain.placeholder = 'Domain, e.g. education';
  const cqs = el('textarea', 'meta-cqs');
  cqs.placeholder = 'Competency questions, one per line';
  cqs.rows = 3;
  metaBox.appendChild(description);
  metaBox.appendChild(domain);
  metaBox.appendChild(cqs);
  root.appendChild(metaBox);

  return {
    root,
    getText: () => textarea.value,
    setText(text: string) {
      textarea.value = text;
    },
    showError(message: string, line?: number, column?: number) {
      clear(errorBox);
      const where = line !== undefined ? `line ${line}, column ${column ?? '?'}: ` : '';
      errorBox.appendChild(el('span', 'error-text', `${where}${message}`));
      errorBox.classList.remove('hidden');
    },
    showBanner(message: string) {
      clear(errorBox);
      errorBox.appendChild(el('span', 'banner-text', message));
      errorBox.classList.remove('hidden');
    },
    clearError() {
      clear(errorBox);
      errorBox.classList.add('hidden');
    },
    getMeta() {
      const lines = cqs.value.split('\n').map(q => q.trim()).filter(q => q.length > 0);
      return { description: description.value, domain: domain.value, cqs: lines };
    },
  };
}
