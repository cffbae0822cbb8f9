import { AnswerEntry, ApiClient, Verdict } from './api';
import { el, clear, toast } from './dom';
import { createEditor, EditorPane } from './editor';
import { createPanels, PanelDeck, PanelKind } from './panels';
import { openQuestionnaire } from './questionnaire';
import { extractClassNames, localName, substituteLocalName } from './rename';
import { SequenceGate } from './seq';

const STORAGE_KEY = 'ontoseer.workbench.text';

const SAMPLE = `@prefix : <http://example.org/onto#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .

:Thing a owl:Class .
`;

export interface Workbench {
  root: HTMLElement;
  /** Settles once every in-flight service call has landed. */
  idle(): Promise<void>;
}

function errorMessage(err: unknown): string {
  return err instanceof Error ? err.message : String(err);
}

/**
 * Wire the whole workbench into a mount point: editor on the left,
 * the four recommendation panels plus the hierarchy box on the right.
 *
 * All state the panels show comes from service responses; the only
 * local edits are textual name substitutions in the buffer.
 */
export function createWorkbench(mount: HTMLElement, api: ApiClient, storage: Storage): Workbench {
  let session: string | null = null;
  let lastChecked: string | null = null;
  const gates: Record<PanelKind, SequenceGate> = {
    terms: new SequenceGate(),
    axioms: new SequenceGate(),
    odps: new SequenceGate(),
    names: new SequenceGate(),
  };
  const hierarchyGate = new SequenceGate();

  const pending = new Set<Promise<unknown>>();
  function track<T>(work: Promise<T>): Promise<T> {
    pending.add(work);
    work.finally(() => pending.delete(work));
    return work;
  }

  const editor: EditorPane = createEditor(storage.getItem(STORAGE_KEY) ?? SAMPLE, {
    onInput: () => {
      const text = editor.getText();
      storage.setItem(STORAGE_KEY, text);
      panels.setStale(lastChecked !== null && text !== lastChecked);
    },
    onCheck: () => {
      void track(checkOntology());
    },
  });

  const panels: PanelDeck = createPanels({
    onTermSearch: query => {
      if (!query.trim()) return;
      void track(refreshTerms(query.trim()));
    },
    onAcceptFix: acceptNameFix,
  });

  const hierarchyBox = el('section', 'hierarchy-box');
  hierarchyBox.appendChild(el('h3', undefined, 'Class hierarchy'));
  const pendingList = el('div', 'pending-list');
  const verdictList = el('ul', 'verdict-list');
  hierarchyBox.appendChild(pendingList);
  hierarchyBox.appendChild(verdictList);

  const rightColumn = el('div', 'right-column');
  rightColumn.appendChild(panels.root);
  rightColumn.appendChild(hierarchyBox);

  const root = el('div', 'workbench');
  root.appendChild(editor.root);
  root.appendChild(rightColumn);
  mount.appendChild(root);

  async function checkOntology(): Promise<void> {
    const text = editor.getText();
    editor.clearError();
    let result;
    try {
      result = await api.uploadOntology(text);
    } catch (err) {
      editor.showBanner(`Cannot reach the recommendation service: ${errorMessage(err)}`);
      return;
    }
    if (!result.ok) {
      // Parse failure: panels keep whatever they showed before.
      editor.showError(result.error, result.line, result.column);
      return;
    }
    session = result.session;
    lastChecked = text;
    storage.setItem(STORAGE_KEY, text);
    panels.setStale(false);

    const meta = editor.getMeta();
    if (meta.description || meta.domain || meta.cqs.length > 0) {
      try {
        await api.updateMeta(session, meta);
      } catch (err) {
        toast(errorMessage(err), 'error');
      }
    }

    let query = panels.getQuery().trim();
    if (!query) {
      query = extractClassNames(text)[0] ?? '';
      panels.setQuery(query);
    }
    await Promise.all([
      query ? refreshTerms(query) : Promise.resolve(),
      refreshAxioms(),
      refreshOdps(),
      refreshNames(),
      refreshHierarchy(),
    ]);
  }

  async function refreshTerms(query: string): Promise<void> {
    if (!session) return;
    const ticket = gates.terms.next();
    panels.setBusy('terms');
    try {
      const payload = await api.recommendTerms(session, query);
      if (!gates.terms.isCurrent(ticket)) return;
      panels.renderTerms(payload, query);
    } catch (err) {
      if (!gates.terms.isCurrent(ticket)) return;
      panels.showError('terms', errorMessage(err));
    }
  }

  async function refreshAxioms(): Promise<void> {
    if (!session) return;
    const ticket = gates.axioms.next();
    panels.setBusy('axioms');
    try {
      const payload = await api.recommendAxioms(session);
      if (!gates.axioms.isCurrent(ticket)) return;
      panels.renderAxioms(payload);
    } catch (err) {
      if (!gates.axioms.isCurrent(ticket)) return;
      panels.showError('axioms', errorMessage(err));
    }
  }

  async function refreshOdps(): Promise<void> {
    if (!session) return;
    const ticket = gates.odps.next();
    panels.setBusy('odps');
    try {
      const payload = await api.recommendOdps(session);
      if (!gates.odps.isCurrent(ticket)) return;
      panels.renderOdps(payload);
    } catch (err) {
      if (!gates.odps.isCurrent(ticket)) return;
      panels.showError('odps', errorMessage(err));
    }
  }

  async function refreshNames(): Promise<void> {
    if (!session) return;
    const ticket = gates.names.next();
    panels.setBusy('names');
    try {
      const payload = await api.checkNames(session);
      if (!gates.names.isCurrent(ticket)) return;
      panels.renderNames(payload);
    } catch (err) {
      if (!gates.names.isCurrent(ticket)) return;
      panels.showError('names', errorMessage(err));
    }
  }

  async function refreshHierarchy(): Promise<void> {
    if (!session) return;
    const ticket = hierarchyGate.next();
    try {
      const payload = await api.hierarchyQuestions(session);
      if (!hierarchyGate.isCurrent(ticket)) return;
      renderPending(payload.pending);
    } catch (err) {
      if (!hierarchyGate.isCurrent(ticket)) return;
      toast(errorMessage(err), 'error');
    }
  }

  function renderPending(entries: Array<{ class: string; questions: string[] }>): void {
    clear(pendingList);
    if (entries.length === 0) {
      pendingList.appendChild(el('p', 'empty-note', 'No classes waiting for answers.'));
      return;
    }
    for (const entry of entries) {
      const button = el('button', 'pending-class', `Answer questions about ${localName(entry.class)}`);
      button.dataset.class = entry.class;
      button.addEventListener('click', () => {
        openQuestionnaire(entry, answers => {
          void track(submitAnswers(entry.class, answers));
        });
      });
      pendingList.appendChild(button);
    }
  }

  async function submitAnswers(
    cls: string,
    answers: { q1: string | null; q2: string | null; q3: string | null },
  ): Promise<void> {
    if (!session) return;
    const entry: AnswerEntry = { class: cls, ...answers };
    try {
      const payload = await api.postAnswers(session, [entry]);
      renderVerdicts(payload.verdicts);
    } catch (err) {
      // Leave pending list and verdicts untouched on a rejected post.
      toast(errorMessage(err), 'error');
      return;
    }
    await refreshHierarchy();
  }

  function renderVerdicts(verdicts: Verdict[]): void {
    clear(verdictList);
    for (const verdict of verdicts) {
      const row = el('li', 'verdict-row');
      if (verdict.status === 'Violated') row.classList.add('violated');
      if (verdict.status === 'Indeterminate') row.classList.add('dimmed');
      row.appendChild(el('span', 'verdict-edge',
        `${localName(verdict.subclass)} subClassOf ${localName(verdict.superclass)}`));
      row.appendChild(el('span', 'verdict-rule', verdict.rule));
      row.appendChild(el('span', 'verdict-status', verdict.status));
      row.title = verdict.explanation;
      verdictList.appendChild(row);
    }
  }

  function acceptNameFix(name: string, suggestion: string): void {
    const edited = substituteLocalName(editor.getText(), name, suggestion);
    editor.setText(edited);
    storage.setItem(STORAGE_KEY, edited);
    // The buffer changed, so everything on the right is stale until
    // the next check.
    panels.setStale(true);
    toast(`Renamed ${name} to ${suggestion} in the buffer.`);
  }

  async function idle(): Promise<void> {
    while (pending.size > 0) {
      await Promise.allSettled([...pending]);
    }
  }

  return { root, idle };
}
