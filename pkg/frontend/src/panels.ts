import { AxiomRow, NameRow, RecommendPayload, RecommendationRow } from './api';
import { el, clear } from './dom';

export type PanelKind = 'terms' | 'axioms' | 'odps' | 'names';

export const PANEL_KINDS: PanelKind[] = ['terms', 'axioms', 'odps', 'names'];

const PANEL_TITLES: Record<PanelKind, string> = {
  terms: 'Terms',
  axioms: 'Axioms',
  odps: 'Design patterns',
  names: 'Names',
};

export interface PanelCallbacks {
  /** Fired when the user runs a term search by hand. */
  onTermSearch: (query: string) => void;
  onAcceptFix: (name: string, suggestion: string) => void;
}

export interface PanelDeck {
  root: HTMLElement;
  activate(kind: PanelKind): void;
  setStale(flag: boolean): void;
  setBusy(kind: PanelKind): void;
  showError(kind: PanelKind, message: string): void;
  renderTerms(payload: RecommendPayload<RecommendationRow>, query: string): void;
  renderAxioms(payload: RecommendPayload<AxiomRow>): void;
  renderOdps(payload: RecommendPayload<RecommendationRow>): void;
  renderNames(payload: RecommendPayload<NameRow>): void;
  getQuery(): string;
  setQuery(query: string): void;
}

// Scores are printed verbatim, never rounded: every number on screen
// must equal a field of a service response.
function scoreBadge(score: number): HTMLElement {
  return el('span', 'row-score', String(score));
}

function rankedRow(rec: RecommendationRow): HTMLElement {
  const row = el('li', 'row');
  row.appendChild(el('span', 'row-item', rec.item));
  row.appendChild(scoreBadge(rec.score));
  row.appendChild(el('span', 'row-source', rec.source));
  if (rec.rationale) row.appendChild(el('span', 'row-rationale', rec.rationale));
  return row;
}

function axiomRow(rec: AxiomRow): HTMLElement {
  const row = rankedRow(rec);
  row.appendChild(el('span', 'row-detail', rec.source_axiom));
  return row;
}

function nameRow(finding: NameRow, onAccept: PanelCallbacks['onAcceptFix']): HTMLElement {
  const row = el('li', 'row name-row');
  row.appendChild(el('span', 'row-item', finding.name));
  row.appendChild(el('span', 'row-issues', finding.issues.join(', ')));
  const suggestion = finding.suggestions[0];
  if (suggestion) {
    row.appendChild(el('span', 'row-suggestion', `suggested: ${suggestion}`));
    const accept = el('button', 'accept-button', 'Accept');
    accept.addEventListener('click', () => onAccept(finding.name, suggestion));
    row.appendChild(accept);
  } else {
    row.appendChild(el('span', 'row-suggestion', 'no suggestion'));
  }
  return row;
}

/**
 * Right-hand deck of the four recommendation panels, one visible at a
 * time. Panels only ever re-render from a full service payload; the
 * stale badge tells the user the buffer has moved on since.
 */
export function createPanels(callbacks: PanelCallbacks): PanelDeck {
  const root = el('section', 'panel-deck');

  const tabBar = el('div', 'tab-bar');
  const staleBadge = el('span', 'stale-badge hidden', 'stale');
  const tabs = new Map<PanelKind, HTMLButtonElement>();
  const bodies = new Map<PanelKind, HTMLElement>();

  for (const kind of PANEL_KINDS) {
    const tab = el('button', 'tab', PANEL_TITLES[kind]);
    tab.dataset.kind = kind;
    tab.addEventListener('click', () => activate(kind));
    tabs.set(kind, tab);
    tabBar.appendChild(tab);
  }
  tabBar.appendChild(staleBadge);
  root.appendChild(tabBar);

  const queryBar = el('div', 'query-bar');
  const queryInput = el('input', 'term-query');
  queryInput.placeholder = 'Term to search for';
  const searchButton = el('button', 'search-button', 'Search');
  searchButton.addEventListener('click', () => callbacks.onTermSearch(queryInput.value));
  queryInput.addEventListener('keydown', event => {
    if (event.key === 'Enter') callbacks.onTermSearch(queryInput.value);
  });
  queryBar.appendChild(queryInput);
  queryBar.appendChild(searchButton);
  root.appendChild(queryBar);

  for (const kind of PANEL_KINDS) {
    const body = el('div', `panel panel-${kind} hidden`);
    bodies.set(kind, body);
    root.appendChild(body);
  }

  function activate(kind: PanelKind): void {
    for (const [other, tab] of tabs) {
      tab.classList.toggle('active', other === kind);
      bodies.get(other)!.classList.toggle('hidden', other !== kind);
    }
    queryBar.classList.toggle('hidden', kind !== 'terms');
  }

  function renderList(kind: PanelKind, rows: HTMLElement[], emptyNote: string): void {
    const body = bodies.get(kind)!;
    clear(body);
    if (rows.length === 0) {
      body.appendChild(el('p', 'empty-note', emptyNote));
      return;
    }
    const list = el('ul', 'row-list');
    for (const row of rows) list.appendChild(row);
    body.appendChild(list);
  }

  activate('terms');

  return {
    root,
    activate,
    setStale(flag: boolean) {
      staleBadge.classList.toggle('hidden', !flag);
      root.classList.toggle('stale', flag);
    },
    setBusy(kind: PanelKind) {
      const body = bodies.get(kind)!;
      clear(body);
      body.appendChild(el('p', 'busy-note', 'loading...'));
    },
    showError(kind: PanelKind, message: string) {
      const body = bodies.get(kind)!;
      clear(body);
      body.appendChild(el('p', 'error-text', message));
    },
    renderTerms(payload, query) {
      const heading = el('p', 'panel-heading', `Matches for "${query}"`);
      renderList('terms', payload.items.map(rankedRow), 'No matching terms in the corpus.');
      bodies.get('terms')!.prepend(heading);
    },
    renderAxioms(payload) {
      renderList('axioms', payload.items.map(axiomRow), 'No axiom suggestions.');
    },
    renderOdps(payload) {
      renderList('odps', payload.items.map(rankedRow), 'No matching design patterns.');
    },
    renderNames(payload) {
      renderList(
        'names',
        payload.items.map(finding => nameRow(finding, callbacks.onAcceptFix)),
        'All names follow the conventions.',
      );
    },
    getQuery: () => queryInput.value,
    setQuery(query: string) {
      queryInput.value = query;
    },
  };
}
