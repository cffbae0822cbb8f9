/** Textual helpers over the editor buffer. No parsing, no scoring. */

// Characters legal inside a local name; anything else delimits one.
const NAME_CHAR = 'A-Za-z0-9_\\-';

function escapeRegExp(text: string): string {
  return text.replace(/[.*+?^${}()|[\]\\]/g, '\\$&');
}

/**
 * Replace every standalone occurrence of a local name in the buffer.
 *
 * Occurrences inside longer names stay untouched, so fixing "Human"
 * never rewrites "HumanKind". Returns the input unchanged when the
 * name no longer appears.
 */
export function substituteLocalName(text: string, from: string, to: string): string {
  if (!from) return text;
  const pattern = new RegExp(
    `(?<![${NAME_CHAR}])${escapeRegExp(from)}(?![${NAME_CHAR}])`,
    'g',
  );
  return text.replace(pattern, to);
}

const CLASS_DECL_RE = new RegExp(
  `([A-Za-z][${NAME_CHAR}]*)>?\\s+a\\s+(?:owl|rdfs):Class\\b`,
  'g',
);

/**
 * Pull the local names of declared classes out of raw Turtle text, in
 * order of first appearance. Used only to seed the term search box;
 * the service does all the real work.
 */
export function extractClassNames(text: string): string[] {
  const seen = new Set<string>();
  const names: string[] = [];
  for (const match of text.matchAll(CLASS_DECL_RE)) {
    const name = match[1];
    if (!seen.has(name)) {
      seen.add(name);
      names.push(name);
    }
  }
  return names;
}

/** Last path or fragment segment of an IRI, for compact display. */
export function localName(iri: string): string {
  const trimmed = iri.replace(/^<|>$/g, '');
  const cut = Math.max(trimmed.lastIndexOf('#'), trimmed.lastIndexOf('/'));
  return cut >= 0 ? trimmed.slice(cut + 1) : trimmed;
}
