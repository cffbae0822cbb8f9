import { PendingClass } from './api';
import { el } from './dom';
import { localName } from './rename';

export type QuestionnaireAnswers = { q1: string | null; q2: string | null; q3: string | null };

const CHOICES: Array<{ value: string | null; label: string }> = [
  { value: 'yes', label: 'Yes' },
  { value: 'no', label: 'No' },
  { value: null, label: 'Skip' },
];

/**
 * Modal dialog asking the three hierarchy questions for one class.
 * Question text comes straight from the service payload.
 */
export function openQuestionnaire(
  pending: PendingClass,
  onSubmit: (answers: QuestionnaireAnswers) => void,
): HTMLElement {
  const overlay = el('div', 'modal-overlay');
  const modal = el('div', 'modal');
  modal.appendChild(el('h3', undefined, `Questions about ${localName(pending.class)}`));

  const picks: Array<string | null> = [null, null, null];
  pending.questions.forEach((question, index) => {
    const group = el('div', 'question-group');
    group.appendChild(el('p', 'question-text', question));
    for (const choice of CHOICES) {
      const label = el('label', 'choice');
      const radio = el('input');
      radio.type = 'radio';
      radio.name = `q${index + 1}`;
      radio.value = choice.value ?? '';
      if (choice.value === null) radio.checked = true;
      radio.addEventListener('change', () => {
        picks[index] = choice.value;
      });
      label.appendChild(radio);
      label.appendChild(document.createTextNode(choice.label));
      group.appendChild(label);
    }
    modal.appendChild(group);
  });

  const actions = el('div', 'modal-actions');
  const cancel = el('button', 'cancel-button', 'Cancel');
  cancel.addEventListener('click', () => overlay.remove());
  const submit = el('button', 'submit-button', 'Save answers');
  submit.addEventListener('click', () => {
    overlay.remove();
    onSubmit({ q1: picks[0], q2: picks[1], q3: picks[2] });
  });
  actions.appendChild(cancel);
  actions.appendChild(submit);
  modal.appendChild(actions);

  overlay.appendChild(modal);
  document.body.appendChild(overlay);
  return overlay;
}
