// Error banner: service errors shown verbatim, cleared on null.

import type { ServiceError } from '../types';

export function renderBanner(
  container: HTMLElement,
  error: ServiceError | null,
): void {
  container.replaceChildren();
  if (!error) {
    container.classList.remove('active');
    return;
  }
  container.classList.add('active');
  const doc = container.ownerDocument;
  const code = doc.createElement('strong');
  code.setAttribute('data-field', 'error-code');
  code.textContent = error.error;
  const message = doc.createElement('span');
  message.setAttribute('data-field', 'error-message');
  message.textContent = ` ${error.message}`;
  container.append(code, message);
}
