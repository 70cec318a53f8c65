/** Browser entry point: connect to the workbench service and mount. */

import { ApiClient, fetchTransport } from './api.js';
import { mountWorkbench, WorkbenchController } from './app.js';

const params = new URLSearchParams(window.location.search);
const origin = params.get('service') ?? 'http://127.0.0.1:8722';
const catalogueId = params.get('catalogue');

const controller = new WorkbenchController(new ApiClient(fetchTransport(origin)));
const root = document.getElementById('workbench');
if (root === null) {
  throw new Error('missing #workbench mount element');
}
mountWorkbench(root, controller);

for (const button of document.querySelectorAll<HTMLButtonElement>('nav [data-view]')) {
  button.addEventListener('click', () => {
    controller.show(button.dataset['view'] as never);
  });
}

if (catalogueId !== null) {
  void controller.openCatalogue(catalogueId);
}
