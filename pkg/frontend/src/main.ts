import { ApiClient } from './api';
import { createWorkbench } from './workbench';

// Served under /ui by the service; API calls go to the same origin.
document.addEventListener('DOMContentLoaded', () => {
  const mount = document.getElementById('app');
  if (!mount) return;
  createWorkbench(mount, new ApiClient(''), window.localStorage);
});
