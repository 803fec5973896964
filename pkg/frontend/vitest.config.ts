import { defineConfig } from 'vitest/config';

export default defineConfig({
  envPrefix: ['VITE_', 'CPMAX_'],
  test: {
    environment: 'happy-dom',
    include: ['test/**/*.test.ts'],
  },
});
