import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    environment: "node",
    globalSetup: "tests/live-service.ts",
    hookTimeout: 60000,
    testTimeout: 60000,
  },
});
