import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    include: ["test/**/*.test.ts"],
    environment: "node",
    // the equivalence suite boots the real service in a child process
    testTimeout: 30000,
    hookTimeout: 30000,
  },
});
