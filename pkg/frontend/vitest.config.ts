import { defineConfig } from "vitest/config";

export default defineConfig({
  resolve: {
    // Source files import with .js extensions (browser-ready ESM output);
    // strip them so vitest resolves the .ts sources directly.
    alias: [{ find: /^(\.{1,2}\/.*)\.js$/, replacement: "$1" }],
  },
  test: {
    environment: "node",
    include: ["tests/**/*.test.ts"],
  },
});
