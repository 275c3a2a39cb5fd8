"""HTTP service around the core package, plus the handlers the CLI reuses."""
