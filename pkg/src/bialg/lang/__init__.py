"""Bundled languages: stream arithmetic, the razor, value-passing CCS."""
