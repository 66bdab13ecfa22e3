"""Bialgebraic semantics: one rule, a compositional and an operational interpreter."""
