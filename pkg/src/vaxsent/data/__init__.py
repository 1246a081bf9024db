"""Bundled lookup tables: substitutions, weights, cues, stopwords, lexicon."""
