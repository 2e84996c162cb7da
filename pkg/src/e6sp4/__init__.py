"""Exact root-system toolkit for the E6(-14) to Sp(4) weight reduction."""
