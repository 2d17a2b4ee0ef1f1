"""Exact minimal solver for multiples with a prescribed digit sum."""
