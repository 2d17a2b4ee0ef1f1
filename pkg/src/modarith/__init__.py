"""Modular arithmetic: orders, valuations and the coprime split."""
