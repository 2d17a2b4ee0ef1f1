"""Explicit witness constructions and closed formulae."""
