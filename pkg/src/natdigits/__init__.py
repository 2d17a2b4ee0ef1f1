"""Natural numbers and base-q digit encoding."""
