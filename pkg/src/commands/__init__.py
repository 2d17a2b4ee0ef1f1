"""Command-line commands, result cache and output formats."""
