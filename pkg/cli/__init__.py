"""Command-line surface: element expressions and the `python -m cli` subcommands."""
