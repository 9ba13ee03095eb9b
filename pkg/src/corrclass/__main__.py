"""Allow ``python -m corrclass`` to invoke the command-line interface."""

from .cli import run

run()
