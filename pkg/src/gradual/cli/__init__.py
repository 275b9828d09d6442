from .config import COMMANDS, FORMATS, BUILTIN_MODULES, RunConfig
from .commands import EXIT_OK, EXIT_INPUT, EXIT_MATH, EXIT_INTERNAL, Outcome, COMMAND_RUNNERS, load_input, resolve_input
from .render import render, to_json, to_table
from .main import build_parser, exit_code, run, main
