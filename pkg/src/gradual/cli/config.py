import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Tuple

from ..ce import DEFAULT_TRUNCATION
from ..errors import InputError

COMMANDS = ("validate", "cohomology", "character", "hazewinkel", "divergence", "linfty", "conjecture")
FORMATS = ("json", "table")
BUILTIN_MODULES = ("trivial", "adjoint", "dual-adjoint")


@dataclass
class RunConfig:
    """Everything one CLI invocation needs.

    Args:
        command (str): one of COMMANDS
        inputs (List[str]): algebra or L∞ inputs, as paths or catalog names
        modules (List[str]): module paths or one of BUILTIN_MODULES. Defaults to [].
        truncation (Optional[int]): y-truncation for algebras with an odd part, order T for L∞ structures. Defaults to None.
        max_degree (Optional[int]): last degree reported. Defaults to None.
        degree_window (Optional[Tuple[int, int]]): inclusive L∞ degree range. Defaults to None.
        twist (str): "none", "divergence" or "file:PATH". Defaults to "none".
        side (str): twist side for L∞ tables. Defaults to "left".
        samples (int): bimonomials sampled for the Hodge checks, 0 to skip them. Defaults to 0.
        untwisted (bool): Hazewinkel without the supertrace twist. Defaults to False.
        format (str): "json" or "table". Defaults to "json".
        output (Optional[Path]): report destination, stdout when None. Defaults to None.
        verbose (bool): DEBUG logging. Defaults to False.
    """
    command: str
    inputs: List[str]
    modules: List[str] = field(default_factory=list)
    truncation: Optional[int] = None
    max_degree: Optional[int] = None
    degree_window: Optional[Tuple[int, int]] = None
    twist: str = "none"
    side: str = "left"
    samples: int = 0
    untwisted: bool = False
    format: str = "json"
    output: Optional[Path] = None
    verbose: bool = False

    def __post_init__(self) -> None:
        if self.command not in COMMANDS:
            raise InputError(f"Unknown command '{self.command}'. Available: {list(COMMANDS)}")
        if self.format not in FORMATS:
            raise InputError(f"Unknown format '{self.format}'. Available: {list(FORMATS)}")
        if len(self.inputs) != 1:
            raise InputError(f"'{self.command}' takes exactly one -i/--input, got {len(self.inputs)}")
        if not (self.twist in ("none", "divergence") or self.twist.startswith("file:")):
            raise InputError(f"--twist must be none, divergence or file:PATH, got '{self.twist}'")
        if self.truncation is not None and self.truncation < 1:
            raise InputError(f"--truncation must be positive, got {self.truncation}")
        if self.samples < 0:
            raise InputError(f"--samples must be non-negative, got {self.samples}")

    @property
    def input(self) -> str:
        return self.inputs[0]

    @property
    def y_truncation(self) -> int:
        return DEFAULT_TRUNCATION if self.truncation is None else self.truncation

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        window = None
        if args.degree_window is not None:
            lo, hi = args.degree_window
            if lo > hi:
                raise InputError(f"--degree-window {lo} {hi} is empty")
            window = (lo, hi)
        return cls(
            command=args.command,
            inputs=list(args.input or []),
            modules=list(args.module or []),
            truncation=args.truncation,
            max_degree=args.max_degree,
            degree_window=window,
            twist=args.twist,
            side=args.side,
            samples=args.samples,
            untwisted=args.untwisted,
            format=args.format,
            output=Path(args.output) if args.output else None,
            verbose=args.verbose,
        )
