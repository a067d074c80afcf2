"""
Console logging for collineate.

Colour-coded, step oriented output for long symbolic runs:
- step counters for the solve / assemble / verify pipeline
- verbose-only debug lines with linear system sizes
- verdict lines for symmetry and residual checks
"""

import logging
import re
import sys
from datetime import datetime
from pathlib import Path
from typing import List, Optional, Sequence, TextIO


class Colors:
    """ANSI color codes for terminal output."""

    RESET = "\033[0m"
    BOLD = "\033[1m"
    DIM = "\033[2m"

    RED = "\033[31m"
    GREEN = "\033[32m"
    YELLOW = "\033[33m"
    BLUE = "\033[34m"
    CYAN = "\033[36m"
    WHITE = "\033[37m"
    GRAY = "\033[90m"


class Icons:
    """Unicode icons for log messages."""

    SUCCESS = "✓"
    ERROR = "✗"
    WARNING = "⚠"
    INFO = "ℹ"
    ARROW = "→"
    BULLET = "•"
    APPROX = "≈"


_ANSI = re.compile(r"\033\[[0-9;]*m")


class Logger:
    """
    Logger with coloured, structured output.

    Example:
        logger = Logger(verbose=True)
        logger.step(1, 3, "Solving conformal Killing equations")
        logger.debug("linear system: 42 rows x 60 unknowns")
        logger.verdict("X1 = d/dphi", passed=True)
    """

    def __init__(
        self,
        verbose: bool = False,
        no_color: bool = False,
        log_file: Optional[Path] = None,
        stream: Optional[TextIO] = None,
    ):
        """
        Initialize the logger.

        Args:
            verbose: Enable verbose output (shows debug messages).
            no_color: Disable colored output.
            log_file: Optional file path to append plain-text logs to.
            stream: Output stream (defaults to stderr).
        """
        self.verbose = verbose
        self.stream = stream if stream is not None else sys.stderr
        self.no_color = no_color or not self._supports_color()
        self.log_file = log_file

    def _supports_color(self) -> bool:
        """Check if the stream is an interactive terminal."""
        isatty = getattr(self.stream, "isatty", None)
        return bool(isatty and isatty())

    def _colorize(self, text: str, color: str) -> str:
        if self.no_color:
            return text
        return f"{color}{text}{Colors.RESET}"

    def _write(self, message: str) -> None:
        print(message, file=self.stream, flush=True)

        if self.log_file:
            try:
                timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
                with open(self.log_file, "a") as f:
                    f.write(f"[{timestamp}] {_ANSI.sub('', message)}\n")
            except OSError as e:
                logging.getLogger(__name__).debug(f"Failed to write to log file: {e}")

    def step(self, current: int, total: int, message: str) -> None:
        """
        Log a step of a multi-step pipeline.

        Args:
            current: Current step number.
            total: Total number of steps.
            message: Step description.
        """
        indicator = self._colorize(f"[{current}/{total}]", Colors.CYAN + Colors.BOLD)
        self._write(f"{indicator} {self._colorize(message + '...', Colors.WHITE)}")

    def substep(self, message: str) -> None:
        """Log an indented substep (verbose only)."""
        if not self.verbose:
            return
        arrow = self._colorize(Icons.ARROW, Colors.GRAY)
        self._write(f"      {arrow} {self._colorize(message, Colors.GRAY)}")

    def debug(self, message: str) -> None:
        """Log a debug message (verbose only)."""
        if not self.verbose:
            return
        prefix = self._colorize("[DEBUG]", Colors.GRAY)
        self._write(f"      {prefix} {self._colorize(message, Colors.GRAY)}")

    def info(self, message: str) -> None:
        icon = self._colorize(Icons.INFO, Colors.BLUE)
        self._write(f"{icon} {message}")

    def success(self, message: str) -> None:
        icon = self._colorize(Icons.SUCCESS, Colors.GREEN + Colors.BOLD)
        self._write(f"{icon} {self._colorize(message, Colors.GREEN)}")

    def warning(self, message: str) -> None:
        icon = self._colorize(Icons.WARNING, Colors.YELLOW + Colors.BOLD)
        self._write(f"{icon} {self._colorize(message, Colors.YELLOW)}")

    def error(self, message: str, details: str = "") -> None:
        """
        Log an error message.

        Args:
            message: Error message.
            details: Optional multi-line details, printed dimmed below.
        """
        icon = self._colorize(Icons.ERROR, Colors.RED + Colors.BOLD)
        self._write(f"{icon} {self._colorize(message, Colors.RED)}")
        for line in details.strip().splitlines() if details else []:
            self._write(self._colorize(f"  {line}", Colors.DIM + Colors.RED))

    def verdict(self, label: str, passed: bool, probabilistic: bool = False) -> None:
        """
        Log the outcome of a symmetry or residual check.

        Args:
            label: What was checked.
            passed: Verdict.
            probabilistic: Whether the verdict relied on random sampling.
        """
        if passed:
            icon = Icons.APPROX if probabilistic else Icons.SUCCESS
            line = self._colorize(f"{icon} {label}", Colors.GREEN)
        else:
            line = self._colorize(f"{Icons.ERROR} {label}", Colors.RED)
        self._write(f"  {line}")

    def blank(self) -> None:
        self._write("")

    def header(self, title: str) -> None:
        line = "─" * 50
        self._write("")
        self._write(self._colorize(line, Colors.CYAN))
        self._write(self._colorize(f"  {title}", Colors.CYAN + Colors.BOLD))
        self._write(self._colorize(line, Colors.CYAN))
        self._write("")

    def section(self, title: str) -> None:
        self._write("")
        self._write(self._colorize(f"▸ {title}", Colors.BOLD))

    def key_value(self, key: str, value: str, indent: int = 2) -> None:
        k = self._colorize(f"{key}:", Colors.GRAY)
        self._write(f"{' ' * indent}{k} {value}")

    def list_item(self, item: str, indent: int = 2) -> None:
        bullet = self._colorize(Icons.BULLET, Colors.CYAN)
        self._write(f"{' ' * indent}{bullet} {item}")

    def table(self, headers: Sequence[str], rows: List[Sequence[object]]) -> None:
        """
        Print a formatted table.

        Args:
            headers: Column headers.
            rows: Rows of cell values.
        """
        if not rows:
            return

        all_rows = [list(headers)] + [list(r) for r in rows]
        widths = [
            max(len(str(row[col])) for row in all_rows) + 2 for col in range(len(headers))
        ]

        self._write(
            "".join(self._colorize(str(h).ljust(w), Colors.BOLD) for h, w in zip(headers, widths))
        )
        self._write(self._colorize("─" * sum(widths), Colors.GRAY))
        for row in rows:
            self._write("".join(str(c).ljust(w) for c, w in zip(row, widths)))
