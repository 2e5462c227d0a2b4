"""User facing output of the entrench command line.

Messages are either rendered "pretty" (colour, for a terminal) or as
"record" lines through a logging.Formatter (timestamp and caller, for logs
and pipes). Library code logs through the standard ``logging`` module
instead; this module is for commands only.
"""
from functools import wraps
import inspect
import logging
import os
import sys
from typing import Any, Callable, Dict, Optional

import click
import colorama
from colorama import Fore, Style

from entrench.core._private.errors import EntrenchError

logger = logging.getLogger(__name__)

colorama.init(strip=False)

# message role -> colorama prefix
_STYLES = {
    "label": Fore.CYAN,
    "value": Style.BRIGHT,
    "success": Fore.GREEN,
    "warning": Fore.YELLOW,
    "error": Fore.RED,
}

# record level names that go to stderr, keeping stdout for command output
_STDERR_LEVELS = ("VINFO", "WARN", "ERR", "PANIC")


def _caller_info() -> Dict[str, Any]:
    """File and line of the first frame outside this module."""
    caller = inspect.currentframe()
    while caller.f_code.co_filename == __file__:
        caller = caller.f_back
    return {
        "lineno": caller.f_lineno,
        "filename": os.path.basename(caller.f_code.co_filename)
    }


def _isatty(stream) -> bool:
    try:
        return stream.isatty()
    except Exception:
        return False


class _CliLogger:
    """Process wide CLI output settings. Defaults to 'record' style.

    Attributes:
        pretty (bool): Whether messages are rendered for a terminal.
    """
    VALID_LOG_STYLES = ("auto", "record", "pretty")
    VALID_COLOR_MODES = ("auto", "false", "true")

    def __init__(self):
        self.pretty = False
        self._verbosity = 0
        self._verbosity_overriden = False
        self._color_mode = "auto"
        self._log_style = "record"
        self.set_format()

    def set_format(self, format_tmpl=None):
        if not format_tmpl:
            from entrench.core._private.constants import LOGGER_FORMAT
            format_tmpl = LOGGER_FORMAT
        self._formatter = logging.Formatter(format_tmpl)

    def configure(self, log_style=None, color_mode=None, verbosity=None):
        if log_style is not None:
            self._log_style = log_style.lower()
            if self._log_style not in self.VALID_LOG_STYLES:
                raise ValueError("Invalid log style: " + log_style)
            if self._log_style == "auto":
                self.pretty = _isatty(sys.__stdin__)
            else:
                self.pretty = self._log_style == "pretty"
        if color_mode is not None:
            self._color_mode = color_mode.lower()
            if self._color_mode not in self.VALID_COLOR_MODES:
                raise ValueError("Invalid log color setting: " + color_mode)
        if verbosity is not None:
            self._verbosity = verbosity
            self._verbosity_overriden = True

    @property
    def log_style(self) -> str:
        return self._log_style

    @property
    def use_color(self) -> bool:
        if not self.pretty or self._color_mode == "false":
            return False
        if self._color_mode == "true":
            return True
        return _isatty(sys.stdout)

    @property
    def verbosity(self) -> int:
        # record output is for logs, keep everything
        if self._verbosity_overriden:
            return self._verbosity
        elif not self.pretty:
            return 999
        return self._verbosity

    def _style(self, role: str, text: str) -> str:
        if not self.use_color:
            return text
        return _STYLES[role] + text + Style.RESET_ALL

    def _emit(self, msg: str, level: str = "INFO"):
        if self.pretty:
            rendered = msg
        else:
            if not msg.strip():
                return
            caller = _caller_info()
            record = logging.LogRecord(
                name="cli",
                level=0,
                pathname=caller["filename"],
                lineno=caller["lineno"],
                msg=msg,
                args={},
                exc_info=None)
            record.levelname = level
            rendered = self._formatter.format(record)
        stream = sys.stderr if level in _STDERR_LEVELS else sys.stdout
        print(rendered, file=stream)

    def print(self, msg: str, *args: Any, _level: str = "INFO",
              _role: Optional[str] = None):
        """Print ``msg.format(*args)``; without args ``msg`` is verbatim."""
        text = msg.format(*args) if args else msg
        if _role is not None:
            text = self._style(_role, text)
        self._emit(text, _level)

    def labeled_value(self, key: str, msg: str, *args: Any):
        value = msg.format(*args) if args else msg
        self._emit(self._style("label", key) + ": " +
                   self._style("value", value))

    def verbose(self, msg: str, *args: Any):
        """Diagnostics on stderr, shown when verbosity is above zero."""
        if self.verbosity > 0:
            self.print(msg, *args, _level="VINFO")

    def success(self, msg: str, *args: Any):
        self.print(msg, *args, _level="SUCC", _role="success")

    def warning(self, msg: str, *args: Any):
        self.print(msg, *args, _level="WARN", _role="warning")

    def error(self, msg: str, *args: Any):
        self.print(msg, *args, _level="ERR", _role="error")

    def abort(self, msg: Optional[str] = None, *args: Any):
        """Print an error and stop the command with a non-zero exit code."""
        if msg is None:
            msg = "Exiting due to cli_logger.abort()"
        else:
            self.print(msg, *args, _level="PANIC", _role="error")
            msg = msg.format(*args) if args else msg
        # the message is already on stderr when pretty
        exc_cls = SilentClickException if self.pretty else click.ClickException
        raise exc_cls(msg)


class SilentClickException(click.ClickException):
    """ClickException whose message was already printed by cli_logger."""

    def show(self, file=None):
        pass


cli_logger = _CliLogger()

CLICK_LOGGING_OPTIONS = [
    click.option(
        "--log-style",
        required=False,
        type=click.Choice(cli_logger.VALID_LOG_STYLES, case_sensitive=False),
        default="auto",
        help=("If 'pretty', outputs with formatting and color. If 'record', "
              "outputs record-style without formatting. "
              "'auto' picks 'pretty' when stdin is a TTY.")),
    click.option(
        "--log-color",
        required=False,
        type=click.Choice(cli_logger.VALID_COLOR_MODES, case_sensitive=False),
        default="auto",
        help="Use color logging. Auto enables it when stdout is a TTY."),
    click.option("-v", "--verbose", default=None, count=True)
]


def add_click_logging_options(f: Callable) -> Callable:
    for option in reversed(CLICK_LOGGING_OPTIONS):
        f = option(f)

    @wraps(f)
    def wrapper(*args, log_style=None, log_color=None, verbose=None, **kwargs):
        cli_logger.configure(log_style, log_color, verbose)
        return f(*args, **kwargs)

    return wrapper


def handle_entrench_errors(f: Callable) -> Callable:
    """Report library errors through cli_logger and exit non-zero."""

    @wraps(f)
    def wrapper(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except EntrenchError as e:
            logger.debug("Command failed", exc_info=True)
            cli_logger.error("{}", str(e))
            cli_logger.abort("Command failed.")

    return wrapper
