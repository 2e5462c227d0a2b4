import datetime
import logging

from entrench.core._private.cli_logger import cli_logger

logger = logging.getLogger(__name__)


class LogTimer:
    """Times a block; reports to stderr through cli_logger in record style.

    The elapsed milliseconds are kept on ``elapsed_ms`` for callers that
    put timings into their own reports.
    """

    def __init__(self, message, show_status=False):
        self._message = message
        self._show_status = show_status
        self.elapsed_ms = None

    def __enter__(self):
        self._start_time = datetime.datetime.utcnow()
        return self

    def __exit__(self, *error_vals):
        td = datetime.datetime.utcnow() - self._start_time
        self.elapsed_ms = td.total_seconds() * 1000
        logger.debug("%s took %.0fms", self._message, self.elapsed_ms)
        if cli_logger.log_style != "record":
            return

        status = ""
        if self._show_status:
            status = "failed" if any(error_vals) else "succeeded"
        cli_logger.verbose(" ".join([
            self._message, status,
            "[LogTimer={:.0f}ms]".format(self.elapsed_ms)
        ]))
