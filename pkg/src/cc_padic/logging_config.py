"""Logging configuration for cc_padic."""

import logging
import sys
from datetime import datetime
from pathlib import Path


def setup_logging(
    log_dir: Path | None = None,
    verbose: bool = False,
    log_file: bool = True,
) -> logging.Logger:
    """Set up logging to a dated file and to the console.

    Reports go to stdout, so the console handler writes to stderr.

    Args:
        log_dir: Directory for log files. Defaults to ./logs.
        verbose: Show INFO messages on the console instead of WARNING and up.
        log_file: Write the detailed DEBUG log file.

    Returns:
        Configured logger instance
    """
    logger = logging.getLogger("cc_padic")

    # Avoid adding handlers multiple times
    if logger.handlers:
        return logger

    logger.setLevel(logging.DEBUG)
    logger.propagate = False

    if log_file:
        if log_dir is None:
            log_dir = Path.cwd() / "logs"

        log_dir.mkdir(parents=True, exist_ok=True)

        date_str = datetime.now().strftime("%Y-%m-%d")
        log_path = log_dir / f"cc_padic_{date_str}.log"

        # File handler - detailed logging
        file_handler = logging.FileHandler(log_path, encoding="utf-8")
        file_handler.setLevel(logging.DEBUG)
        file_format = logging.Formatter(
            "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )
        file_handler.setFormatter(file_format)
        logger.addHandler(file_handler)

    # Console handler
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(logging.INFO if verbose else logging.WARNING)
    console_format = logging.Formatter("%(levelname)s: %(message)s")
    console_handler.setFormatter(console_format)
    logger.addHandler(console_handler)

    logger.debug("=" * 60)
    logger.debug("cc_padic started")
    if log_file:
        logger.debug(f"Log file: {log_path}")
    logger.debug("=" * 60)

    return logger


def get_logger(name: str = "cc_padic") -> logging.Logger:
    """Get a logger instance.

    Args:
        name: Logger name (will be prefixed with cc_padic.)

    Returns:
        Logger instance
    """
    if name == "cc_padic":
        return logging.getLogger(name)
    return logging.getLogger(f"cc_padic.{name}")
