import sys

from loguru import logger

LEVELS = ("WARNING", "INFO", "DEBUG")


def verbosity_level(verbose: int) -> str:
    """Maps the number of -v flags to a loguru level name."""
    return LEVELS[min(max(verbose, 0), len(LEVELS) - 1)]


def add_logger(
    name: str = "pyroi",
    channel=sys.stderr,
    level: str = "WARNING",
) -> None:
    """Routes pyroi's log messages to the given channel.

    Numeric results are written to standard output by the command line, so
    logs go to standard error unless a file path is given.

    Args:
        name (str): The name shown in front of each message.
        channel (str, optional): A stream or a file path. Defaults to sys.stderr.
        level (str, optional): The minimum level to log. Defaults to "WARNING".

    Example:
        Log run details of simulations and sweeps to standard error:

            >> add_logger(level=verbosity_level(2))

        Log warnings to a file:

            >> add_logger("sweep", "sweep.log")
    """
    format = (
        "  <cyan>%s</cyan>\t{module: >10}\t<level>{level}</level>: {message}" % name
    )

    if isinstance(channel, str):
        format = "{time:YYYY-MM-DD HH:mm:ss} %s {level}: {message}" % name

    logger.remove()
    logger.add(
        channel,
        colorize=not isinstance(channel, str),
        format=format,
        level=level,
    )
