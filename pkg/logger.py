import logging
import sys

LOG_FORMAT = '[%(asctime)s] {%(filename)s:%(lineno)d} %(levelname)s - %(message)s'


def init_logging(level: int | str = logging.INFO, log_file: str | None = None):
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    # reports are printed on stdout
    stream_handler = logging.StreamHandler(stream=sys.stderr)
    handlers = [stream_handler]
    if log_file is not None:
        handlers.append(logging.FileHandler(filename=log_file))

    logging.basicConfig(
        level=level,
        format=LOG_FORMAT,
        handlers=handlers,
        force=True
    )
