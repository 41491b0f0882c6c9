import io
import logging

import pytest

from utils.logger import LoggingTimer, resolve_level, set_level, setup_logger


@pytest.mark.parametrize("level, expected", [
    ("debug", logging.DEBUG),
    ("WARNING", logging.WARNING),
    (logging.ERROR, logging.ERROR),
    ("loud", logging.INFO),
])
def test_resolve_level(level, expected):
    assert resolve_level(level) == expected


def test_console_handler_and_quiet(tmp_path):
    stream = io.StringIO()
    logger = setup_logger("tests.logger.console", log_file="", level="INFO", stream=stream)
    assert len(logger.handlers) == 1
    assert setup_logger("tests.logger.console", log_file="", stream=stream) is logger
    assert len(logger.handlers) == 1

    logger.info("görünür")
    set_level(logger, logging.WARNING)
    logger.info("gizli")
    text = stream.getvalue()
    assert "görünür" in text and "gizli" not in text


def test_file_handler(tmp_path):
    path = tmp_path / "logs" / "run.log"
    logger = setup_logger("tests.logger.file", log_file=str(path), level="DEBUG", stream=io.StringIO())
    logger.debug("dosyaya")
    for handler in logger.handlers:
        handler.flush()
    assert "dosyaya" in path.read_text(encoding="utf-8")


def test_timer_logs_failures():
    stream = io.StringIO()
    logger = setup_logger("tests.logger.timer", log_file="", level="DEBUG", stream=stream)
    with LoggingTimer(logger, "adım", level=logging.INFO) as timer:
        pass
    assert timer.duration >= 0
    assert "adım tamamlandı" in stream.getvalue()

    with pytest.raises(KeyError):
        with LoggingTimer(logger, "bozuk"):
            raise KeyError("x")
    assert "bozuk hata ile sonlandı" in stream.getvalue()
