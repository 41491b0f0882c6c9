"""
Loglama yardımcıları: logger kurulumu, seviye ayarı ve süre ölçümü
"""
import logging
import os
import sys
import time
from logging.handlers import RotatingFileHandler
from typing import Optional, TextIO, Union

from config.settings import LOG_LEVEL, LOG_FILE

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

Level = Union[int, str]


def resolve_level(level: Level) -> int:
    """'debug', 'INFO' veya logging sabitini sayısal seviyeye çevir; bilinmeyen ad INFO olur"""
    if isinstance(level, int):
        return level
    value = logging.getLevelName(level.upper())
    return value if isinstance(value, int) else logging.INFO


def setup_logger(name: str, log_file: Optional[str] = LOG_FILE, level: Level = LOG_LEVEL,
                 stream: Optional[TextIO] = None) -> logging.Logger:
    """
    Konsol ve (isteğe bağlı) dönen dosya handler'lı bir logger kur

    Konsol çıktısı stderr'e gider; stdout sertifika ve rapor belgelerine ayrılmıştır.
    Aynı ad için tekrar çağrıldığında handler eklenmez, yalnızca seviye güncellenir.

    Args:
        name: Logger adı
        log_file: Log dosyası yolu; boş veya None ise dosyaya yazılmaz
        level: Log seviyesi (ad veya logging sabiti)
        stream: Konsol akışı (varsayılan sys.stderr)

    Returns:
        logging.Logger: Yapılandırılmış logger
    """
    logger = logging.getLogger(name)
    logger.setLevel(resolve_level(level))
    if logger.handlers:
        return logger

    formatter = logging.Formatter(LOG_FORMAT)

    console_handler = logging.StreamHandler(stream or sys.stderr)
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)

    if log_file:
        log_dir = os.path.dirname(log_file)
        if log_dir:
            os.makedirs(log_dir, exist_ok=True)
        file_handler = RotatingFileHandler(log_file, maxBytes=10 * 1024 * 1024, backupCount=5, encoding='utf-8')
        file_handler.setFormatter(formatter)
        logger.addHandler(file_handler)

    # Kök logger'a ikinci kez yazılmasın
    logger.propagate = False
    return logger


def set_level(logger: logging.Logger, level: Level) -> None:
    """Logger'ın ve tüm handler'larının seviyesini değiştir (ör. --quiet)"""
    value = resolve_level(level)
    logger.setLevel(value)
    for handler in logger.handlers:
        handler.setLevel(value)


class LoggingTimer:
    """Bir bloğun süresini ölçüp loglayan context manager"""

    def __init__(self, logger: logging.Logger, operation_name: str = "İşlem", level: int = logging.DEBUG):
        """
        LoggingTimer sınıfını başlat

        Args:
            logger: Logger nesnesi
            operation_name: Loglarda gösterilecek işlem adı
            level: Başarılı bitişin log seviyesi; hata her zaman ERROR ile loglanır
        """
        self.logger = logger
        self.operation_name = operation_name
        self.level = level
        self.start_time = 0.0
        self.duration = 0.0

    def __enter__(self) -> "LoggingTimer":
        self.start_time = time.perf_counter()
        self.logger.debug(f"{self.operation_name} başladı")
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> bool:
        self.duration = time.perf_counter() - self.start_time
        if exc_type:
            self.logger.error(f"{self.operation_name} hata ile sonlandı: {exc_val}, süre {self.duration:.2f} sn")
        else:
            self.logger.log(self.level, f"{self.operation_name} tamamlandı, süre {self.duration:.2f} sn")
        return False
