import logging
import sys
import os

from app.config import settings

def setup_logger(name: str = settings.APP_NAME):
    logger = logging.getLogger(name)

    if not logger.handlers:
        logger.setLevel(logging.DEBUG if settings.DEBUG else logging.INFO)

        # Formatter
        formatter = logging.Formatter(
            "%(asctime)s | %(levelname)s | %(module)s:%(funcName)s | %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )

        # Console Handler (stderr: the CLI writes tables and JSON to stdout)
        ch = logging.StreamHandler(sys.stderr)
        ch.setFormatter(formatter)
        logger.addHandler(ch)

        # File Handler with Rotation
        if settings.LOG_TO_FILE:
            try:
                os.makedirs(settings.LOG_DIR, exist_ok=True)
                from logging.handlers import RotatingFileHandler
                # 10MB per file, max 5 files = 50MB cap
                fh = RotatingFileHandler(
                    os.path.join(settings.LOG_DIR, "alphadiv.log"),
                    maxBytes=10*1024*1024,
                    backupCount=5
                )
                fh.setFormatter(formatter)
                logger.addHandler(fh)
            except OSError as e:
                logger.warning(f"File logging disabled, could not open {settings.LOG_DIR}: {e}")

    return logger

logger = setup_logger()
get_logger = setup_logger
