import sys
from datetime import datetime
from pathlib import Path
from typing import Optional

from loguru import logger

from core.config import settings


class LoggerConfig:
    """
    Configures the loguru sinks for a command run.

    Logs always go to stderr so that stdout carries only command results. When
    file logging is enabled a dated, rotated log file is added as well.

    Attributes:
        level (str): Minimum level written to the sinks.
        log_dir (Path): The directory where log files are saved.
        log_filename (str): Log file name, '<project>-<YYYY-MM-DD>.log'.
        log_path (Optional[str]): Full path of the log file, or None when file
            logging is disabled.
    """

    def __init__(
        self,
        log_dir: str = settings.LOG_DIR,
        level: str = settings.LOG_LEVEL,
        to_file: bool = settings.LOG_TO_FILE,
    ) -> None:
        """
        Initializes the LoggerConfig and installs the sinks.

        Args:
            log_dir (str): Directory where logs are saved (default: settings.LOG_DIR).
            level (str): Minimum log level (default: settings.LOG_LEVEL).
            to_file (bool): Whether to add the rotated file sink.
        """
        self.level: str = level.upper()
        self.log_filename: str = self._create_log_filename()
        self.log_dir: Path = Path(log_dir)
        self.log_path: Optional[str] = self._create_log_path() if to_file else None
        self._setup_logger()

    def _create_log_filename(self) -> str:
        """
        Creates the log file name based on the project name and the current date.

        Returns:
            str: The name of the log file in the format: '<project>-<YYYY-MM-DD>.log'
        """
        return f"{settings.PROJECT_NAME}-{datetime.now().strftime('%Y-%m-%d')}.log"

    def _create_log_path(self) -> str:
        """
        Creates the full path for the log file, creating the directory if needed.

        Returns:
            str: The full path of the log file.

        Raises:
            PermissionError: If the directory creation is not permitted.
            OSError: If an error occurs while creating the log directory.
        """
        try:
            self.log_dir.mkdir(parents=True, exist_ok=True)
        except PermissionError as e:
            logger.error(
                f"Permission denied when trying to create directory: {self.log_dir}"
            )
            raise e
        except OSError as e:
            logger.error(
                f"Failed to create log directory: {self.log_dir}. Error: {str(e)}"
            )
            raise e

        return str(self.log_dir / self.log_filename)

    def _setup_logger(self) -> None:
        """
        Replaces the default loguru sink with a stderr sink at the configured
        level and, if requested, a file sink rotated at settings.LOG_ROTATION.

        Raises:
            Exception: If the logger setup fails.
        """
        try:
            logger.remove()
            logger.add(sys.stderr, level=self.level)
            if self.log_path is not None:
                logger.add(
                    self.log_path,
                    level=self.level,
                    rotation=settings.LOG_ROTATION,
                    colorize=False,
                    encoding="utf8",
                )
        except Exception as e:
            logger.error(
                f"Failed to set up logger with path {self.log_path}. Error: {str(e)}"
            )
            raise e
