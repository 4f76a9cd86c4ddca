import logging

from app.core.config import settings
from app.routes.cli import cli

logging.basicConfig(
    level=logging.DEBUG if settings.DEBUG else settings.LOG_LEVEL,
    format=settings.LOG_FORMAT,
)
logger = logging.getLogger(__name__)


def main() -> None:
    logger.debug("Starting CLI", extra={"version": settings.APP_VERSION})
    cli(prog_name="conic-regularity")


if __name__ == "__main__":
    main()
