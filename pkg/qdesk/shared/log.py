import logging

ROOT_LOGGER_NAME = "qdesk"
LOG_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(message)s"


def get_logger(name: str) -> logging.Logger:
    """
    Named child of the qdesk root logger.
    :param name: Component name, e.g. "simulator" or "lde.runner"
    :return: Logger for the component
    """
    return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")


def configure(verbose: bool = False) -> None:
    """
    Installs a single stream handler on the root qdesk logger, replacing the one a previous call installed.
    Only the CLI calls this.
    :param verbose: DEBUG level when True, INFO otherwise
    :return: None
    """
    root = logging.getLogger(ROOT_LOGGER_NAME)
    for handler in list(root.handlers):
        if getattr(handler, "_qdesk_cli", False):
            root.removeHandler(handler)
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    handler._qdesk_cli = True
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if verbose else logging.INFO)
