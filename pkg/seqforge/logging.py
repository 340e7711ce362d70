import logging
import click

LEVEL_STYLES = {
    logging.DEBUG: dict(fg='blue'),
    logging.WARNING: dict(fg='yellow'),
    logging.ERROR: dict(fg='red'),
    logging.CRITICAL: dict(fg='red', bold=True),
}


class ClickHandler(logging.Handler):
    """ Writes records through click so colours are stripped when stderr is
        not a terminal
    """

    def emit(self, record):
        try:
            click.echo(self.format(record), err=True)
        except Exception:
            self.handleError(record)


class ColourFormatter(logging.Formatter):
    """ Plain INFO text; other levels are prefixed and coloured. Debug lines
        carry the seconds elapsed since start-up.
    """

    def format(self, record):
        if record.exc_info:
            return logging.Formatter.format(self, record)

        msg = record.getMessage()
        style = LEVEL_STYLES.get(record.levelno)
        if style is None:
            return msg
        if record.levelno == logging.DEBUG:
            msg = '[{:.1f}s] {}'.format(record.relativeCreated / 1000, msg)
        return click.style('{}: {}'.format(record.levelname.title(), msg), **style)


def configure_logger(log_level):
    """ Route the package's records to a single click handler at log_level """
    logger = logging.getLogger('seqforge')
    logger.setLevel(logging.DEBUG)

    # A second invocation in the same process (CliRunner) must not double up
    del logger.handlers[:]

    handler = ClickHandler()
    handler.setFormatter(ColourFormatter())
    handler.setLevel(log_level.upper())

    logger.addHandler(handler)
    return logger
