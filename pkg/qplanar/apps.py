"""
qplanar Django application initialization.
"""
import logging

from django.apps import AppConfig
from django.conf import settings

from qplanar.conf import DEFAULTS
from qplanar.exceptions import ConfigurationError

logger = logging.getLogger(__name__)

POSITIVE_FLOAT_SETTINGS = ("QPLANAR_TOLERANCE", "QPLANAR_HIGH_PRECISION_TOLERANCE", "QPLANAR_TIE_GAP")
POSITIVE_INT_SETTINGS = ("QPLANAR_MAX_ITERATIONS", "QPLANAR_DENSE_LIMIT")


def validate_settings():
    """
    Validate the ``QPLANAR_*`` settings.

    Raises:
        ConfigurationError: If any setting has the wrong type or is not positive.
    """
    for name in POSITIVE_FLOAT_SETTINGS:
        value = getattr(settings, name, DEFAULTS[name])
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigurationError(setting=name, message=f"Expected a number, found: {type(value)}")
        if value <= 0:
            raise ConfigurationError(setting=name, message=f"Expected a positive value, found: {value}")
    for name in POSITIVE_INT_SETTINGS:
        value = getattr(settings, name, DEFAULTS[name])
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigurationError(setting=name, message=f"Expected an int, found: {type(value)}")
        if value <= 0:
            raise ConfigurationError(setting=name, message=f"Expected a positive value, found: {value}")
    jobs = getattr(settings, "QPLANAR_JOBS", DEFAULTS["QPLANAR_JOBS"])
    if jobs is not None and (isinstance(jobs, bool) or not isinstance(jobs, int) or jobs < 1):
        raise ConfigurationError(setting="QPLANAR_JOBS", message=f"Expected None or an int >= 1, found: {jobs!r}")


class QPlanarConfig(AppConfig):
    """
    Configuration for the qplanar Django application.
    """

    name = "qplanar"

    def ready(self):
        """
        Validate the qplanar settings once the app registry is ready.

        Raises:
            ConfigurationError: If a ``QPLANAR_*`` setting is not valid.
        """
        validate_settings()
        logger.debug("qplanar settings validated")
        return super().ready()
