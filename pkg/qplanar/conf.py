"""
Accessors for the qplanar Django settings.

Every value is read lazily through ``django.conf.settings`` so tests can use
``override_settings``.
"""
import os

from django.conf import settings

DEFAULTS = {
    "QPLANAR_TOLERANCE": 1e-10,
    "QPLANAR_MAX_ITERATIONS": 100_000,
    "QPLANAR_HIGH_PRECISION_TOLERANCE": 1e-13,
    "QPLANAR_TIE_GAP": 1e-7,
    "QPLANAR_DENSE_LIMIT": 2000,
    "QPLANAR_JOBS": None,
}

# .. setting_name: QPLANAR_TOLERANCE
# .. setting_default: 1e-10
# .. setting_description: Residual tolerance ``||Qx - qx||_inf`` at which power iteration stops.


def get_tolerance():
    return getattr(settings, "QPLANAR_TOLERANCE", DEFAULTS["QPLANAR_TOLERANCE"])


# .. setting_name: QPLANAR_MAX_ITERATIONS
# .. setting_default: 100000
# .. setting_description: Maximum number of power iterations before NonConvergenceError is raised.


def get_max_iterations():
    return getattr(settings, "QPLANAR_MAX_ITERATIONS", DEFAULTS["QPLANAR_MAX_ITERATIONS"])


# .. setting_name: QPLANAR_HIGH_PRECISION_TOLERANCE
# .. setting_default: 1e-13
# .. setting_description: Tolerance used to re-evaluate the top candidates of an extremal search
#   when their spectral radii are closer than QPLANAR_TIE_GAP.


def get_high_precision_tolerance():
    return getattr(settings, "QPLANAR_HIGH_PRECISION_TOLERANCE", DEFAULTS["QPLANAR_HIGH_PRECISION_TOLERANCE"])


# .. setting_name: QPLANAR_TIE_GAP
# .. setting_default: 1e-7
# .. setting_description: Gap between the two largest spectral radii of a search below which the
#   search escalates to high precision before declaring the argmax.


def get_tie_gap():
    return getattr(settings, "QPLANAR_TIE_GAP", DEFAULTS["QPLANAR_TIE_GAP"])


# .. setting_name: QPLANAR_DENSE_LIMIT
# .. setting_default: 2000
# .. setting_description: Largest order for which Q(G) is stored as a dense matrix. Larger graphs
#   are multiplied matrix-free from adjacency lists.


def get_dense_limit():
    return getattr(settings, "QPLANAR_DENSE_LIMIT", DEFAULTS["QPLANAR_DENSE_LIMIT"])


# .. setting_name: QPLANAR_JOBS
# .. setting_default: None
# .. setting_description: Number of worker processes for generation and search. When unset, the
#   ``QPLANAR_JOBS`` environment variable is used, and 1 when that is unset too.


def get_jobs():
    """
    Get the configured number of worker processes.

    The Django setting wins over the ``QPLANAR_JOBS`` environment variable.
    """
    jobs = getattr(settings, "QPLANAR_JOBS", DEFAULTS["QPLANAR_JOBS"])
    if jobs is None:
        jobs = os.environ.get("QPLANAR_JOBS") or 1
    return int(jobs)
