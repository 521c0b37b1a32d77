"""
Stand-alone ``qplanar`` entry point and the helpers shared with the management command.

Outside a Django project the package defaults are used as settings, so
``qplanar bound icosahedron`` works without ``DJANGO_SETTINGS_MODULE``.
"""
import logging
import os
import random
import re
import sys
from pathlib import Path

import attr
import django
from django.conf import settings
from django.core.management import call_command
from django.core.management.base import CommandError

from qplanar.certificates import build_fixture
from qplanar.exceptions import ConfigurationError, GraphConstructionError
from qplanar.graphs import (
    build_H,
    complete,
    cycle,
    fan,
    icosahedron,
    octahedron,
    path,
    random_connected,
    read_edge_list,
    star,
)
from qplanar.reports import FORMATS

logger = logging.getLogger(__name__)

SUBCOMMANDS = ("spectral", "bound", "certify", "swap-demo", "gen", "search", "verify-h")
EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAIL = 2

SIZED_NAME = re.compile(r"^([kpch])(\d+)$")
SIZED_CONSTRUCTORS = {"k": complete, "p": path, "c": cycle, "h": build_H}
NAMED_GRAPHS = {"icosahedron": icosahedron, "octahedron": octahedron}
REGIMES = ("n-1", "n-2")


def _positive_or_none(instance, attribute, value):  # pylint: disable=unused-argument
    if value is not None and value <= 0:
        raise ConfigurationError(setting=f"--{attribute.name}", message=f"Expected a positive value, found: {value}")


def _needs_output_for_avro(instance, attribute, value):  # pylint: disable=unused-argument
    if instance.output_format == "avro" and not value:
        raise ConfigurationError(setting="--output", message="Avro output is binary and needs --output PATH")


@attr.s(frozen=True)
class RunConfig:
    """
    Parsed command line of one ``qplanar`` run.

    Attributes:
        subcommand (str): one of SUBCOMMANDS.
        params (dict): positional arguments of the subcommand, eg ``{"graph": "icosahedron"}``.
        tol (float): power-iteration tolerance, QPLANAR_TOLERANCE when None.
        output_format (str): ``json``, ``csv``, ``text`` or ``avro``.
        seed (int): seed of the ``random:`` graph names; equal seeds replay equal graphs.
        jobs (int): worker processes, QPLANAR_JOBS when None.
        file (str): planar_code file searched instead of the generated classes.
        output (str): file receiving the report instead of standard output.
    """

    subcommand = attr.ib(type=str, validator=attr.validators.in_(SUBCOMMANDS))
    params = attr.ib(type=dict, factory=dict)
    tol = attr.ib(type=float, default=None, validator=_positive_or_none)
    output_format = attr.ib(type=str, default="json", validator=attr.validators.in_(FORMATS))
    seed = attr.ib(type=int, default=0)
    jobs = attr.ib(type=int, default=None, validator=_positive_or_none)
    file = attr.ib(type=str, default=None)
    output = attr.ib(type=str, default=None, validator=_needs_output_for_avro)

    @classmethod
    def from_options(cls, options, param_names=()):
        """
        Build the config from the options dictionary of the management command.

        The format defaults to ``text`` for ``verify-h`` and ``json`` otherwise.
        """
        subcommand = options["subcommand"]
        output_format = options.get("output_format") or ("text" if subcommand == "verify-h" else "json")
        return cls(
            subcommand=subcommand,
            params={name: options.get(name) for name in param_names},
            tol=options.get("tol"),
            output_format=output_format,
            seed=options.get("seed") or 0,
            jobs=options.get("jobs"),
            file=options.get("file"),
            output=options.get("output"),
        )

    def rng(self):
        return random.Random(self.seed)


def _fixture(kind, fields):
    """
    Build a certificate fixture from ``kind:N[:value][:regime]`` fields.
    """
    sizes = [int(field) for field in fields if field not in REGIMES]
    regime = next((field for field in fields if field in REGIMES), None)
    if not sizes:
        raise GraphConstructionError(kind=kind, message="missing order N")
    n, *rest = sizes
    options = {"regime": regime} if regime else {}
    if kind == "two_hub":
        options["gap"] = rest[0] if rest else None
    elif kind == "mid_band":
        options["k"] = rest[0] if rest else None
    elif rest:
        raise GraphConstructionError(kind=kind, message=f"takes only N, got {':'.join(fields)}")
    return build_fixture(kind, n, **options)


def resolve_graph(name, rng=None):
    """
    Build the graph named on the command line.

    Accepted names: ``kN``, ``pN``, ``cN``, ``hN``, ``icosahedron``, ``octahedron``,
    ``fan:N``, ``star:N`` (N vertices), ``random:N[:extra]`` (seeded by ``rng``), the
    certificate fixtures ``near_wheel:N``, ``wheel:N``, ``tower:N``,
    ``two_hub:N:gap[:regime]`` and ``mid_band:N:k[:regime]``, or the path of an
    edge-list file.

    Raises:
        GraphConstructionError: If the name is unknown or its parameters are invalid.
    """
    if match := SIZED_NAME.match(name):
        return SIZED_CONSTRUCTORS[match.group(1)](int(match.group(2)))
    if name in NAMED_GRAPHS:
        return NAMED_GRAPHS[name]()
    kind, _, rest = name.partition(":")
    fields = rest.split(":") if rest else []
    try:
        if kind == "fan" and len(fields) == 1:
            return fan(int(fields[0]))
        if kind == "star" and len(fields) == 1:
            return star(int(fields[0]) - 1)
        if kind == "random" and len(fields) in (1, 2):
            extra = int(fields[1]) if len(fields) == 2 else None
            return random_connected(rng or random.Random(0), int(fields[0]), extra_edges=extra)
        if kind in ("near_wheel", "wheel", "tower", "two_hub", "mid_band") and fields:
            return _fixture(kind, fields)
    except ValueError as exc:
        raise GraphConstructionError(kind=kind, message=f"malformed parameters in {name!r}") from exc
    if Path(name).is_file():
        return read_edge_list(Path(name).read_text())
    raise GraphConstructionError(kind=name, message="neither a builtin graph name nor an edge-list file")


def configure():
    """
    Configure Django with the package defaults unless a settings module is given.
    """
    if not settings.configured and not os.environ.get("DJANGO_SETTINGS_MODULE"):
        settings.configure(INSTALLED_APPS=["qplanar"])
    django.setup()


def run(argv, stdout=None, stderr=None):
    """
    Run one ``qplanar`` command line.

    Arguments:
        argv (list of str): arguments after the program name, eg ``["search", "6"]``.
        stdout: stream receiving the report.
        stderr: stream receiving diagnostics.

    Returns:
        int: 0 on success, 2 on a FAIL outcome, 1 on usage, input or IO errors.
    """
    configure()
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        call_command("qplanar", *argv, stdout=stdout)
    except CommandError as exc:
        stderr.write(f"qplanar: {exc}\n")
        return exc.returncode
    except SystemExit as exc:
        return EXIT_OK if exc.code in (None, 0) else EXIT_ERROR
    return EXIT_OK


def main():
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
