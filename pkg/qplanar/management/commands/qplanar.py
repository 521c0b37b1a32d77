"""
Makes ``qplanar`` management command available.
"""
import argparse
import io
import json
import logging

from django.core.management.base import BaseCommand, CommandError

from qplanar.certificates import certify_upper
from qplanar.cli import EXIT_ERROR, EXIT_FAIL, RunConfig, resolve_graph
from qplanar.enumeration import census, extremal_search
from qplanar.enumeration.search import GENERATED
from qplanar.exceptions import GraphPreconditionError, QPlanarException
from qplanar.graphs import build_H
from qplanar.reports import FORMATS, flat_row, format_text, write_avro, write_csv
from qplanar.rewiring import CONFIGS, swap_demo
from qplanar.spectral import bound_report, h_identities, q_max

logger = logging.getLogger(__name__)

# Tolerance of the bound sandwich behind the exit code of ``bound``.
SANDWICH_TOLERANCE = 1e-8

GRAPH_HELP = (
    "kN, pN, cN, hN, icosahedron, octahedron, fan:N, star:N, random:N[:extra], near_wheel:N, wheel:N, "
    "tower:N, two_hub:N:gap[:regime], mid_band:N:k[:regime] or the path of an edge-list file"
)

PARAMS = {
    "spectral": ("graph",),
    "bound": ("graph",),
    "certify": ("graph",),
    "swap-demo": ("config", "n", "k", "l"),
    "gen": ("n",),
    "search": ("n",),
    "verify-h": ("n_min", "n_max"),
}


class Command(BaseCommand):
    """
    Management command exposing the signless Laplacian toolkit.
    """

    help = """
    Compute and check the signless Laplacian spectral radius q(G) of planar graphs.

    The exit code is 0 on success, 2 on a FAIL outcome (a violated bound, a failed
    certificate or identity, a swap that does not raise q, a census mismatch or a
    search whose maximizer is not K2 join P(n-2)) and 1 on usage or input errors.

    Example::

        python manage.py qplanar spectral h20 --tol 1e-12
        python manage.py qplanar bound icosahedron --format text
        python manage.py qplanar certify two_hub:500:9
        python manage.py qplanar swap-demo near 20 10
        python manage.py qplanar gen 8 --format csv --jobs 4
        python manage.py qplanar search 9 --file plantri9.pc
        python manage.py qplanar verify-h 5 200
        python manage.py qplanar search 7 --format avro --output search7.avro
    """

    def add_arguments(self, parser):
        """
        Add one subparser per subcommand, each taking the common output options.
        """
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--tol", type=float, default=None, help="Power-iteration tolerance.")
        common.add_argument(
            "--format", dest="output_format", choices=FORMATS, default=None,
            help="Report format; text for verify-h and json otherwise by default.",
        )
        common.add_argument("--seed", type=int, default=0, help="Seed of the random:N graph names.")
        common.add_argument("--jobs", type=int, default=None, help="Worker processes; QPLANAR_JOBS by default.")
        common.add_argument("--output", default=None, help="Write the report to this file.")

        subparsers = parser.add_subparsers(dest="subcommand", required=True, title="subcommands")
        for name, description in (
            ("spectral", "Largest eigenpair of Q(G)."),
            ("bound", "q(G) against the closed-form bounds."),
            ("certify", "Prove q(G) <= n + 2 for a maximal planar graph."),
        ):
            subparser = subparsers.add_parser(name, parents=[common], help=description)
            subparser.add_argument("graph", help=GRAPH_HELP)

        swap = subparsers.add_parser("swap-demo", parents=[common], help="Swap one edge of a configuration.")
        swap.add_argument("config", choices=CONFIGS)
        swap.add_argument("n", type=int)
        swap.add_argument("k", type=int)
        swap.add_argument("l", type=int, nargs="?", default=None)

        gen = subparsers.add_parser("gen", parents=[common], help="Generate the triangulations on n vertices.")
        gen.add_argument("n", type=int)

        search = subparsers.add_parser("search", parents=[common], help="Triangulation maximizing q(G).")
        search.add_argument("n", type=int)
        search.add_argument("--file", default=None, help="planar_code file searched instead of the generator.")

        verify = subparsers.add_parser("verify-h", parents=[common], help="Identities of K2 join P(n-2).")
        verify.add_argument("n_min", type=int)
        verify.add_argument("n_max", type=int)

    def handle(self, *args, **options):
        """
        Run the subcommand, write its report and turn FAIL outcomes into exit code 2.
        """
        try:
            config = RunConfig.from_options(options, PARAMS[options["subcommand"]])
            handler = getattr(self, "handle_" + config.subcommand.replace("-", "_"))
            records, failed = handler(config)
            self.emit(config, records)
        except (QPlanarException, OSError) as exc:
            raise CommandError(str(exc), returncode=EXIT_ERROR) from exc
        except Exception as exc:  # pylint: disable=broad-except
            logger.exception("Error running qplanar %s", options["subcommand"])
            raise CommandError(f"unexpected error: {exc}", returncode=EXIT_ERROR) from exc
        if failed:
            raise CommandError(f"FAIL: {failed}", returncode=EXIT_FAIL)

    def handle_spectral(self, config):
        graph = resolve_graph(config.params["graph"], config.rng())
        return [q_max(graph, tol=config.tol)], None

    def handle_bound(self, config):
        report = bound_report(resolve_graph(config.params["graph"], config.rng()), tol=config.tol)
        return [report], None if report.holds(SANDWICH_TOLERANCE) else "q(G) violates a bound"

    def handle_certify(self, config):
        report = certify_upper(resolve_graph(config.params["graph"], config.rng()))
        failures = [attempt.lemma_tag for attempt in report.attempts if attempt.outcome == "fail"]
        return [report], ", ".join(f"certificate {tag} did not pass" for tag in failures) or None

    def handle_swap_demo(self, config):
        params = config.params
        report = swap_demo(params["config"], params["n"], params["k"], params["l"])
        return [report], None if report.passed else "the swap does not increase q"

    def handle_gen(self, config):
        result = census(config.params["n"], jobs=config.jobs)
        failed = None
        if not result.matches:
            failed = f"generated {result.count} classes, expected {result.expected}"
        return [result], failed

    def handle_search(self, config):
        result = extremal_search(config.params["n"], source=config.file or GENERATED, jobs=config.jobs)
        return [result], None if result.is_H else "the maximizer is not K2 join P(n-2)"

    def handle_verify_h(self, config):
        n_min, n_max = config.params["n_min"], config.params["n_max"]
        if n_min > n_max:
            raise GraphPreconditionError(operation="verify-h", message=f"empty range {n_min}..{n_max}")
        checks = [h_identities(n, result=q_max(build_H(n), tol=config.tol)) for n in range(n_min, n_max + 1)]
        failures = [str(check.n) for check in checks if not check.passed]
        return checks, f"identities fail for n = {', '.join(failures)}" if failures else None

    def render(self, config, records):
        """
        Report text for the json, csv and text formats.
        """
        data = [record.to_json_data() for record in records]
        if config.output_format == "json":
            return json.dumps(data if config.subcommand == "verify-h" else data[0], sort_keys=True, indent=2)
        if config.output_format == "csv":
            rows = records[0].rows() if hasattr(records[0], "rows") else [flat_row(item) for item in data]
            stream = io.StringIO()
            write_csv(rows, stream)
            return stream.getvalue().rstrip("\n")
        if config.subcommand == "verify-h":
            return "\n".join(
                f"{check.n} {check.q:.12g} q>n+2:{str(check.checks['above_n_plus_2']).lower()} "
                f"identities:{'pass' if check.passed else 'fail'}"
                for check in records
            )
        return format_text(data[0])

    def emit(self, config, records):
        """
        Write the report to ``--output`` or standard output.
        """
        if config.output_format == "avro":
            with open(config.output, "wb") as stream:
                write_avro(stream, records)
            logger.info("wrote %d records to %s", len(records), config.output)
            return
        text = self.render(config, records)
        if config.output:
            with open(config.output, "w", encoding="utf-8") as stream:
                stream.write(text + "\n")
            return
        self.stdout.write(text)
