import logging
from typing import Any, Dict, Optional

import click

from app.controllers.conic_controller import ConicController, EXIT_INPUT_ERROR
from app.controllers.corpus_controller import CorpusController
from app.core.config import settings

logger = logging.getLogger(__name__)


def _respond(ctx: click.Context, result: Dict[str, Any]) -> None:
    code = result["exit_code"]
    click.echo(result["body"], err=code == EXIT_INPUT_ERROR)
    ctx.exit(code)


@click.group(help=settings.APP_DESCRIPTION)
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_TITLE)
def cli() -> None:
    pass


job_file = click.argument("path", type=click.Path(dir_okay=False))


@cli.command(help="Full report: smoothness, gamma, F_P, regularity conditions and H.")
@job_file
@click.option("--json", "as_json", is_flag=True, help="Emit the JSON report instead of text.")
@click.pass_context
def analyze(ctx: click.Context, path: str, as_json: bool) -> None:
    _respond(ctx, ConicController.analyze(path, as_json))


@cli.command(help="Is A smooth over B?")
@job_file
@click.pass_context
def smooth(ctx: click.Context, path: str) -> None:
    _respond(ctx, ConicController.smooth(path))


@cli.command(help="Is A a regular ring?")
@job_file
@click.pass_context
def regular(ctx: click.Context, path: str) -> None:
    _respond(ctx, ConicController.regular(path))


@cli.command("singular-locus", help="Generators of H with V(H) the singular locus.")
@job_file
@click.option("--json", "as_json", is_flag=True)
@click.pass_context
def singular_locus(ctx: click.Context, path: str, as_json: bool) -> None:
    _respond(ctx, ConicController.singular_locus(path, as_json))


@cli.command(help="Cross-check the verdicts against finite-field point search.")
@job_file
@click.option("--degree-bound", "degree_bound", type=click.IntRange(min=1), default=None,
              help="Search points over extensions of degree up to M.")
@click.pass_context
def oracle(ctx: click.Context, path: str, degree_bound: Optional[int]) -> None:
    _respond(ctx, ConicController.oracle(path, degree_bound))


@cli.command(help="Run a corpus case (or 'all') and print a pass/fail table.")
@click.argument("case_id")
@click.option("--prime", type=int, default=None, help="Prime for the example14 case.")
@click.option("--parallel", is_flag=True, help="Dispatch cases as Celery tasks.")
@click.pass_context
def reproduce(ctx: click.Context, case_id: str, prime: Optional[int], parallel: bool) -> None:
    _respond(ctx, CorpusController.reproduce(case_id, prime, parallel))


@cli.command(help="Verify that (p+1)X^p + p^2·Y^p - 1 is regular but not smooth over Z.")
@click.option("--prime", "prime", type=int, required=True)
@click.pass_context
def example14(ctx: click.Context, prime: int) -> None:
    _respond(ctx, CorpusController.example14(prime))
