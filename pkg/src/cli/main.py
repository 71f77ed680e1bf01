__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from pathlib import Path
from typing import List, Optional
import argparse
import logging
import sys

from hydra import compose, initialize_config_dir
from hydra.errors import HydraException
from omegaconf import OmegaConf
from omegaconf.errors import OmegaConfBaseException

from src.configurations import instantiate_settings
from src.configurations.cli_confs import LoggingConf, OutputConf
from src.configurations.verification_confs import VerificationConf
from src.cli.jobs import JobContext, JobRequest, jobFactory, run
from src.cli.payloads import SCHEMA_VERSION, load_document
from src.cli.rendering import render
from src.errors import MathDomainError, SchemaError

logger = logging.getLogger(__name__)

CONFIG_DIR = Path(__file__).resolve().parents[2] / "cfg"

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_MATH = 3


def load_settings(overrides: List[str]) -> dict:
    """
    Composes cfg/config.yaml with hydra overrides and instantiates the registered configurations.

    Args:
        overrides (List[str]): hydra overrides such as "verification=factorwise" or "output.output_settings.indent=4".

    Returns:
        dict: the configuration tree with dataclass leaves.

    Raises:
        SchemaError: if an override is malformed or a value is out of range.
    """

    try:
        with initialize_config_dir(version_base=None, config_dir=str(CONFIG_DIR)):
            cfg = compose(config_name="config", overrides=list(overrides))
        return instantiate_settings(OmegaConf.to_container(cfg, resolve=True))
    except (HydraException, OmegaConfBaseException, AssertionError, TypeError) as e:
        raise SchemaError(f"invalid configuration: {e}", pointer="") from e


def _parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    parser = argparse.ArgumentParser(
        prog="krtorus",
        description="Exact classification, T-duality and KR-theory of Real affine tori.",
    )
    parser.add_argument("command", choices=jobFactory.getCommands())
    parser.add_argument("--input", default="-", help="request document, - for standard input")
    parser.add_argument("--format", choices=["json", "markdown"], default=None, help="shortcut for output=<format>")
    parser.add_argument("--output", default=None, help="write the response to a file instead of standard output")
    parser.add_argument("overrides", nargs="*", help="hydra overrides, e.g. verification=factorwise")
    return parser.parse_args(argv)


def _read_request(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise SchemaError(f"cannot read request {source}: {e.strerror}", pointer="") from e


def _write(text: str, destination: Optional[str]) -> None:
    if destination is None:
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(destination, "w", encoding="utf-8") as f:
            f.write(text)


def _error_document(e: Exception) -> dict:
    error = {"kind": getattr(e, "code", type(e).__name__), "message": str(e)}
    if isinstance(e, SchemaError):
        error["pointer"] = e.pointer
    return {"schema_version": SCHEMA_VERSION, "error": error}


def main(argv: Optional[List[str]] = None) -> int:
    """
    Runs one request: reads the document, computes the response and prints it.

    Returns:
        int: 0 on success, 2 on a schema or configuration error, 3 on a math-domain error.
    """

    args = _parse_args(argv)
    overrides = list(args.overrides)
    if args.format is not None:
        overrides.append(f"output={args.format}")

    output = OutputConf()
    try:
        settings = load_settings(overrides)
        output = settings["output"]["output_settings"]
        logging_settings: LoggingConf = settings["logging_settings"]
        logging.basicConfig(level=logging_settings.numeric_level, format=logging_settings.fmt, stream=sys.stderr)
        verification: VerificationConf = settings["verification"]["verification_settings"]
        context = JobContext(verification=verification, seed=int(settings.get("seed", 0)))

        payload = load_document(_read_request(args.input))
        response = run(JobRequest(command=args.command, payload=payload), context)
    except SchemaError as e:
        logger.error("schema error at '%s': %s", e.pointer, e)
        _write(render(_error_document(e), output), args.output)
        return EXIT_SCHEMA
    except MathDomainError as e:
        logger.error("%s: %s", e.code, e)
        _write(render(_error_document(e), output), args.output)
        return EXIT_MATH

    _write(render(response, output), args.output)
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
