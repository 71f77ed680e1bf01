__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

"""
Request parsing. Payloads are validated against the published json schemas, then converted into library objects.
Integers and rationals travel as strings ("-3", "1/2") so that no value goes through a float."""

from fractions import Fraction
from pathlib import Path
from typing import Any, List, Sequence, Tuple, Union
import functools
import json

from jsonschema import Draft202012Validator
from jsonschema.exceptions import best_match

from src.gerbes import AffineGerbeClass, PointGerbeClass, standard_gerbe
from src.tori import FactorType, RealTorus, standard_torus, sort_factors
from src.errors import InconsistentGerbeData, SchemaError

SCHEMA_VERSION = "1"
SCHEMA_DIR = Path(__file__).resolve().parents[2] / "schemas"


def pointer(path: Sequence[Union[str, int]]) -> str:
    """
    JSON pointer of a path inside a document.
    """

    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


@functools.lru_cache(maxsize=None)
def load_schema(kind: str, command: str) -> dict:
    """
    Args:
        kind (str): "requests" or "responses".
        command (str): the command name, or "error".

    Returns:
        dict: the schema.
    """

    with open(SCHEMA_DIR / kind / f"{command}.json", "r", encoding="utf-8") as f:
        return json.load(f)


def _validate(schema: dict, document: Any) -> None:
    error = best_match(Draft202012Validator(schema).iter_errors(document))
    if error is not None:
        raise SchemaError(error.message, pointer=pointer(error.absolute_path))


def validate_request(command: str, payload: Any) -> None:
    """
    Raises:
        SchemaError: if the payload does not validate, with the pointer of the offending field.
    """

    _validate(load_schema("requests", command), payload)


def validate_response(command: str, document: Any) -> None:
    _validate(load_schema("responses", command), document)


def load_document(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"request is not valid json: {e.msg} at line {e.lineno}", pointer="") from e


def parse_int(value: Union[int, str], path: Sequence[Union[str, int]] = ()) -> int:
    try:
        return int(value)
    except (TypeError, ValueError) as e:
        raise SchemaError(f"expected an integer, got {value!r}", pointer=pointer(path)) from e


def parse_rational(value: Union[int, str], path: Sequence[Union[str, int]] = ()) -> Fraction:
    try:
        return Fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise SchemaError(f"expected a rational p/q, got {value!r}", pointer=pointer(path)) from e


def parse_matrix(rows: List[List[Union[int, str]]], path: Sequence[Union[str, int]] = ()) -> List[List[int]]:
    """
    Row-major integer matrix. Every row must have the same length.
    """

    path = tuple(path)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise SchemaError("matrix rows have different lengths", pointer=pointer(path))
    return [[parse_int(x, path + (i, j)) for j, x in enumerate(r)] for i, r in enumerate(rows)]


def parse_twist(value: Any, path: Sequence[Union[str, int]] = ()) -> PointGerbeClass:
    """
    A point gerbe given as its exponent p in Z/4 or as {"e", "mu"}.
    """

    if value is None:
        return PointGerbeClass.identity()
    if isinstance(value, dict):
        return PointGerbeClass(int(value["e"]), int(value["mu"]))
    return PointGerbeClass.from_z4(parse_int(value, path))


def parse_factors(values: Sequence[str]) -> Tuple[FactorType, ...]:
    return sort_factors(FactorType(v) for v in values)


def parse_torus(payload: dict) -> RealTorus:
    sigma = parse_matrix(payload["sigma"], ("sigma",))
    t = payload.get("t")
    if t is not None:
        if len(t) != len(sigma):
            raise SchemaError(f"t has {len(t)} entries for a rank {len(sigma)} torus", pointer="/t")
        t = [parse_rational(x, ("t", i)) for i, x in enumerate(t)]
    return RealTorus.from_matrix(sigma, t)


def _parse_gerbe_object(torus: RealTorus, value: dict) -> AffineGerbeClass:
    lam = [parse_int(x, ("gerbe", "lambda", i)) for i, x in enumerate(value["lambda"])]
    signatures = value.get("signatures")
    return AffineGerbeClass(
        torus=torus,
        lambda_part=tuple(lam),
        point_twist=parse_twist(value.get("twist"), ("gerbe", "twist")),
        fixed_point_signatures=None if signatures is None else tuple(tuple(s) for s in signatures),
    )


def parse_pair(payload: dict) -> Tuple[RealTorus, AffineGerbeClass]:
    """
    The torus and gerbe of a dualize or fm-verify request.

    With "factors", the torus is the split model and the gerbe is its standard gerbe ("standard", the default),
    the trivial gerbe ("trivial", which has no T4 factor) or an explicit object. With "sigma", the gerbe must be
    an explicit object.

    Raises:
        SchemaError: on conflicting fields.
        InconsistentGerbeData: for a trivial gerbe on a T4 factor.
    """

    gerbe = payload.get("gerbe", "standard")
    if isinstance(gerbe, dict) and "twist" in payload:
        raise SchemaError("give the twist inside the gerbe object", pointer="/twist")
    if "factors" not in payload:
        if not isinstance(gerbe, dict):
            raise SchemaError("an explicit torus needs an explicit gerbe", pointer="/gerbe")
        torus = parse_torus(payload)
        return torus, _parse_gerbe_object(torus, gerbe)

    factors = parse_factors(payload["factors"])
    if isinstance(gerbe, dict):
        torus = standard_torus(factors)
        return torus, _parse_gerbe_object(torus, gerbe)
    if gerbe == "trivial" and FactorType.T4 in factors:
        raise InconsistentGerbeData("the trivial gerbe restricts equally to both fixed points, so it has no T4 factor")
    g = standard_gerbe(factors, parse_twist(payload.get("twist"), ("twist",)))
    return g.torus, g
