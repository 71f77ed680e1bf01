__author__ = "krtorus developers"
__copyright__ = "Copyright 2026, krtorus developers"
__license__ = "BSD 3-Clause"
__version__ = "1.0.0"
__maintainer__ = "krtorus developers"
__email__ = "krtorus-dev@example.org"
__status__ = "development"

from typing import List
import json

from src.configurations.cli_confs import OutputConf


def render_json(document: dict, settings: OutputConf) -> str:
    return json.dumps(document, indent=settings.indent, sort_keys=settings.sort_keys, ensure_ascii=True) + "\n"


def _group_text(group: dict) -> str:
    return group["text"]


def _degree_table(rows: List[dict]) -> List[str]:
    # KR^j next to KR^(j+4)
    lines = ["| j | KR^j | j+4 | KR^(j+4) |", "|---|---|---|---|"]
    for j in range(4):
        lo, hi = rows[j], rows[j + 4]
        lines.append(f"| {lo['j']} | {_group_text(lo['group'])} | {hi['j']} | {_group_text(hi['group'])} |")
    return lines


def _comparison_table(degrees: List[dict]) -> List[str]:
    lines = ["| j | source | j' | target | equal |", "|---|---|---|---|---|"]
    for row in degrees:
        lines.append(
            f"| {row['j']} | {_group_text(row['source'])} | {row['j_target']} | "
            f"{_group_text(row['target'])} | {'yes' if row['equal'] else 'no'} |"
        )
    return lines


def _candidate_sections(candidates: List[dict], level: str) -> List[str]:
    lines = []
    for c in candidates:
        lines += ["", f"{level} candidate {c['candidate']}: {'pass' if c['pass'] else 'FAIL'}", ""]
        lines += _comparison_table(c["degrees"])
        lines += ["", f"free rank: source {c['source_free_rank']}, target {c['target_free_rank']}"]
        if not c["ledger_consistent"]:
            lines.append("shift ledger disagrees with the factor types")
    return lines


def _scalar_lines(document: dict, skip: tuple) -> List[str]:
    lines = []
    for key in sorted(document):
        if key in skip:
            continue
        value = document[key]
        text = value if isinstance(value, str) else json.dumps(value, sort_keys=True, ensure_ascii=False)
        lines.append(f"- **{key}**: {text}")
    return lines


def render_markdown(document: dict) -> str:
    """
    Human-readable rendering. Graded groups are laid out in two columns, degree j next to degree j + 4, and
    Fourier-Mukai comparisons get one row per source degree.
    """

    lines = [f"# krtorus {document.get('command', 'error')}", ""]
    if "error" in document:
        lines += _scalar_lines(document["error"], ())
        return "\n".join(lines) + "\n"

    tables = ("groups", "factor_tables", "candidates", "degrees", "factors", "generators")
    lines += _scalar_lines(document, tables if document.get("command") in ("kr-groups", "fm-verify") else ())

    if "groups" in document:
        lines += ["", "## groups", ""] + _degree_table(document["groups"])
    for table in document.get("factor_tables", []):
        lines += ["", f"## {table['factor']}", ""] + _degree_table(table["groups"])
    if "generators" in document:
        lines += ["", "## generators", ""]
        for g in document["generators"]:
            lines.append(f"- {g['name']} in degree {g['degree']}, order {g['order'] or 'infinite'}")
    if document.get("command") == "fm-verify":
        lines += _candidate_sections(document.get("candidates", []), "##")
        for entry in document.get("factors", []):
            lines += ["", f"## factor {entry['factor']}: {'pass' if entry['pass'] else 'FAIL'}"]
            lines += _candidate_sections(entry["candidates"], "###")
    return "\n".join(lines) + "\n"


def render(document: dict, settings: OutputConf) -> str:
    if settings.format == "markdown":
        return render_markdown(document)
    return render_json(document, settings)
