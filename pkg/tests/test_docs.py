from pathlib import Path
import re
import runpy

ROOT = Path(__file__).resolve().parents[1]
DOCS = ROOT / "docs" / "source"


def test_sphinx_config_points_at_the_repository():
    conf = runpy.run_path(str(DOCS / "conf.py"))
    assert conf["ROOT"] == ROOT
    assert conf["project"] == "krtorus"


def test_every_module_has_an_api_page():
    documented = set()
    for page in DOCS.glob("*.rst"):
        documented |= set(re.findall(r"^\.\. automodule:: (\S+)$", page.read_text(), flags=re.MULTILINE))
    modules = {
        ".".join(path.relative_to(ROOT).with_suffix("").parts).removesuffix(".__init__")
        for path in (ROOT / "src").rglob("*.py")
    }
    assert modules == documented
