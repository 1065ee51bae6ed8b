from __future__ import annotations

import os as _os

# Packaging
MAIN_PACKAGE = "tagchart"
TEST_PACKAGE = "tests"

# Directories
DEV_REQUIREMENTS_DIRECTORY = "dev-requirements"
GOLDEN_DIRECTORY = _os.path.join(TEST_PACKAGE, "golden")

# Files checked for trailing whitespace and spelling. Golden outputs and
# grammar data are byte-exact and stay out of both.
REFORMATTING_FILE_EXTS = (".py", ".yml", ".yaml", ".json", ".toml", ".ini", ".md", ".txt")

PYTHON_REFORMATTING_PATHS = (
    MAIN_PACKAGE,
    TEST_PACKAGE,
    "pipelines",
    "noxfile.py",
)

FULL_REFORMATTING_PATHS = (
    *PYTHON_REFORMATTING_PATHS,
    *(
        f
        for f in _os.listdir(".")
        if _os.path.isfile(f) and f.endswith(REFORMATTING_FILE_EXTS)
    ),
)

SKIP_FILE_EXTENSIONS = ("*.json", "*.lex", "*.tsv", "*.trace", "*.listing", "*.cfg")
