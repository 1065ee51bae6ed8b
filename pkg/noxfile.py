"""Load every ``pipelines/*.nox.py`` job file."""

from __future__ import annotations

import pathlib
import runpy
import sys

sys.path.append(str(pathlib.Path.cwd()))

for job_file in sorted(pathlib.Path("pipelines").glob("*.nox.py")):
    runpy.run_path(str(job_file))
