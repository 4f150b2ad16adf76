from __future__ import annotations

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

collect_ignore = ["examples"]


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: acceptance-scale sweeps (minutes)")
