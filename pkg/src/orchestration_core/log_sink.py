from __future__ import annotations

import re
import threading
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List

_TAG = re.compile(r"^\[([A-Z]+)\]")


@dataclass(frozen=True)
class LogLine:
    text: str
    tag: str = ""

    @classmethod
    def parse(cls, text: str) -> "LogLine":
        m = _TAG.match(text)
        return cls(text=text, tag=m.group(1) if m else "")


class LogSink:
    """
    Buffer for the tagged lines engines emit through log_fn ("[SEARCH] ...",
    "[WARN] ...", "[BENCH] ...").
    - Controller, search and bench workers call .write()
    - The CLI drains with .drain() into the run manifest and stderr
    - Tag totals survive draining, so a run can report its warnings at the end
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._lines: List[LogLine] = []
        self._tags: Counter = Counter()

    def write(self, text: str) -> None:
        line = LogLine.parse(str(text))
        with self._lock:
            self._lines.append(line)
            self._tags[line.tag] += 1

    def drain(self, max_lines: int = 0) -> List[str]:
        """Pop up to max_lines lines (all of them when max_lines is 0)."""
        with self._lock:
            cut = len(self._lines) if max_lines <= 0 else max_lines
            take, self._lines = self._lines[:cut], self._lines[cut:]
        return [line.text for line in take]

    def peek(self) -> List[str]:
        with self._lock:
            return [line.text for line in self._lines]

    def count(self, tag: str) -> int:
        with self._lock:
            return self._tags[tag]

    def tag_totals(self) -> Dict[str, int]:
        with self._lock:
            return {tag: k for tag, k in sorted(self._tags.items()) if tag}

    def __len__(self) -> int:
        with self._lock:
            return len(self._lines)
