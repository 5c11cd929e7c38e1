"""Non-blank line counts before and after optimization."""

from __future__ import annotations

import difflib
from dataclasses import dataclass

from .emit import FileKind


def count_lines(text):
    """Non-blank lines; comment lines count."""
    return sum(1 for line in text.splitlines() if line.strip())


def _total(files):
    return sum(count_lines(t) for t in files.values())


def changed_lines(before: dict, after: dict):
    """Non-blank lines edited, added or removed between two versions of a file set.

    A replaced block counts max(old, new) lines, so editing one line counts once.
    """
    changed = 0
    for path in sorted(set(before) | set(after)):
        a = [l for l in before.get(path, "").splitlines() if l.strip()]
        b = [l for l in after.get(path, "").splitlines() if l.strip()]
        for tag, i1, i2, j1, j2 in difflib.SequenceMatcher(None, a, b, autojunk=False).get_opcodes():
            if tag != "equal":
                changed += max(i2 - i1, j2 - j1)
    return changed


@dataclass(frozen=True)
class LineReport:
    rows: tuple  # (category, pass1, pass2-or-None)

    def get(self, category):
        return next(r for r in self.rows if r[0] == category)[1:]

    def to_tsv(self):
        lines = ["category\tpass1\tpass2"]
        for name, p1, p2 in self.rows:
            lines.append(f"{name}\t{p1}\t{'-' if p2 is None else p2}")
        return "\n".join(lines) + "\n"


def line_report(generated, user_files, cdl_text="", generated_pass2=None,
                user_files_after=None, flow_text=None) -> LineReport:
    """Line counts per category for pass 1 and, when given, pass 2.

    *user_files* is the user-written set as it stood for pass 1;
    *user_files_after* is the same set after pass 2 ran. The
    ``user_lines_changed`` row is what optimization forced the user to edit.
    """
    auto1 = _total(generated.of_kind(FileKind.SCAFFOLDING))
    user1 = _total(user_files)
    cdl = count_lines(cdl_text)
    rows = [("cdl_file", cdl, None), ("flow_file", 0, None), ("auto_generated", auto1, None),
            ("rtos_config", 0, None), ("user_written", user1, None),
            ("user_lines_changed", 0, None), ("hand_coding", cdl + user1, None),
            ("compiled", auto1 + user1, None)]
    if generated_pass2 is None:
        return LineReport(tuple(rows))
    after = user_files if user_files_after is None else user_files_after
    auto2 = _total(generated_pass2.of_kind(FileKind.SCAFFOLDING))
    user2 = _total(after)
    changed = changed_lines(user_files, after)
    pass2 = {
        "cdl_file": cdl,
        "flow_file": count_lines(flow_text or ""),
        "auto_generated": auto2,
        "rtos_config": _total(generated_pass2.of_kind(FileKind.RTOS_CONFIG)),
        "user_written": user2,
        "user_lines_changed": changed,
        "hand_coding": changed,
        "compiled": auto2 + user2,
    }
    return LineReport(tuple((name, p1, pass2[name]) for name, p1, _ in rows))
