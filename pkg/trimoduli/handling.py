"""Various utilities functions."""

import os
import tempfile

CACHE_FORMAT = "trigraph-v1"


def parse_range(text):
    """Parse 'A..B' (inclusive) or a single integer into a range."""
    text = text.strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
    else:
        lo = hi = int(text)
    if lo > hi:
        return range(0)
    return range(lo, hi + 1)


def parse_members(text):
    """Parse a comma-separated list of positive integers into a sorted tuple."""
    members = [int(x) for x in text.replace(" ", "").split(",") if x]
    if not members:
        raise ValueError("empty member list")
    if len(set(members)) != len(members):
        raise ValueError(f"repeated members in {text!r}")
    return tuple(sorted(members))


def parse_clique_spec(text):
    """Parse 'n=<n>,members=<a>,<b>,...' into (n, members)."""
    head, sep, tail = text.partition(",members=")
    if not sep or not head.startswith("n="):
        raise ValueError(f"expected n=<n>,members=<list>, got {text!r}")
    return int(head[2:]), parse_members(tail)


def graph_cache_path(cache_dir, n):
    return os.path.join(cache_dir, CACHE_FORMAT, f"T{n}.txt")


def atomic_write_text(path, text):
    """Write UTF-8 text with \\n endings through a temp file and a rename."""
    dirname = os.path.dirname(os.path.abspath(path))
    os.makedirs(dirname, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=dirname, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.remove(tmp)
        raise


def read_text(path):
    with open(path, "r", encoding="utf-8", newline="") as f:
        return f.read()


def clean_dir(dirname):
    """Remove cached graph files below dirname."""
    removed = 0
    for root, dirs, files in os.walk(dirname):
        for name in files:
            if (name.startswith("T") and name.endswith(".txt")) or name.startswith(".tmp-"):
                os.remove(os.path.join(root, name))
                removed += 1
    return removed
