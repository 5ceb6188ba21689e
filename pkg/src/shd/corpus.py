"""Bundled diagram corpus and file lookup."""
from __future__ import annotations

import os
import shutil
from importlib import resources
from pathlib import Path

from .diagram import load_diagram

ENV_VAR = "SHD_CORPUS_DIR"


def bundled_dir():
    return Path(resources.files("shd") / "data")


def corpus_dir():
    """``$SHD_CORPUS_DIR`` when set, else the bundled corpus."""
    override = os.environ.get(ENV_VAR)
    return Path(override) if override else bundled_dir()


def corpus_names():
    return sorted(p.stem for p in corpus_dir().glob("*.shd"))


def resolve(path):
    """An existing path as given, otherwise the same file name in the corpus."""
    p = Path(path)
    if p.is_file():
        return p
    name = p.name if p.suffix == ".shd" else f"{p.name}.shd"
    candidate = corpus_dir() / name
    if candidate.is_file():
        return candidate
    raise FileNotFoundError(f"no such diagram file: {path}")


def load(name):
    return load_diagram(resolve(name))


def load_all():
    return [load(n) for n in corpus_names()]


def export(dest):
    dest = Path(dest)
    dest.mkdir(parents=True, exist_ok=True)
    written = []
    for p in sorted(corpus_dir().glob("*.shd")):
        shutil.copyfile(p, dest / p.name)
        written.append(dest / p.name)
    return written
