"""Shipped data: the verification corpus and arrangement sample files."""

from pathlib import Path


def data_dir() -> Path:
    return Path(__file__).resolve().parent


def shipped_corpus_dir() -> Path:
    return data_dir() / "corpus"
