"""Singing-voice pitch manipulation: thin wrapper over the native module."""

from _retone import (
    Model,
    extract_f0,
    global_shift,
    make_corpus,
    selftest,
)

__all__ = ["Model", "extract_f0", "global_shift", "make_corpus", "selftest"]
