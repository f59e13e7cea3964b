"""Bundled instances."""

from __future__ import annotations

from importlib import resources

from .instance import Instance, parse_instance


def example2(divisions: bool = True) -> Instance:
    """The 23-task worked example (c = 10) with its six divisible tasks."""
    text = resources.files("tdalbp").joinpath("data/example2.tdalb").read_text()
    inst = parse_instance(text, "tdalb", name="example2")
    return inst if divisions else inst.without_divisions()
