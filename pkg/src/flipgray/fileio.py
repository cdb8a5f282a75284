"""Instance and certificate text files.

Instance file::

    # optional comments
    kind=bitstring flip=bitflip n=3
    000
    001

Certificate file: one line of space separated 1-based indices.
"""
from __future__ import annotations

from pathlib import Path

from .errors import MalformedText
from .objects import Instance, format_object, parse_object, validate_instance
from .solver import Certificate


def parse_instance(text: str, *, flip=None) -> Instance:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise MalformedText("instance file has no header line")
    header = {}
    for tok in lines[0].split():
        key, sep, value = tok.partition("=")
        if not sep:
            raise MalformedText(f"header token {tok!r} is not key=value")
        header[key] = value
    if "kind" not in header or "flip" not in header:
        raise MalformedText("header needs kind=<tag> and flip=<tag>")
    kind = header["kind"]
    n = int(header["n"]) if "n" in header else None
    k = int(header["k"]) if "k" in header else None
    objs = tuple(parse_object(kind, ln, n=n, k=k) for ln in lines[1:])
    inst = Instance(kind, flip or header["flip"], objs, n, k)
    validate_instance(inst)
    return inst


def format_instance(inst: Instance) -> str:
    head = f"kind={inst.kind} flip={inst.flip}"
    if inst.n is not None:
        head += f" n={inst.n}"
    if inst.k is not None:
        head += f" k={inst.k}"
    return "\n".join([head, *(format_object(o) for o in inst.objects)]) + "\n"


def read_instance(path, *, flip=None) -> Instance:
    return parse_instance(Path(path).read_text(encoding="utf-8"), flip=flip)


def write_instance(inst: Instance, path):
    Path(path).write_text(format_instance(inst), encoding="utf-8")


def read_certificate(path) -> Certificate:
    return Certificate.parse(Path(path).read_text(encoding="utf-8"))


def write_certificate(cert: Certificate, path):
    Path(path).write_text(str(cert) + "\n", encoding="utf-8")
