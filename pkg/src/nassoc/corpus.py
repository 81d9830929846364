"""Shipped classification corpus.

Algebra tables (JSON, one file per algebra), degeneration certificates, and
closed-set specifications live as package data under nassoc/corpus/.  Names:
A01..A29 are the commutative associative tables, a1/a2 the 3-dimensional and
a01..a14 the 4-dimensional noncommutative shift associative tables (families
carry an "alpha" parameter), dim5_nonassoc the minimal non-associative
example, and L1/L2 the nilpotent Lie algebras behind the cocycle
construction.
"""

from __future__ import annotations

import json
from importlib import resources

from .algebras import AlgebraStructure
from .moduli import ClosedSetSpec

COMMUTATIVE_ASSOCIATIVE = tuple(f"A{i:02d}" for i in range(1, 30))
SHIFT_ASSOCIATIVE_3D = ("a1", "a2")
SHIFT_ASSOCIATIVE_4D = tuple(f"a{i:02d}" for i in range(1, 15))
LIE = ("L1", "L2")
ALL_ALGEBRAS = COMMUTATIVE_ASSOCIATIVE + SHIFT_ASSOCIATIVE_3D + SHIFT_ASSOCIATIVE_4D + ("dim5_nonassoc",) + LIE

# variety claims verified by the acceptance suite
CLAIMS = {
    **{name: ("com-as",) for name in COMMUTATIVE_ASSOCIATIVE},
    **{name: ("sas",) for name in SHIFT_ASSOCIATIVE_3D},
    **{name: ("sas", "cas") for name in SHIFT_ASSOCIATIVE_4D},
    "dim5_nonassoc": ("sas",),
}

CERTIFICATES = ("a12_0_to_a11", "a12_m1t_to_a13", "a13_to_a14", "a12_family_to_a06")
CLOSED_SETS = ("a12_not_a10",)

_cache: dict[str, AlgebraStructure] = {}


def _data_root():
    return resources.files("nassoc") / "corpus"


def corpus_names():
    return ALL_ALGEBRAS


def load_algebra(name: str) -> AlgebraStructure:
    """Load a corpus algebra by name, or any algebra file by path."""
    if name in _cache:
        return _cache[name]
    if name in ALL_ALGEBRAS:
        text = (_data_root() / f"{name}.json").read_text()
    else:
        with open(name) as fh:
            text = fh.read()
    alg = AlgebraStructure.from_json(text)
    if name in ALL_ALGEBRAS:
        _cache[name] = alg
    return alg


def load_certificate(name: str) -> dict:
    """Certificate JSON by corpus name or path."""
    if name in CERTIFICATES:
        text = (_data_root() / "certs" / f"{name}.json").read_text()
    else:
        with open(name) as fh:
            text = fh.read()
    return json.loads(text)


def load_closed_set(name: str) -> ClosedSetSpec:
    if name in CLOSED_SETS:
        text = (_data_root() / "closed_sets" / f"{name}.json").read_text()
    else:
        with open(name) as fh:
            text = fh.read()
    return ClosedSetSpec.from_dict(json.loads(text))


def run_certificate(cert: dict, sample=None):
    """Execute a certificate dict against the corpus.

    Plain certificates: {"from", "subst"?, "basis", "to"}.  Family
    certificates add "family_parameter" and "samples" (rational strings);
    `sample` picks one value, defaulting to each listed sample in turn (a
    list of results is returned in that case).
    """
    from fractions import Fraction

    from .moduli import family_degeneration_check

    source = load_algebra(cert["from"])
    target = load_algebra(cert["to"])
    columns = cert["basis"]
    subst = cert.get("subst", {})
    if "family_parameter" in cert:
        if sample is not None:
            env = {cert["family_parameter"]: Fraction(sample)}
            return family_degeneration_check(source, columns, subst, target, env)
        results = []
        for s in cert["samples"]:
            env = {cert["family_parameter"]: Fraction(s)}
            results.append(family_degeneration_check(source, columns, subst, target, env))
        return results
    return family_degeneration_check(source, columns, subst, target, None)
