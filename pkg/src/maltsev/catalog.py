"""Builtin algebras and the on-disk ``.alg.json`` format.

The catalog carries positive controls (``abelian(n)``, the Lie algebras
``so3`` and ``sl2``, and the 7-dimensional Mal'tsev algebra ``m7``) and one
negative control (``nc3``, anticommutative but neither Lie nor Mal'tsev).

``m7`` is generated, not hand-typed: sign conventions for the octonion
multiplication table vary across sources and a typo there would silently
corrupt every downstream check.  Building the octonions by Cayley-Dickson
doubling and reading the commutators of the seven imaginary units off the
product is self-certifying, because the test suite then proves the result
satisfies the Mal'tsev identity and fails the Jacobi identity by brute
force.
"""
from __future__ import annotations

import json
import re
from pathlib import Path

from .core import Algebra, Vector, format_rational, parse_rational

BUILTIN_ALGEBRA_DOC = (
    ("abelian(n)", "all brackets zero, any positive dimension n"),
    ("so3", "[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2"),
    ("sl2", "basis (h,e,f); [h,e]=2e, [h,f]=-2f, [e,f]=h"),
    ("m7", "imaginary octonion commutators (non-Lie Mal'tsev, dim 7)"),
    ("nc3", "[e1,e2]=e1, [e2,e3]=e2, [e3,e1]=e3 (not Mal'tsev)"),
)

FILE_SUFFIX = ".alg.json"

_ABELIAN_RE = re.compile(r"^abelian\((-?\d+)\)$")


class AlgebraFileError(ValueError):
    """A .alg.json file failed to parse or validate."""


def builtin(name: str) -> Algebra:
    """Construct a catalog algebra by name."""
    m = _ABELIAN_RE.match(name)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError(f"abelian dimension must be positive, got {n}")
        return Algebra(name, tuple(f"e{i+1}" for i in range(n)), {})
    if name == "so3":
        return Algebra("so3", ("e1", "e2", "e3"), {
            (0, 1): (0, 0, 1),
            (1, 2): (1, 0, 0),
            (0, 2): (0, -1, 0),
        })
    if name == "sl2":
        return Algebra("sl2", ("h", "e", "f"), {
            (0, 1): (0, 2, 0),
            (0, 2): (0, 0, -2),
            (1, 2): (1, 0, 0),
        })
    if name == "m7":
        return _build_m7()
    if name == "nc3":
        return Algebra("nc3", ("e1", "e2", "e3"), {
            (0, 1): (1, 0, 0),
            (1, 2): (0, 1, 0),
            (0, 2): (0, 0, -1),
        })
    raise ValueError(
        f"unknown builtin algebra {name!r}; known: abelian(n), so3, sl2, m7, nc3")


def maltsev_catalog() -> tuple[Algebra, ...]:
    """The catalog algebras that are Mal'tsev (abelian(3) as representative)."""
    return (builtin("abelian(3)"), builtin("so3"), builtin("sl2"), builtin("m7"))


def full_catalog() -> tuple[Algebra, ...]:
    return maltsev_catalog() + (builtin("nc3"),)


# --- octonions by Cayley-Dickson doubling -------------------------------
#
# Elements are tuples of 2^k ints; a pair (a, b) of halves multiplies as
# (a,b)(c,d) = (ac - d conj(b), conj(a) d + c b), with conj(a,b) =
# (conj(a), -b) and plain integer arithmetic at length 1.

def _cd_conj(x: tuple[int, ...]) -> tuple[int, ...]:
    if len(x) == 1:
        return x
    n = len(x) // 2
    return _cd_conj(x[:n]) + tuple(-t for t in x[n:])


def _cd_mul(x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
    if len(x) == 1:
        return (x[0] * y[0],)
    n = len(x) // 2
    a, b = x[:n], x[n:]
    c, d = y[:n], y[n:]
    left = tuple(p - q for p, q in zip(_cd_mul(a, c), _cd_mul(d, _cd_conj(b))))
    right = tuple(p + q for p, q in zip(_cd_mul(_cd_conj(a), d), _cd_mul(c, b)))
    return left + right


def _build_m7() -> Algebra:
    def unit(k: int) -> tuple[int, ...]:
        return tuple(1 if i == k else 0 for i in range(8))

    pairs = {}
    for i in range(1, 8):
        for j in range(i + 1, 8):
            prod = _cd_mul(unit(i), unit(j))
            comm = tuple(p - q for p, q in zip(prod, _cd_mul(unit(j), unit(i))))
            if comm[0] != 0:
                raise AssertionError(
                    f"octonion commutator [u{i}, u{j}] left the imaginary span")
            pairs[(i - 1, j - 1)] = comm[1:]
    return Algebra("m7", tuple(f"e{i}" for i in range(1, 8)), pairs)


# --- file format ---------------------------------------------------------

def algebra_to_data(A: Algebra) -> dict:
    brackets = []
    for (i, j), v in A.pairs():
        result = {str(k): format_rational(c) for k, c in enumerate(v.coords) if c}
        brackets.append({"i": i, "j": j, "result": result})
    return {"name": A.name, "dim": A.dim, "basis": list(A.basis), "brackets": brackets}


def validate_algebra_data(data: object) -> list[str]:
    """All violations of the file schema, with locations; empty means valid."""
    bad = []
    if not isinstance(data, dict):
        return [f"top level: expected an object, got {type(data).__name__}"]
    name = data.get("name")
    if not isinstance(name, str) or not name:
        bad.append("name: expected a non-empty string")
    dim = data.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        bad.append("dim: expected a positive integer")
        return bad  # nothing below is checkable without a dim
    basis = data.get("basis")
    if (not isinstance(basis, list) or len(basis) != dim
            or not all(isinstance(b, str) for b in basis)):
        bad.append(f"basis: expected a list of {dim} labels")
    elif len(set(basis)) != dim:
        bad.append("basis: labels not distinct")
    entries = data.get("brackets", [])
    if not isinstance(entries, list):
        return bad + ["brackets: expected a list"]
    seen = set()
    for n, entry in enumerate(entries):
        loc = f"brackets[{n}]"
        if not isinstance(entry, dict):
            bad.append(f"{loc}: expected an object")
            continue
        i, j = entry.get("i"), entry.get("j")
        if not isinstance(i, int) or not isinstance(j, int):
            bad.append(f"{loc}: i and j must be integers")
            continue
        if not (0 <= i < dim and 0 <= j < dim):
            bad.append(f"{loc}: indices ({i}, {j}) out of range for dim {dim}")
            continue
        if i >= j:
            bad.append(f"{loc}: i must be < j (got i={i}, j={j})")
            continue
        if (i, j) in seen:
            bad.append(f"{loc}: duplicate entry for ({i}, {j})")
        seen.add((i, j))
        result = entry.get("result")
        if not isinstance(result, dict):
            bad.append(f"{loc}.result: expected an object")
            continue
        for key, text in result.items():
            kloc = f"{loc}.result[{key!r}]"
            try:
                k = int(key)
            except (TypeError, ValueError):
                bad.append(f"{kloc}: key is not a basis index")
                continue
            if not 0 <= k < dim:
                bad.append(f"{kloc}: index {k} out of range for dim {dim}")
            if not isinstance(text, str):
                bad.append(f"{kloc}: expected a rational string")
                continue
            try:
                parse_rational(text)
            except ValueError as exc:
                bad.append(f"{kloc}: {exc}")
    return bad


def data_to_algebra(data: dict, *, source: str = "<data>") -> Algebra:
    violations = validate_algebra_data(data)
    if violations:
        raise AlgebraFileError(f"{source}: " + "; ".join(violations))
    dim = data["dim"]
    brackets = {}
    for entry in data.get("brackets", []):
        coords = [0] * dim
        for key, text in entry["result"].items():
            coords[int(key)] = parse_rational(text)
        brackets[(entry["i"], entry["j"])] = Vector(coords)
    return Algebra(data["name"], tuple(data["basis"]), brackets)


def load_algebra(path: str | Path) -> Algebra:
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"{path}: invalid JSON: {exc}") from None
    return data_to_algebra(data, source=str(path))


def save_algebra(A: Algebra, path: str | Path) -> None:
    path = Path(path)
    path.write_text(json.dumps(algebra_to_data(A), indent=2) + "\n", encoding="utf-8")
