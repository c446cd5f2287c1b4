"""Reading and writing the JSON algebra file format.

A file lists the graded basis, the twist matrix and the bracket of each
pair (i, j) with i < j, plus i = j for odd basis elements; everything
else follows by super skew-symmetry, so inconsistent input cannot be
expressed.  All numbers are exact rational strings like "3/2" (plain
integers are also accepted); floats are rejected everywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .algebra import AlgebraSpec
from .linalg import Matrix, frac
from .spaces import GradedMap


class AlgebraFileError(ValueError):
    """Malformed or invariant-violating algebra file."""


def _rat(value: Any, where: str) -> Fraction:
    if isinstance(value, float):
        raise AlgebraFileError(
            f"{where}: floating point is not allowed, use 'p/q' strings")
    try:
        return frac(value)
    except (TypeError, ValueError) as exc:
        raise AlgebraFileError(f"{where}: {exc}") from None


def algebra_from_dict(doc: Any, source: str = "<data>") -> AlgebraSpec:
    if not isinstance(doc, dict):
        raise AlgebraFileError(f"{source}: top level must be an object")
    name = doc.get("name")
    if not isinstance(name, str) or not name:
        raise AlgebraFileError(f"{source}: missing algebra 'name'")

    basis = doc.get("basis")
    if not isinstance(basis, list) or not basis:
        raise AlgebraFileError(f"{source}: 'basis' must be a non-empty list")
    names: list[str] = []
    degrees: list[int] = []
    for idx, item in enumerate(basis):
        if not isinstance(item, dict) or "name" not in item or "degree" not in item:
            raise AlgebraFileError(
                f"{source}: basis[{idx}] needs 'name' and 'degree'")
        if item["degree"] not in (0, 1):
            raise AlgebraFileError(f"{source}: basis[{idx}] degree must be 0 or 1")
        names.append(str(item["name"]))
        degrees.append(int(item["degree"]))
    n = len(names)

    alpha_rows = doc.get("alpha")
    if (not isinstance(alpha_rows, list) or len(alpha_rows) != n
            or any(not isinstance(r, list) or len(r) != n for r in alpha_rows)):
        raise AlgebraFileError(f"{source}: 'alpha' must be an {n}x{n} array")
    alpha = Matrix.from_rows(
        [[_rat(x, f"{source}: alpha[{r}][{c}]") for c, x in enumerate(row)]
         for r, row in enumerate(alpha_rows)], n)
    for m in range(n):
        for i in range(n):
            if degrees[m] != degrees[i] and alpha.at(m, i):
                raise AlgebraFileError(
                    f"{source}: alpha[{m}][{i}] must be 0, it maps across "
                    f"Z2 degrees")

    entries = doc.get("brackets", [])
    if not isinstance(entries, list):
        raise AlgebraFileError(f"{source}: 'brackets' must be a list")
    pairs: dict[tuple[int, int], tuple[Fraction, ...]] = {}
    for idx, ent in enumerate(entries):
        where = f"{source}: brackets[{idx}]"
        if not isinstance(ent, dict):
            raise AlgebraFileError(f"{where}: must be an object")
        try:
            left, right = int(ent["left"]), int(ent["right"])
        except (KeyError, TypeError, ValueError):
            raise AlgebraFileError(
                f"{where}: needs integer 'left' and 'right'") from None
        if not (0 <= left < n and 0 <= right < n):
            raise AlgebraFileError(f"{where}: basis index out of range")
        if left > right:
            raise AlgebraFileError(
                f"{where}: need left <= right, the other half is derived "
                f"by skew-symmetry")
        if left == right and degrees[left] == 0:
            raise AlgebraFileError(
                f"{where}: [x,x] is forced to vanish for the even element "
                f"'{names[left]}'")
        if (left, right) in pairs:
            raise AlgebraFileError(
                f"{where}: duplicate bracket for pair ({left},{right})")
        result = ent.get("result")
        if not isinstance(result, list):
            raise AlgebraFileError(f"{where}: 'result' must be a list of "
                                   f"[coefficient, index] terms")
        target = [Fraction(0)] * n
        want = (degrees[left] + degrees[right]) % 2
        for t_idx, term in enumerate(result):
            if (not isinstance(term, list) or len(term) != 2):
                raise AlgebraFileError(
                    f"{where}: result[{t_idx}] must be [coefficient, index]")
            coef = _rat(term[0], f"{where}: result[{t_idx}]")
            try:
                mi = int(term[1])
            except (TypeError, ValueError):
                raise AlgebraFileError(
                    f"{where}: result[{t_idx}] index must be an integer") from None
            if not 0 <= mi < n:
                raise AlgebraFileError(
                    f"{where}: result[{t_idx}] index out of range")
            if coef and degrees[mi] != want:
                raise AlgebraFileError(
                    f"{where}: '{names[mi]}' has the wrong Z2 degree for "
                    f"this bracket")
            target[mi] += coef
        pairs[(left, right)] = tuple(target)

    return AlgebraSpec.from_pairs(name, degrees, alpha, pairs, tuple(names))


def parse_algebra(path) -> AlgebraSpec:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise AlgebraFileError(f"{path}: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(
            f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    return algebra_from_dict(doc, source=str(path))


def algebra_to_dict(spec: AlgebraSpec) -> dict:
    """Serialize back to the file schema (i <= j brackets only)."""
    n = spec.n
    out_brackets = []
    for i in range(n):
        for j in range(i, n):
            if i == j and spec.degrees[i] == 0:
                continue
            coeffs = spec.brackets[i][j]
            result = [[str(c), m] for m, c in enumerate(coeffs) if c]
            if result:
                out_brackets.append({"left": i, "right": j, "result": result})
    return {
        "name": spec.name,
        "basis": [{"name": nm, "degree": d}
                  for nm, d in zip(spec.basis_names, spec.degrees)],
        "alpha": [[str(spec.alpha.at(r, c)) for c in range(n)]
                  for r in range(n)],
        "brackets": out_brackets,
    }


def write_algebra(spec: AlgebraSpec, path) -> None:
    Path(path).write_text(json.dumps(algebra_to_dict(spec), indent=2) + "\n")


def parse_map_tuple(path, n: int, count: int) -> tuple[GradedMap, ...]:
    """Read a tuple of n x n maps sharing one degree from a JSON file.

    Schema: {"degree": 0 or 1, "maps": [matrix, ...]} with each matrix
    an n x n array of rational strings or integers.
    """
    p = Path(path)
    try:
        doc = json.loads(p.read_text())
    except OSError as exc:
        raise AlgebraFileError(f"{path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(
            f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(doc, dict):
        raise AlgebraFileError(f"{path}: top level must be an object")
    degree = doc.get("degree", 0)
    if degree not in (0, 1):
        raise AlgebraFileError(f"{path}: 'degree' must be 0 or 1")
    maps = doc.get("maps")
    if not isinstance(maps, list) or len(maps) != count:
        raise AlgebraFileError(f"{path}: 'maps' must list exactly {count} matrices")
    out = []
    for m_idx, rows in enumerate(maps):
        where = f"{path}: maps[{m_idx}]"
        if (not isinstance(rows, list) or len(rows) != n
                or any(not isinstance(r, list) or len(r) != n for r in rows)):
            raise AlgebraFileError(f"{where}: must be an {n}x{n} array")
        mat = Matrix.from_rows(
            [[_rat(x, f"{where}[{r}][{c}]") for c, x in enumerate(row)]
             for r, row in enumerate(rows)], n)
        out.append(GradedMap(mat, degree))
    return tuple(out)
