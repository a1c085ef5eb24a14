"""Machine-readable transcriptions of the printed tables.

Each JSON file transcribes one theorem or proposition and carries a
``section`` tag naming it.  ``load_fixture("ak/F_A1")`` returns the parsed
content; the helpers below turn it into algebras, Lie algebras, matrices and
subspace families.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .. import linalg as la
from ..algebra import AlgebraWithInvolution
from ..analysis import FamilySpec
from ..field import GR, ZERO, as_gr

__all__ = [
    "UnknownFixture",
    "ParseError",
    "Fixture",
    "load_fixture",
    "fixture_names",
    "parse_linear",
    "expand_pm",
    "algebra_from_fixture",
    "lie_from_fixture",
    "generator_matrix",
    "linear_matrix",
    "subspace_families",
]


class UnknownFixture(KeyError):
    pass


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class Fixture:
    name: str
    section: str
    data: dict

    def __getitem__(self, key):
        return self.data[key]


def _root():
    return resources.files(__package__)


def fixture_names() -> list[str]:
    out = []
    for sub in sorted(p for p in _root().iterdir() if p.is_dir() and not p.name.startswith("_")):
        for f in sorted(sub.iterdir()):
            if f.name.endswith(".json"):
                out.append(f"{sub.name}/{f.name[:-5]}")
    return out


@lru_cache(maxsize=None)
def load_fixture(name: str) -> Fixture:
    if not re.fullmatch(r"[a-z_]+/[A-Za-z0-9_]+", name):
        raise UnknownFixture(name)
    folder, stem = name.split("/")
    path = _root().joinpath(folder).joinpath(stem + ".json")
    if not path.is_file():
        raise UnknownFixture(name)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name}: {exc}") from exc
    if "section" not in data:
        raise ParseError(f"{name}: missing section tag")
    _validate(name, data)
    return Fixture(name, data["section"], data)


def _validate(name: str, data: dict) -> None:
    kind = name.split("/")[0]
    try:
        if kind == "ak" or (kind == "levi" and "brackets" in data):
            dim = data["dim"]
            seen = {}
            for i, j, k, c in data["brackets"]:
                if not all(1 <= t <= dim for t in (i, j, k)) or i == j:
                    raise ParseError(f"{name}: bracket index out of range in {[i, j, k]}")
                key = (min(i, j), max(i, j), k)
                val = as_gr(c) if i < j else -as_gr(c)
                if key in seen and seen[key] != val:
                    raise ParseError(f"{name}: [{i},{j}] conflicts with its antisymmetric partner")
                seen[key] = val
            if "grades" in data and len(data["grades"]) != dim:
                raise ParseError(f"{name}: grading has the wrong length")
        elif kind == "algebras":
            dim = data["dim"]
            if len(data["involution_diagonal"]) != dim:
                raise ParseError(f"{name}: involution has the wrong size")
            for i, j, v in data["products"]:
                if not (1 <= i <= dim and 1 <= j <= dim) or len(v) != dim:
                    raise ParseError(f"{name}: product entry out of range")
                la.vec(v)
        elif kind == "levi" and "S" in data:
            for idx in data["S"] + data["R"]:
                if idx < 1:
                    raise ParseError(f"{name}: index {idx} out of range")
    except (TypeError, ValueError, KeyError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"{name}: {exc}") from exc


# -- expressions -----------------------------------------------------------------

_LIN_TERM = re.compile(r"^(?P<coef>(?:\d+(?:/\d+)?)?i?)\*?(?P<name>[a-z]{2,})?$")


def parse_linear(text: str) -> dict:
    """Parse ``"3*gamma"``, ``"alpha+beta"``, ``"-1/2i"`` into ``{name or None: coeff}``."""
    s = str(text).replace(" ", "")
    if not s:
        raise ParseError("empty expression")
    if s[0] not in "+-":
        s = "+" + s
    out: dict = {}
    for sign, body in re.findall(r"([+-])([^+-]+)", s):
        m = _LIN_TERM.match(body)
        if not m or not (m.group("coef") or m.group("name")):
            raise ParseError(f"cannot parse term {body!r} in {text!r}")
        coef = m.group("coef")
        if not coef:
            c = GR(1)
        elif coef == "i":
            c = GR(0, 1)
        elif coef.endswith("i"):
            c = as_gr(coef[:-1]) * GR(0, 1)
        else:
            c = as_gr(coef)
        if sign == "-":
            c = -c
        key = m.group("name")
        out[key] = out.get(key, ZERO) + c
    if "".join(re.findall(r"[+-][^+-]+", s)) != s:
        raise ParseError(f"cannot parse {text!r}")
    return out


def expand_pm(obj):
    """Both sign choices of a structure containing ``±``; one shared sign per structure."""
    text = json.dumps(obj, ensure_ascii=False)
    if "±" not in text:
        return [obj]
    return [json.loads(text.replace("±", "+").replace('"+', '"')),
            json.loads(text.replace("±", "-"))]


def linear_matrix(rows, values: dict) -> tuple:
    """Evaluate a matrix of linear expressions at ``values``."""
    out = []
    for row in rows:
        new = []
        for x in row:
            terms = parse_linear(x)
            v = ZERO
            for name, c in terms.items():
                v = v + (c if name is None else c * as_gr(values[name]))
            new.append(v)
        out.append(tuple(new))
    return tuple(out)


def generator_matrix(triples, dim: int = 3) -> tuple:
    """Matrix of the map with ``d(e_source) = sum coeff * e_target``."""
    m = [[ZERO] * dim for _ in range(dim)]
    for src, tgt, c in triples:
        m[tgt - 1][src - 1] = m[tgt - 1][src - 1] + as_gr(c)
    return tuple(tuple(r) for r in m)


# -- typed views -----------------------------------------------------------------

def algebra_from_fixture(label: str) -> AlgebraWithInvolution:
    d = load_fixture(f"algebras/{label}").data
    prods = {(i - 1, j - 1): v for i, j, v in d["products"]}
    return AlgebraWithInvolution.from_products(d["dim"], prods, d["involution_diagonal"], label)


def lie_from_fixture(name: str):
    from ..lie import LieAlgebra

    d = load_fixture(name).data
    return LieAlgebra.from_brackets(d["dim"], [(i - 1, j - 1, k - 1, c) for i, j, k, c in d["brackets"]])


def _vector_spec(entries) -> tuple:
    const = []
    dirs: dict = {}
    n = len(entries)
    for pos, x in enumerate(entries):
        terms = parse_linear(x)
        const.append(terms.pop(None, ZERO))
        for name, c in terms.items():
            dirs.setdefault(name, [ZERO] * n)[pos] = c
    return (la.vec(const), {k: la.vec(v) for k, v in dirs.items()})


def subspace_families(spaces, label: str = "") -> list[FamilySpec]:
    """FamilySpecs for printed spans, with ``±`` expanded into two families."""
    out = []
    for space in spaces:
        for variant in expand_pm(space):
            out.append(FamilySpec(tuple(_vector_spec(v) for v in variant), label))
    return out
