"""JSON model descriptions: named algebras, forms, involutions, crossings, bimodules.

The file is a single JSON object with up to five sections, each mapping a
name to a constructor spec.  Later sections refer to earlier ones by name.
Scalars are strings in the exact-scalar grammar; numbers are accepted for
integers.  Parsing validates every entry through the real constructors, so
a model that parses is a model whose axioms hold (crossings excepted: they
are built but their verification report is left to the caller).

Sections and specs:

  algebras     {"kind": "matrix", "n": 2, "ring": "C"}
               {"kind": "group", "group": {"type": "cyclic", "n": 4}}
                 group types: cyclic {n}, abelian {orders}, symmetric {n},
                 quaternion {}.  Abelian group algebras are graded by their
                 own coordinates unless "graded": false.
               {"kind": "direct_sum", "parts": ["a", "b"]}
               Any entry may carry "grading": {"orders": [...], "grades": [[...]]}.
  frobenius    {"algebra": "a", "family": "fhk" | "group" | "from_element",
                "R": "1/2", "x": ["...", ...]}   (x only for from_element)
  involutions  {"frobenius": "f", "kind": "transpose" | "hermitian" |
                "quaternionic" | "inverse" | "conjugated",
                "s": ["...", ...], "base": "transpose"}
  crossings    {"frobenius": "f", "kind": "canonical"}
               {"frobenius": "f", "kind": "bicharacter", "values": [["-1"]]}
  bimodules    {"frobenius": "f", "kind": "regular", "sign": "-1"}
               {"frobenius": "f", "kind": "explicit", "sign": "1",
                "left": [...], "right": [...], "p_inv": [...], "q_inv": [...]}
"""

import json

from .algebra import Grading, direct_sum, group_algebra, matrix_algebra
from .defects import BimoduleData, regular_bimodule, require_bimodule
from .errors import InputError
from .frobenius import frobenius_standard
from .groups import cyclic_table, product_table, quaternion_table, symmetric_table
from .involution import standard_involution
from .scalars import parse_scalar
from .spin import Bicharacter, bicharacter_crossing, canonical_crossing

SECTIONS = ("algebras", "frobenius", "involutions", "crossings", "bimodules")


class ModelFile:
    """Parsed model: built objects per section plus the normalized spec."""

    def __init__(self, spec, algebras, frobenius, involutions, crossings, bimodules):
        self.spec = spec
        self.algebras = algebras
        self.frobenius = frobenius
        self.involutions = involutions
        self.crossings = crossings
        self.bimodules = bimodules

    def __repr__(self):
        return "ModelFile(%s)" % ", ".join(
            "%s=%d" % (s, len(getattr(self, s))) for s in SECTIONS
        )


def _scalar(raw, where):
    if isinstance(raw, int):
        raw = str(raw)
    if not isinstance(raw, str):
        raise InputError("%s: expected a scalar string, got %r" % (where, raw))
    try:
        return parse_scalar(raw)
    except (InputError, ValueError) as e:
        raise InputError("%s: %s" % (where, e)) from None


def _scalar_list(raw, where):
    if not isinstance(raw, list):
        raise InputError("%s: expected a list of scalars" % where)
    return [_scalar(v, where) for v in raw]


def _norm_scalar(raw, where):
    return _scalar(raw, where).serialize()


def _require_keys(entry, where, required, optional=()):
    if not isinstance(entry, dict):
        raise InputError("%s: expected an object" % where)
    for key in required:
        if key not in entry:
            raise InputError("%s: missing field %r" % (where, key))
    for key in entry:
        if key not in required and key not in optional:
            raise InputError("%s: unknown field %r" % (where, key))


def _group_table(spec, where):
    _require_keys(spec, where, ("type",), ("n", "orders"))
    gt = spec["type"]
    if gt == "cyclic":
        if "n" not in spec:
            raise InputError("%s: cyclic groups need n" % where)
        return cyclic_table(int(spec["n"])), (int(spec["n"]),)
    if gt == "abelian":
        orders = tuple(int(v) for v in spec.get("orders", ()))
        if not orders:
            raise InputError("%s: abelian groups need orders" % where)
        table = None
        for n in orders:
            t = cyclic_table(n)
            table = t if table is None else product_table(table, t)
        return table, orders
    if gt == "symmetric":
        if "n" not in spec:
            raise InputError("%s: symmetric groups need n" % where)
        return symmetric_table(int(spec["n"])), None
    if gt == "quaternion":
        return quaternion_table()[0], None
    raise InputError("%s: unknown group type %r" % (where, gt))


def _self_grading(orders):
    size = 1
    for n in orders:
        size *= n
    grades = []
    for idx in range(size):
        rest = idx
        coord = []
        for n in reversed(orders):
            coord.append(rest % n)
            rest //= n
        grades.append(tuple(reversed(coord)))
    return Grading(orders, grades)


def _build_algebra(name, entry, algebras):
    where = "algebra %r" % name
    _require_keys(entry, where, ("kind",), ("n", "ring", "group", "parts", "grading", "graded"))
    kind = entry["kind"]
    if kind == "matrix":
        for key in ("n", "ring"):
            if key not in entry:
                raise InputError("%s: matrix algebras need %r" % (where, key))
        alg = matrix_algebra(int(entry["n"]), entry["ring"])
    elif kind == "group":
        if "group" not in entry:
            raise InputError("%s: group algebras need a group spec" % where)
        table, orders = _group_table(entry["group"], where)
        alg = group_algebra(table, name=name)
        if orders is not None and entry.get("graded", True):
            alg.grading = _self_grading(orders)
            alg.grading.validate(alg)
    elif kind == "direct_sum":
        parts = entry.get("parts")
        if not parts:
            raise InputError("%s: direct sums need parts" % where)
        missing = [p for p in parts if p not in algebras]
        if missing:
            raise InputError("%s: unresolved algebra reference %r" % (where, missing[0]))
        alg = direct_sum(*[algebras[p] for p in parts], name=name)
    else:
        raise InputError("%s: unknown kind %r" % (where, kind))
    if "grading" in entry:
        g = entry["grading"]
        _require_keys(g, where + " grading", ("orders", "grades"))
        alg.grading = Grading(
            tuple(int(v) for v in g["orders"]),
            [tuple(int(v) for v in gr) for gr in g["grades"]],
        )
        try:
            alg.grading.validate(alg)
        except ValueError as e:
            raise InputError("%s: %s" % (where, e)) from None
    return alg


def _build_frobenius(name, entry, algebras):
    where = "frobenius %r" % name
    _require_keys(entry, where, ("algebra", "family", "R"), ("x",))
    ref = entry["algebra"]
    if ref not in algebras:
        raise InputError("%s: unresolved algebra reference %r" % (where, ref))
    alg = algebras[ref]
    R = _scalar(entry["R"], where + " field R")
    x = None
    if entry["family"] == "from_element":
        if "x" not in entry:
            raise InputError("%s: from_element needs x" % where)
        coeffs = _scalar_list(entry["x"], where + " field x")
        if len(coeffs) != alg.dim:
            raise InputError("%s: x needs %d coefficients" % (where, alg.dim))
        x = alg.element(coeffs)
    elif "x" in entry:
        raise InputError("%s: x is only meaningful with from_element" % where)
    try:
        return frobenius_standard(alg, entry["family"], R, x=x)
    except InputError as e:
        raise InputError("%s: %s" % (where, e)) from None


def _build_involution(name, entry, frobenius):
    where = "involution %r" % name
    _require_keys(entry, where, ("frobenius", "kind"), ("s", "base"))
    ref = entry["frobenius"]
    if ref not in frobenius:
        raise InputError("%s: unresolved frobenius reference %r" % (where, ref))
    F = frobenius[ref]
    s = None
    if "s" in entry:
        coeffs = _scalar_list(entry["s"], where + " field s")
        if len(coeffs) != F.algebra.dim:
            raise InputError("%s: s needs %d coefficients" % (where, F.algebra.dim))
        s = F.algebra.element(coeffs)
    try:
        return standard_involution(F, entry["kind"], s=s, base=entry.get("base"))
    except InputError as e:
        raise InputError("%s: %s" % (where, e)) from None


def _build_crossing(name, entry, frobenius):
    where = "crossing %r" % name
    _require_keys(entry, where, ("frobenius", "kind"), ("values",))
    ref = entry["frobenius"]
    if ref not in frobenius:
        raise InputError("%s: unresolved frobenius reference %r" % (where, ref))
    F = frobenius[ref]
    kind = entry["kind"]
    if kind == "canonical":
        if "values" in entry:
            raise InputError("%s: values belong to bicharacter crossings" % where)
        return canonical_crossing(F)
    if kind != "bicharacter":
        raise InputError("%s: unknown kind %r" % (where, kind))
    if F.algebra.grading is None:
        raise InputError("%s: bicharacter crossings need a graded algebra" % where)
    values = entry.get("values")
    if not isinstance(values, list):
        raise InputError("%s: bicharacter crossings need a values matrix" % where)
    parsed = [_scalar_list(row, where + " values") for row in values]
    try:
        bc = Bicharacter(F.algebra.grading.orders, parsed)
        return bicharacter_crossing(F, bc)
    except InputError as e:
        raise InputError("%s: %s" % (where, e)) from None


def _build_bimodule(name, entry, frobenius):
    where = "bimodule %r" % name
    _require_keys(
        entry, where, ("frobenius",), ("kind", "sign", "left", "right", "p_inv", "q_inv")
    )
    ref = entry["frobenius"]
    if ref not in frobenius:
        raise InputError("%s: unresolved frobenius reference %r" % (where, ref))
    F = frobenius[ref]
    sign = _scalar(entry.get("sign", "1"), where + " field sign")
    kind = entry.get("kind", "regular")
    if kind == "regular":
        try:
            return regular_bimodule(F, sign)
        except InputError as e:
            raise InputError("%s: %s" % (where, e)) from None
    if kind != "explicit":
        raise InputError("%s: unknown kind %r" % (where, kind))
    for key in ("left", "right", "p_inv", "q_inv"):
        if key not in entry:
            raise InputError("%s: explicit bimodules need %r" % (where, key))

    def cube(raw, label):
        return [[_scalar_list(row, "%s field %s" % (where, label)) for row in plane] for plane in raw]

    left = cube(entry["left"], "left")
    right = cube(entry["right"], "right")
    p_inv = [_scalar_list(row, where + " field p_inv") for row in entry["p_inv"]]
    q_inv = [_scalar_list(row, where + " field q_inv") for row in entry["q_inv"]]
    dim = len(p_inv)
    try:
        V = BimoduleData(F, dim, left, right, p_inv, q_inv, sign)
    except InputError as e:
        raise InputError("%s: %s" % (where, e)) from None
    require_bimodule(V)
    return V


def _normalize(entry, name, section):
    """Re-serialize scalar fields so printing is a fixed point of parsing."""
    out = {}
    where = "%s %r" % (section[:-1] if section != "frobenius" else section, name)
    for key, value in entry.items():
        if key in ("R", "sign"):
            out[key] = _norm_scalar(value, where)
        elif key in ("x", "s"):
            out[key] = [_norm_scalar(v, where) for v in value]
        elif key == "values":
            out[key] = [[_norm_scalar(v, where) for v in row] for row in value]
        elif key in ("p_inv", "q_inv"):
            out[key] = [[_norm_scalar(v, where) for v in row] for row in value]
        elif key in ("left", "right"):
            out[key] = [
                [[_norm_scalar(v, where) for v in row] for row in plane] for plane in value
            ]
        else:
            out[key] = value
    return out


def parse_model(text):
    """Parse and validate a model description; every entry is constructed."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(
            "model file syntax error at line %d, column %d: %s" % (e.lineno, e.colno, e.msg)
        ) from None
    if not isinstance(raw, dict):
        raise InputError("model file must be a JSON object")
    for key in raw:
        if key not in SECTIONS:
            raise InputError("unknown section %r" % key)

    spec = {}
    algebras = {}
    frobenius = {}
    involutions = {}
    crossings = {}
    bimodules = {}
    for section, builder, store, context in (
        ("algebras", _build_algebra, algebras, algebras),
        ("frobenius", _build_frobenius, frobenius, algebras),
        ("involutions", _build_involution, involutions, frobenius),
        ("crossings", _build_crossing, crossings, frobenius),
        ("bimodules", _build_bimodule, bimodules, frobenius),
    ):
        entries = raw.get(section, {})
        if not isinstance(entries, dict):
            raise InputError("section %r must map names to specs" % section)
        spec[section] = {}
        for name in sorted(entries):
            store[name] = builder(name, entries[name], context)
            spec[section][name] = _normalize(entries[name], name, section)
    return ModelFile(spec, algebras, frobenius, involutions, crossings, bimodules)


def print_model(model):
    """Canonical text form; parse(print(model)) reproduces the model."""
    return json.dumps(model.spec, indent=2, sort_keys=True) + "\n"


def load_model(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise InputError("cannot read model file: %s" % e) from None
    return parse_model(text)
