"""JSON readers and writers shared by the library and the command line."""

from __future__ import annotations

import json

from .errors import DomainError, FormatError
from .lsections import RespectfulTree
from .trees import LEAF, OrderedTree
from .transformations import CrossSection, GreenRelation, Transformation


def _need(doc, key, where):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"{where}: missing field {key!r}")
    return doc[key]


def _int(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise FormatError(f"{where}: expected an integer, got {value!r}")
    return value


# -- transformations ------------------------------------------------------------

def transformation_to_json(a):
    return {"n": a.n, "images": list(a.images)}


def transformation_from_json(doc, where="transformation"):
    n = _int(_need(doc, "n", where), where + ".n")
    images = _need(doc, "images", where)
    if not isinstance(images, list) or len(images) != n:
        raise FormatError(f"{where}.images: expected a list of {n} points")
    try:
        return Transformation(tuple(_int(y, f"{where}.images") for y in images))
    except DomainError as exc:
        raise FormatError(f"{where}: {exc}") from None


def cross_section_to_json(S):
    return {
        "n": S.n,
        "relation": S.relation.value,
        "elements": [transformation_to_json(a) for a in S.sorted()],
    }


def cross_section_from_json(doc, where="cross-section"):
    n = _int(_need(doc, "n", where), where + ".n")
    try:
        relation = GreenRelation(_need(doc, "relation", where))
    except ValueError:
        raise FormatError(f"{where}.relation: must be one of R, L, H, D") from None
    elems = _need(doc, "elements", where)
    if not isinstance(elems, list):
        raise FormatError(f"{where}.elements: expected a list")
    out = [transformation_from_json(e, f"{where}.elements[{i}]") for i, e in enumerate(elems)]
    for i, a in enumerate(out):
        if a.n != n:
            raise FormatError(f"{where}.elements[{i}]: has {a.n} points, expected {n}")
    return CrossSection(n, out, relation)


# -- ordered trees --------------------------------------------------------------

def tree_to_json(t):
    nodes = {}
    for v in range(1, t.n + 1):
        entry = {}
        if t.son[v] is not None:
            entry["son"] = t.son[v]
        if t.daughter[v] is not None:
            entry["daughter"] = t.daughter[v]
        if entry:
            nodes[str(v)] = entry
    return {"n": t.n, "root": t.root, "nodes": nodes}


def tree_from_json(doc, where="tree"):
    n = _int(_need(doc, "n", where), where + ".n")
    root = _int(_need(doc, "root", where), where + ".root")
    nodes = doc.get("nodes", {})
    if not isinstance(nodes, dict):
        raise FormatError(f"{where}.nodes: expected an object")
    sons, daughters = {}, {}
    for key, entry in nodes.items():
        try:
            v = int(key)
        except ValueError:
            raise FormatError(f"{where}.nodes: key {key!r} is not a label") from None
        if not isinstance(entry, dict):
            raise FormatError(f"{where}.nodes.{key}: expected an object")
        extra = set(entry) - {"son", "daughter"}
        if extra:
            raise FormatError(f"{where}.nodes.{key}: unknown fields {sorted(extra)}")
        if "son" in entry:
            sons[v] = _int(entry["son"], f"{where}.nodes.{key}.son")
        if "daughter" in entry:
            daughters[v] = _int(entry["daughter"], f"{where}.nodes.{key}.daughter")
    try:
        return OrderedTree.from_children(n, root, sons, daughters)
    except DomainError as exc:
        raise FormatError(f"{where}: {exc}") from None


# -- respectful trees -----------------------------------------------------------

def _vkey(points):
    return f"{points[0]}-{points[-1]}"


def respectful_to_json(g):
    mark = g.marking()
    vertices = {}
    for path, pts in mark.items():
        entry = {"marking": list(pts)}
        if path + "s" in mark:
            entry["son"] = _vkey(mark[path + "s"])
            entry["daughter"] = _vkey(mark[path + "d"])
        vertices[_vkey(pts)] = entry
    out = {"n": g.n, "root": _vkey(mark[""]), "vertices": vertices}
    if g.order != tuple(range(1, g.n + 1)):
        out["order"] = list(g.order)
    return out


def respectful_from_json(doc, where="respectful tree"):
    n = _int(_need(doc, "n", where), where + ".n")
    root = _need(doc, "root", where)
    vertices = _need(doc, "vertices", where)
    order = doc.get("order")
    if not isinstance(vertices, dict):
        raise FormatError(f"{where}.vertices: expected an object")
    seen = set()

    def build(key):
        if key not in vertices:
            raise FormatError(f"{where}.vertices: no vertex {key!r}")
        if key in seen:
            raise FormatError(f"{where}.vertices: {key!r} reached twice")
        seen.add(key)
        entry = vertices[key]
        has = ("son" in entry, "daughter" in entry)
        if has == (False, False):
            return LEAF
        if has != (True, True):
            raise FormatError(f"{where}.vertices.{key}: needs both children or none")
        return (build(entry["son"]), build(entry["daughter"]))

    shape = build(root)
    if seen != set(vertices):
        raise FormatError(f"{where}.vertices: unreachable {sorted(set(vertices) - seen)}")
    try:
        g = RespectfulTree(shape, order)
    except DomainError as exc:
        raise FormatError(f"{where}: {exc}") from None
    if g.n != n:
        raise FormatError(f"{where}: tree has {g.n} leaves, n says {n}")
    mark = g.marking()
    for key, entry in vertices.items():
        if "marking" in entry and _vkey(entry["marking"]) != key:
            raise FormatError(f"{where}.vertices.{key}: marking disagrees with its key")
    if {_vkey(p) for p in mark.values()} != set(vertices):
        raise FormatError(f"{where}: vertex keys are not the faithful marking")
    return g


# -- files ----------------------------------------------------------------------

def load_json(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise FormatError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def dumps(doc):
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"
