"""
Input Document Module
JSON description of a structure (symbols, brackets, metric, phi, xi, eta and
an optional normal section), with field-level validation and export
"""

import json
import logging
import re
from dataclasses import dataclass, field

import config
import linalg
from errors import ParseError, ValidationError
from geometry import AlmostContactData, AmbientSpace, LieAlgebraFrame, NordenMetric
from scalar import SymbolTable
from submanifold import NormalSection

logger = logging.getLogger(__name__)

_PAIR = re.compile(r"^\s*(\d+)\s*,\s*(\d+)\s*$")
INDUCE_CASES = ("auto", "non_orthogonal", "orthogonal")


@dataclass
class InduceOptions:
    """Parameters for the induced structure; None means the library default"""

    case: str = "auto"
    epsilon: int = config.DEFAULT_EPSILON
    branch: str = config.DEFAULT_BRANCH
    t0: str = None
    t2: str = None
    k: str = None

    def to_dict(self):
        out = {"case": self.case, "epsilon": self.epsilon, "branch": self.branch}
        for key in ("t0", "t2", "k"):
            if getattr(self, key) is not None:
                out[key] = getattr(self, key)
        return out


@dataclass
class InputDocument:
    """A parsed, validated input document with its built objects"""

    name: str
    table: SymbolTable
    space: AmbientSpace
    section: NormalSection = None
    induce: InduceOptions = None
    raw: dict = field(default_factory=dict)


def _require(data, key, kind, where=""):
    path = f"{where}.{key}" if where else key
    if key not in data:
        raise ValidationError("missing required field", field=path)
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise ValidationError(f"expected {getattr(kind, '__name__', kind)}", field=path)
    return value


def _square(rows, n, path):
    if not isinstance(rows, list) or len(rows) != n or any(
        not isinstance(row, list) or len(row) != n for row in rows
    ):
        raise ValidationError(f"expected a {n} x {n} array", field=path)


def _flat(values, n, path):
    if not isinstance(values, list) or len(values) != n:
        raise ValidationError(f"expected {n} entries", field=path)


def load_document(path):
    """
    Read and validate a JSON input file

    Raises:
        ParseError: unreadable file or malformed JSON (with line and column)
        ValidationError: schema violations (with the offending field)
    """
    try:
        with open(path, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return parse_document(data)


def parse_document(data):
    """
    Validate a decoded JSON document and build the ambient space

    Args:
        data: dict following the input schema

    Returns:
        InputDocument
    """
    if not isinstance(data, dict):
        raise ValidationError("top level must be a JSON object")

    symbols = data.get("symbols", [])
    if not isinstance(symbols, list) or not all(isinstance(s, str) for s in symbols):
        raise ValidationError("expected a list of symbol names", field="symbols")
    relations = {}
    for i, rel in enumerate(data.get("relations", [])):
        where = f"relations[{i}]"
        if not isinstance(rel, dict):
            raise ValidationError("expected an object {symbol, square}", field=where)
        name = _require(rel, "symbol", str, where)
        if name in relations:
            raise ValidationError(f"second relation for {name}", field=where)
        square = rel.get("square")
        if not isinstance(square, (str, int)) or isinstance(square, bool):
            raise ValidationError("expected an expression", field=f"{where}.square")
        relations[name] = str(square)
    table = SymbolTable(symbols, relations)

    n = _require(data, "dim", int)
    if n < 1:
        raise ValidationError("dimension must be positive", field="dim")
    basis = data.get("basis") or [f"e{i + 1}" for i in range(n)]
    _flat(basis, n, "basis")
    if len(set(basis)) != n:
        raise ValidationError("basis names must be unique", field="basis")

    upper = {}
    brackets = data.get("brackets", {})
    if not isinstance(brackets, dict):
        raise ValidationError("expected an object keyed by \"i,j\"", field="brackets")
    for key, values in brackets.items():
        path = f"brackets[{key}]"
        match = _PAIR.match(key)
        if not match:
            raise ValidationError("keys must look like \"i,j\" with 1-based indices", field=path)
        i, j = int(match.group(1)), int(match.group(2))
        if not 1 <= i < j <= n:
            raise ValidationError(f"need 1 <= i < j <= {n}", field=path)
        _flat(values, n, path)
        upper[(i - 1, j - 1)] = linalg.from_strings(values, table, field=path)
    frame = LieAlgebraFrame.from_upper(table, basis, upper)

    _square(data.get("metric"), n, "metric")
    metric = NordenMetric(linalg.from_strings(data["metric"], table, field="metric"))
    _square(data.get("phi"), n, "phi")
    _flat(data.get("xi"), n, "xi")
    _flat(data.get("eta"), n, "eta")
    structure = AlmostContactData(
        phi=linalg.from_strings(data["phi"], table, field="phi"),
        xi=linalg.from_strings(data["xi"], table, field="xi"),
        eta=linalg.from_strings(data["eta"], table, field="eta"),
    )
    name = data.get("name", "")
    space = AmbientSpace(frame, metric, structure, name=name)

    section, induce = None, None
    if "section" in data:
        section, induce = _parse_section(data["section"], table, n)
    logger.info("parsed document %r: dim %d, %d symbols", name, n, len(symbols))
    return InputDocument(name, table, space, section, induce, raw=data)


def _parse_section(block, table, n):
    if not isinstance(block, dict):
        raise ValidationError("expected an object", field="section")
    _flat(block.get("n1"), n, "section.n1")
    _flat(block.get("n2"), n, "section.n2")
    tangent = block.get("tangent", [])
    if not isinstance(tangent, list):
        raise ValidationError("expected a list of vectors", field="section.tangent")
    vectors = []
    for i, vec in enumerate(tangent):
        path = f"section.tangent[{i}]"
        _flat(vec, n, path)
        vectors.append(linalg.from_strings(vec, table, field=path))
    names = block.get("tangent_names")
    if names is not None:
        _flat(names, len(vectors), "section.tangent_names")
    section = NormalSection(
        linalg.from_strings(block["n1"], table, field="section.n1"),
        linalg.from_strings(block["n2"], table, field="section.n2"),
        vectors,
        names,
    )

    induce = None
    if "induce" in block:
        opts = block["induce"]
        if not isinstance(opts, dict):
            raise ValidationError("expected an object", field="section.induce")
        induce = InduceOptions(
            case=opts.get("case", "auto"),
            epsilon=opts.get("epsilon", config.DEFAULT_EPSILON),
            branch=opts.get("branch", config.DEFAULT_BRANCH),
            t0=opts.get("t0"),
            t2=opts.get("t2"),
            k=opts.get("k"),
        )
        if induce.case not in INDUCE_CASES:
            raise ValidationError(f"case must be one of {INDUCE_CASES}", field="section.induce.case")
        if induce.epsilon not in (1, -1) or isinstance(induce.epsilon, bool):
            raise ValidationError("epsilon must be 1 or -1", field="section.induce.epsilon")
        if induce.branch not in config.BRANCHES:
            raise ValidationError(f"branch must be one of {config.BRANCHES}",
                                  field="section.induce.branch")
        for key in ("t0", "t2", "k"):
            value = getattr(induce, key)
            if value is not None:
                table.parse(str(value), field=f"section.induce.{key}")
    return section, induce


def export_document(space, section=None, induce=None):
    """
    Serialize a space (and optionally a section with induction options) to the
    input schema; parse_document on the result rebuilds an equal space

    Returns:
        dict ready for json.dumps
    """
    table = space.table
    data = {
        "name": space.name,
        "symbols": list(table.symbols),
        "relations": [{"symbol": sym, "square": rhs} for sym, rhs in table.relations().items()],
        "dim": space.dim,
        "basis": list(space.basis),
        "brackets": {
            f"{i + 1},{j + 1}": linalg.to_strings(vec)
            for (i, j), vec in space.frame.upper_items()
            if not linalg.all_zero(vec)
        },
        "metric": linalg.to_strings(space.metric.matrix),
        "phi": linalg.to_strings(space.structure.phi),
        "xi": linalg.to_strings(space.structure.xi),
        "eta": linalg.to_strings(space.structure.eta),
    }
    if section is not None:
        block = {
            "n1": linalg.to_strings(section.n1),
            "n2": linalg.to_strings(section.n2),
            "tangent": [linalg.to_strings(t) for t in section.tangent],
            "tangent_names": list(section.tangent_names),
        }
        if induce is not None:
            block["induce"] = induce.to_dict()
        data["section"] = block
    return data


def export_bundle(bundle, induce=None):
    """Input document for a catalog example"""
    return export_document(bundle.space, bundle.section, induce or InduceOptions())


def dumps(data):
    return json.dumps(data, indent=2, ensure_ascii=False)
