"""Problem documents: JSON files declaring fields, Hopf algebras, operators and varieties by name.

A document is validated against ``schema/problem.schema.json`` and its declarations are resolved lazily and cached,
so a command only builds what it references. Every error names the offending key path, e.g.
``hopf.mu3.good_basis``.
"""

import json
import logging
import os

import jsonschema

from .errors import DocumentError, PyHopfError
from .fields import QQ, GF, extension, linalg
from .hopf import base_change, build_hopf, change_basis, get_builtin, good_basis, product
from .gsa import OperatorSpec
from .poly import PolyRing
from .prolong import Variety, default_names

logger = logging.getLogger(__name__)

SCHEMA_PATH = os.path.join(os.path.dirname(__file__), "schema", "problem.schema.json")
SCHEMA_VERSION = 1

_schema = None


def get_schema():
    global _schema
    if _schema is None:
        with open(SCHEMA_PATH, "r", encoding="utf-8") as f:
            _schema = json.load(f)
    return _schema


def _key_path(parts):
    path = ""
    for p in parts:
        path += f"[{p}]" if isinstance(p, int) else (f".{p}" if path else str(p))
    return path or "<document>"


def validate(data):
    """Validate ``data`` against the problem schema.

    :raises DocumentError: for the first error, ordered by key path.
    """
    validator = jsonschema.Draft7Validator(get_schema())
    errors = sorted(validator.iter_errors(data), key=lambda e: [str(p) for p in e.absolute_path])
    if errors:
        err = errors[0]
        raise DocumentError(f"{_key_path(err.absolute_path)}: {err.message}")


class ProblemDocument:
    """A validated problem document with name resolution.

    :param data: the parsed JSON object.
    :param source: file name, for messages.
    """

    SECTIONS = ("fields", "hopf", "operators", "varieties")

    def __init__(self, data, source=None):
        validate(data)
        self.data = data
        self.source = source
        self._cache = {section: {} for section in self.SECTIONS}
        self._resolving = set()

    @classmethod
    def load(cls, file):
        try:
            with open(file, "r", encoding="utf-8") as f:
                data = json.load(f)
        except json.JSONDecodeError as e:
            raise DocumentError(f"{file} is not valid JSON: {e}") from None
        return cls(data, source=file)

    @classmethod
    def loads(cls, text):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise DocumentError(f"Document is not valid JSON: {e}") from None
        return cls(data)

    def payload(self, command):
        if command not in self.data:
            raise DocumentError(f"{command}: the document has no payload for this command")
        return self.data[command]

    def _declaration(self, section, name, path):
        decls = self.data.get(section, {})
        if name not in decls:
            raise DocumentError(f"{path}: unknown {section} entry {name!r}")
        return decls[name]

    def _resolve(self, section, name, path, build):
        cache = self._cache[section]
        if name in cache:
            return cache[name]
        decl = self._declaration(section, name, path)
        key = (section, name)
        if key in self._resolving:
            raise DocumentError(f"{section}.{name}: circular reference")
        self._resolving.add(key)
        try:
            obj = build(name, decl, f"{section}.{name}")
        except DocumentError:
            raise
        except PyHopfError as e:
            if isinstance(e, (ValueError, ArithmeticError)):
                raise DocumentError(f"{section}.{name}: {e}") from e
            raise
        finally:
            self._resolving.discard(key)
        cache[name] = obj
        logger.debug(f"resolved {section}.{name}")
        return obj

    # fields
    # ======
    def field(self, name, path="fields"):
        return self._resolve("fields", name, path, self._build_field)

    def _build_field(self, name, decl, path):
        kind = decl["type"]
        if kind == "rationals":
            return QQ
        if kind == "prime":
            if "p" not in decl:
                raise DocumentError(f"{path}.p: a prime field needs p")
            return GF(decl["p"])
        for key in ("base", "name", "minpoly"):
            if key not in decl:
                raise DocumentError(f"{path}.{key}: an extension needs {key}")
        base = self.field(decl["base"], f"{path}.base")
        return extension(base, decl["name"], decl["minpoly"])

    # Hopf algebras
    # =============
    def hopf(self, name, path="hopf"):
        return self._resolve("hopf", name, path, self._build_hopf)

    def _matrix(self, rows, field, path):
        try:
            return linalg.as_matrix(rows, field=field)
        except PyHopfError as e:
            raise DocumentError(f"{path}: {e}") from e

    def _build_hopf(self, name, decl, path):
        if "builtin" in decl:
            field = self._require_field(decl, path)
            params = dict(decl.get("params", {}))
            try:
                h = get_builtin(decl["builtin"], field, **params)
            except KeyError as e:
                raise DocumentError(f"{path}.builtin: {e.args[0]}") from None
            except TypeError as e:
                raise DocumentError(f"{path}.params: {e}") from None
        elif "product" in decl:
            h1 = self.hopf(decl["product"][0], f"{path}.product[0]")
            h2 = self.hopf(decl["product"][1], f"{path}.product[1]")
            h = product(h1, h2)
        elif "base_change" in decl:
            h = self.hopf(decl["base_change"], f"{path}.base_change")
            h = base_change(h, self._require_field(decl, path))
        else:
            missing = [k for k in ("mult", "comult", "counit", "unit") if k not in decl]
            if missing:
                raise DocumentError(f"{path}: needs builtin, product, base_change or the tensors "
                                    f"({', '.join(missing)} missing)")
            field = self._require_field(decl, path)
            h = build_hopf(field, decl["mult"], decl["comult"], decl["counit"], decl["unit"],
                           antipode=decl.get("antipode"), basis_names=decl.get("basis_names"))
        if "basis" in decl:
            h = change_basis(h, self._matrix(decl["basis"], h.field, f"{path}.basis"))
        gb = decl.get("good_basis", False)
        if gb is True:
            h, _ = good_basis(h)
        elif gb:
            h, _ = good_basis(h, candidate=self._matrix(gb, h.field, f"{path}.good_basis"))
        h.metadata.setdefault("name", name)
        return h

    def _require_field(self, decl, path):
        if "field" not in decl:
            raise DocumentError(f"{path}.field: missing")
        return self.field(decl["field"], f"{path}.field")

    # operators and varieties
    # =======================
    def operator(self, name, path="operators"):
        return self._resolve("operators", name, path, self._build_operator)

    def _build_operator(self, name, decl, path):
        h = self.hopf(decl["hopf"], f"{path}.hopf")
        carrier = decl["carrier"]
        field = self.field(carrier["field"], f"{path}.carrier.field")
        coefficient_action = None
        if "coefficient_action" in decl:
            coefficient_action = self.operator(decl["coefficient_action"], f"{path}.coefficient_action")
        if "variables" in carrier:
            ring = PolyRing(field, carrier["variables"])
            return OperatorSpec(h, ring, decl["images"], relations=carrier.get("relations", []),
                                coefficient_action=coefficient_action, name=name)
        if "relations" in carrier:
            raise DocumentError(f"{path}.carrier.relations: field carriers take no relations")
        return OperatorSpec(h, field, decl["images"], name=name)

    def variety(self, name, path="varieties"):
        return self._resolve("varieties", name, path, self._build_variety)

    def _build_variety(self, name, decl, path):
        h = self.hopf(decl["hopf"], f"{path}.hopf")
        field = self.field(decl["field"], f"{path}.field")
        if "variables" in decl:
            names = decl["variables"]
        elif "n" in decl:
            names = default_names(decl["n"])
        else:
            raise DocumentError(f"{path}: needs variables or n")
        field_action = None
        if "field_action" in decl:
            field_action = self.operator(decl["field_action"], f"{path}.field_action")
        return Variety(h, PolyRing(field, names), decl.get("equations", []), field_action=field_action)


def load(file):
    return ProblemDocument.load(file)
