"""
Pydantic schemas for heredity data files.

An algebra file lists the poset as covering pairs, the colored sets X(i) and
Y(i) of every component, and the full multiplication table on B = {x*y}.
"""

import json
from pathlib import Path
from typing import Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from gschur.combinat.partitions import Poset
from gschur.core.errors import AlgebraFileError, HeredityDataError
from gschur.superalg.data import ColorSpec as ColorDeclaration
from gschur.superalg.data import HeredityData, initial_name

NamePair = Tuple[str, str]

# ============================================================================
# SCHEMAS
# ============================================================================


class ColorSpec(BaseModel):
    """One element of X(i) or Y(i)"""

    model_config = ConfigDict(populate_by_name=True)

    name: str = Field(..., min_length=1, description="Color name, unique within X or within Y")
    parity: Literal[0, 1] = Field(..., description="Z/2 degree of the color")
    left_idem: int = Field(
        ...,
        alias="leftIdem",
        description="Label j with e_j c = c, cross-checked against the table",
    )
    right_idem: Optional[int] = Field(
        None, alias="rightIdem", description="Label j with c e_j = c (Y colors)"
    )


class ComponentSpec(BaseModel):
    """Colored sets of one poset label"""

    i: int = Field(..., description="Poset label")
    X: List[ColorSpec] = Field(..., min_length=1, description="X(i), initial element first")
    Y: List[ColorSpec] = Field(..., min_length=1, description="Y(i), initial element first")

    @model_validator(mode="after")
    def check_initial(self) -> "ComponentSpec":
        initial = initial_name(self.i)
        for flavor, colors in (("X", self.X), ("Y", self.Y)):
            if colors[0].name != initial:
                raise ValueError(f"{flavor}({self.i}) must start with {initial}")
            if colors[0].parity != 0:
                raise ValueError(f"{initial} must be even")
        return self


class ProductSpec(BaseModel):
    """(x*y)(x'*y') = Σ coef (x''*y'')"""

    left: NamePair = Field(..., description="Left factor as [xName, yName]")
    right: NamePair = Field(..., description="Right factor as [xName, yName]")
    result: List[Tuple[int, NamePair]] = Field(
        default_factory=list, description="Terms [coef, [xName, yName]]; empty for zero"
    )


class AlgebraFile(BaseModel):
    """Complete heredity data of a based quasi-hereditary superalgebra"""

    name: str = Field(..., description="Display name")
    poset: List[Tuple[int, int]] = Field(
        default_factory=list, description="Covering pairs [i, j] meaning i < j"
    )
    components: List[ComponentSpec] = Field(..., min_length=1)
    products: List[ProductSpec] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_names(self) -> "AlgebraFile":
        labels = [c.i for c in self.components]
        if len(set(labels)) != len(labels):
            raise ValueError("component labels must be unique")
        for a, b in self.poset:
            if a not in labels or b not in labels:
                raise ValueError(f"covering pair [{a}, {b}] uses an unknown label")
        keys = {
            (x.name, y.name) for c in self.components for x in c.X for y in c.Y
        }
        for k, product in enumerate(self.products):
            for where, key in (("left", product.left), ("right", product.right)):
                if tuple(key) not in keys:
                    raise ValueError(
                        f"products[{k}].{where}: unknown basis element {key[0]}*{key[1]}"
                    )
            for t, (_, key) in enumerate(product.result):
                if tuple(key) not in keys:
                    raise ValueError(
                        f"products[{k}].result[{t}]: unknown basis element {key[0]}*{key[1]}"
                    )
        return self


# ============================================================================
# CONVERSION
# ============================================================================


def _declarations(colors: List[ColorSpec]) -> List[ColorDeclaration]:
    return [ColorDeclaration(c.name, c.parity, c.left_idem, c.right_idem) for c in colors]


def to_heredity_data(model: AlgebraFile) -> HeredityData:
    products: Dict[Tuple[NamePair, NamePair], Dict[NamePair, int]] = {}
    for product in model.products:
        key = (tuple(product.left), tuple(product.right))
        if key in products:
            raise AlgebraFileError(
                f"duplicate product {key[0][0]}*{key[0][1]} · {key[1][0]}*{key[1][1]}"
            )
        terms: Dict[NamePair, int] = {}
        for coef, name in product.result:
            terms[tuple(name)] = terms.get(tuple(name), 0) + coef
        products[key] = terms
    try:
        poset = Poset([c.i for c in model.components], model.poset)
        return HeredityData(
            model.name,
            poset,
            {c.i: _declarations(c.X) for c in model.components},
            {c.i: _declarations(c.Y) for c in model.components},
            products,
        )
    except (HeredityDataError, ValueError) as exc:
        raise AlgebraFileError(str(exc)) from exc


def from_heredity_data(A: HeredityData) -> AlgebraFile:
    """Table in basis order; zero products are written with an empty result."""
    components = []
    for label in A.poset.labels:
        X = [
            ColorSpec(
                name=x.name,
                parity=x.parity,
                left_idem=x.declared_left if x.declared_left is not None else A.left_idempotent(x),
                right_idem=x.declared_right,
            )
            for x in A.X[label]
        ]
        Y = [
            ColorSpec(
                name=y.name,
                parity=y.parity,
                left_idem=y.declared_left if y.declared_left is not None else label,
                right_idem=(
                    y.declared_right if y.declared_right is not None else A.right_idempotent(y)
                ),
            )
            for y in A.Y[label]
        ]
        components.append(ComponentSpec(i=label, X=X, Y=Y))
    products = []
    for a, left in enumerate(A.basis):
        for b, right in enumerate(A.basis):
            result = [(int(c), A.basis[k].key) for k, c in A.structure(a, b)]
            products.append(ProductSpec(left=left.key, right=right.key, result=result))
    return AlgebraFile(
        name=A.name,
        poset=[list(pair) for pair in A.poset.covers],
        components=components,
        products=products,
    )


# ============================================================================
# FILES
# ============================================================================


def _location(error: ValidationError) -> str:
    first = error.errors()[0]
    out = ""
    for part in first.get("loc", ()):
        out += f"[{part}]" if isinstance(part, int) else (f".{part}" if out else str(part))
    return out


def parse_algebra(text: str) -> AlgebraFile:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AlgebraFileError(f"invalid JSON: {exc.msg}", f"line {exc.lineno}") from exc
    try:
        return AlgebraFile.model_validate(raw)
    except ValidationError as exc:
        message = exc.errors()[0].get("msg", "invalid algebra file")
        raise AlgebraFileError(message, _location(exc) or None) from exc


def load_algebra(path: Union[str, Path]) -> HeredityData:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise AlgebraFileError(f"cannot read {path}: {exc.strerror}") from exc
    return to_heredity_data(parse_algebra(text))


def dump_algebra(data: Union[AlgebraFile, HeredityData]) -> str:
    """Canonical text: two-space JSON with a trailing newline."""
    model = data if isinstance(data, AlgebraFile) else from_heredity_data(data)
    payload = model.model_dump(mode="json", by_alias=True, exclude_none=True)
    return json.dumps(payload, indent=2) + "\n"


__all__ = [
    "AlgebraFile",
    "ColorSpec",
    "ComponentSpec",
    "ProductSpec",
    "dump_algebra",
    "from_heredity_data",
    "load_algebra",
    "parse_algebra",
    "to_heredity_data",
]
