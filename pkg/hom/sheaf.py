from dataclasses import dataclass
from typing import ClassVar, Optional, Union

from errors import ParseError
from lattice import DivisorClass, K, genus_of_multiple, parse_divisor
from objects import ObjectKind


@dataclass(frozen=True)
class LineBundle:
    kind: ClassVar[ObjectKind] = ObjectKind.Line
    divisor: DivisorClass

    def twist(self, d: DivisorClass) -> 'LineBundle':
        return LineBundle(self.divisor + d)

    def twist_by_canonical(self) -> 'LineBundle':
        return self.twist(K())

    def __str__(self):
        return f"O({self.divisor})"


@dataclass(frozen=True)
class Skyscraper:
    kind: ClassVar[ObjectKind] = ObjectKind.Sky
    label: str = "x"

    def twist_by_canonical(self) -> 'Skyscraper':
        return self

    def __str__(self):
        return f"k({self.label})"


@dataclass(frozen=True)
class CurveSheaf:
    """Pushforward of a generic line bundle on a smooth curve C in |-nF|."""
    kind: ClassVar[ObjectKind] = ObjectKind.Curve
    n: int
    genus: Optional[int] = None
    degree: Optional[int] = None
    label: str = "C"

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"Invalid curve multiple n = {self.n}: |-nF| needs n >= 3")
        genus = genus_of_multiple(self.n) if self.genus is None else self.genus
        if genus < 0:
            raise ValueError(f"Invalid genus {genus}")
        object.__setattr__(self, "genus", genus)
        if self.degree is None:
            object.__setattr__(self, "degree", genus - 1)

    def twist_by_canonical(self) -> 'CurveSheaf':
        # L tensor omega restricted to C has degree deg L + K.C = deg L + 3n
        return CurveSheaf(n=self.n, genus=self.genus, degree=self.degree + 3 * self.n, label=self.label)

    def __str__(self):
        return f"G(n={self.n}, g={self.genus}, deg={self.degree}, {self.label})"


ObjectSpec = Union[LineBundle, Skyscraper, CurveSheaf]


def parse_object(text: str) -> ObjectSpec:
    """Parse ``line:<class>``, ``sky:<label>`` or ``curve:n=<n>[,deg=<e>][,g=<g>][,label=<s>]``."""
    kind, sep, body = text.strip().partition(":")
    if sep == "":
        raise ParseError(f"Invalid object {text!r}: expected line:, sky: or curve:")
    if kind == ObjectKind.Line.value:
        return LineBundle(parse_divisor(body))
    if kind == ObjectKind.Sky.value:
        return Skyscraper(body or "x")
    if kind == ObjectKind.Curve.value:
        fields = dict()
        for part in body.split(","):
            key, eq, value = part.strip().partition("=")
            if eq == "" or key not in ("n", "deg", "g", "label"):
                raise ParseError(f"Invalid curve field {part!r} in {text!r}")
            fields[key] = value
        if "n" not in fields:
            raise ParseError(f"Curve object {text!r} needs n=<n>")
        try:
            return CurveSheaf(n=int(fields["n"]),
                              genus=int(fields["g"]) if "g" in fields else None,
                              degree=int(fields["deg"]) if "deg" in fields else None,
                              label=fields.get("label", "C"))
        except ValueError as e:
            raise ParseError(str(e))
    raise ParseError(f"Invalid object kind {kind!r} in {text!r}")
