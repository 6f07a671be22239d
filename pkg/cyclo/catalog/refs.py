"""
Names of the catalog digraphs, matrices and signed graphs
"""

import logging
import re
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Sequence, Tuple, Union

from cyclo.exceptions import FormatError, ParamRange

logger = logging.getLogger(__name__)


class Family(Enum):
    """Catalog families; values are the names used on the command line"""
    DELTA1 = "Delta1"
    DELTAI = "DeltaI"
    SPORADIC = "Sporadic"
    DN = "Dn"
    CTILDE = "Ctilde"
    CTILDE1 = "Ctilde1"
    CTILDE2 = "Ctilde2"
    PATH = "Path"
    CYCLE = "Cycle"
    COMPLETE = "Complete"
    SQUARE = "Square"
    Y = "Y"
    UTILDE1 = "Utilde1"
    UTILDE6 = "Utilde6"
    CANONICAL_U = "CanonicalU"
    SIGNED_U = "SignedU"
    SIGNED_O = "SignedO"
    SIGNED_Q = "SignedQ"


class Sporadic(Enum):
    """The three sporadic maximal matrices with spectral radius 2"""
    S8DAGGER = "S8dagger"
    S14 = "S14"
    S16 = "S16"

    @property
    def order(self) -> int:
        return {Sporadic.S8DAGGER: 8, Sporadic.S14: 14, Sporadic.S16: 16}[self]


# Number of integer parameters per family
_ARITY = {
    Family.DELTA1: 1, Family.DELTAI: 1, Family.SPORADIC: 0,
    Family.DN: 1, Family.CTILDE: 1, Family.CTILDE1: 1, Family.CTILDE2: 1,
    Family.PATH: 1, Family.CYCLE: 1, Family.COMPLETE: 1,
    Family.SQUARE: 4, Family.Y: 3,
    Family.UTILDE1: 0, Family.UTILDE6: 0,
    Family.CANONICAL_U: 1, Family.SIGNED_U: 1, Family.SIGNED_O: 1, Family.SIGNED_Q: 2,
}

_SIGNED = {Family.SIGNED_U, Family.SIGNED_O, Family.SIGNED_Q}

# Families whose members have spectral radius exactly 2 (maximal containers)
RADIUS_TWO_FAMILIES = frozenset({Family.DELTA1, Family.DELTAI, Family.SPORADIC})


@dataclass(frozen=True)
class CatalogRef:
    """A family name with its parameters, e.g. Delta1(3) or Square(1,0,2,0)"""
    family: Family
    params: Tuple[int, ...] = field(default=())
    sporadic: Optional[Sporadic] = None

    def __post_init__(self):
        object.__setattr__(self, 'params', tuple(int(p) for p in self.params))
        self._validate()

    def _validate(self) -> None:
        family, params = self.family, self.params
        if len(params) != _ARITY[family]:
            raise ParamRange(f"{family.value} takes {_ARITY[family]} parameter(s), got {len(params)}")
        if family is Family.SPORADIC:
            if self.sporadic is None:
                raise ParamRange("Sporadic needs one of S8dagger, S14, S16")
            return
        if self.sporadic is not None:
            raise ParamRange(f"{family.value} does not take a sporadic name")
        if family in (Family.DELTA1, Family.DELTAI) and params[0] < 3:
            raise ParamRange(
                f"{family.value}({params[0]}): k must be at least 3\n"
                f"k = 2 puts antipodal roots in the vector set (entry -2)"
            )
        if family in (Family.DN, Family.CTILDE, Family.CTILDE1, Family.CTILDE2, Family.CYCLE) and params[0] < 3:
            raise ParamRange(f"{family.value}({params[0]}): cycles need n >= 3")
        if family in (Family.PATH, Family.COMPLETE) and params[0] < 1:
            raise ParamRange(f"{family.value}({params[0]}): n must be at least 1")
        if family is Family.SQUARE and min(params) < 0:
            raise ParamRange(f"Square{params}: path lengths must be >= 0")
        if family is Family.Y and min(params) < 1:
            raise ParamRange(f"Y{params}: arm lengths must be >= 1")
        if family in (Family.CANONICAL_U, Family.SIGNED_U) and not 1 <= params[0] <= 11:
            raise ParamRange(f"{family.value}({params[0]}): index must be in 1..11")
        if family is Family.SIGNED_O:
            size = params[0]
            if size < 4 or size % 2:
                raise ParamRange(f"SignedO({size}): the cycle length must be even and at least 4")
            if size < 8:
                logger.warning(f"SignedO({size}) is below the maximal range 2k >= 8")
        if family is Family.SIGNED_Q:
            h, k = params
            if h < 0 or k < 0 or h + k < 4:
                raise ParamRange(f"SignedQ({h},{k}): need h, k >= 0 and h + k >= 4")

    @classmethod
    def sporadic_ref(cls, name: Union[str, Sporadic]) -> 'CatalogRef':
        return cls(Family.SPORADIC, (), Sporadic(name) if isinstance(name, str) else name)

    @classmethod
    def parse(cls, text: str, extra: Sequence[str] = ()) -> 'CatalogRef':
        """
        Parse "Delta1(3)", "Square(1,0,2,0)", "S14", "Sporadic(S16)" or a
        family name followed by separate parameters

        Args:
            text: Family name, optionally with parenthesised parameters
            extra: Additional parameters given as separate words

        Raises:
            FormatError: If the family or a parameter is not recognised
            ParamRange: If the parameters are out of range
        """
        m = re.fullmatch(r'\s*([A-Za-z][A-Za-z0-9]*)\s*(?:\(([^)]*)\))?\s*', text)
        if not m:
            raise FormatError(f"Cannot parse catalog reference {text!r}")
        name = m.group(1)
        inner = [p for p in re.split(r'[,\s]+', m.group(2) or '') if p]
        args = inner + [str(a) for a in extra]
        sporadic_names = {s.value.lower(): s for s in Sporadic}
        if name.lower() in sporadic_names:
            return cls.sporadic_ref(sporadic_names[name.lower()])
        family = next((f for f in Family if f.value.lower() == name.lower()), None)
        if family is None:
            known = ', '.join(f.value for f in Family)
            raise FormatError(f"Unknown family {name!r}\nKnown families: {known}")
        if family is Family.SPORADIC:
            if len(args) != 1 or args[0].lower() not in sporadic_names:
                raise FormatError(f"Sporadic needs one of S8dagger, S14, S16, got {args}")
            return cls.sporadic_ref(sporadic_names[args[0].lower()])
        try:
            params = tuple(int(a) for a in args)
        except ValueError:
            raise FormatError(f"Parameters of {family.value} must be integers, got {args}")
        return cls(family, params)

    @property
    def is_signed(self) -> bool:
        return self.family in _SIGNED

    def order(self) -> int:
        """Number of vertices"""
        family, params = self.family, self.params
        if family in (Family.DELTA1, Family.DELTAI):
            return 2 * params[0]
        if family is Family.SPORADIC:
            return self.sporadic.order
        if family is Family.SQUARE:
            return 4 + sum(params)
        if family is Family.Y:
            return 1 + sum(params)
        if family in (Family.UTILDE1, Family.UTILDE6):
            return 4
        if family in (Family.CANONICAL_U, Family.SIGNED_U):
            return 8
        if family is Family.SIGNED_Q:
            return 4 + sum(params)
        return params[0]

    def __str__(self) -> str:
        if self.family is Family.SPORADIC:
            return f"Sporadic({self.sporadic.value})"
        if not self.params:
            return self.family.value
        return f"{self.family.value}({','.join(str(p) for p in self.params)})"
