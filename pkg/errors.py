from typing import List, Tuple


class PhantomError(Exception):
    pass


class LatticeError(PhantomError):
    pass


class ParseError(PhantomError):
    pass


class EmptyBox(PhantomError):
    pass


class Undecidable(PhantomError):
    def __init__(self, divisor, message: str | None = None):
        self.divisor = divisor
        super().__init__(message or f"Linear system |{divisor}| is undecided by the certified rules")


class UnsupportedPair(PhantomError):
    def __init__(self, source, target):
        self.source = source
        self.target = target
        super().__init__(f"No Hom rule between {source} and {target}")


class NotExceptional(PhantomError):
    def __init__(self, i: int, j: int, found):
        self.pair: Tuple[int, int] = (i, j)
        self.found = found
        super().__init__(f"Collection is not exceptional at ({i}, {j}): Hom = {found}")


class DegeneracyUnprovable(PhantomError):
    def __init__(self, connected: List[Tuple[Tuple[int, int], Tuple[int, int]]]):
        self.connected = connected
        pairs = ", ".join(f"{s}->{t}" for s, t in connected)
        super().__init__(f"Surviving entries may be connected by higher differentials: {pairs}")


class InvalidRank(PhantomError):
    pass


class PrimeTooSmall(PhantomError):
    pass


class DegeneratePointSample(PhantomError):
    pass


class UnknownBundle(PhantomError):
    pass
