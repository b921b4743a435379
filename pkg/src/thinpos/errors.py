"""Exception hierarchy.

``InputError`` subclasses signal bad user data (CLI exit code 1);
``InternalError`` subclasses signal a broken invariant (exit code 2).
"""


class ThinPosError(Exception):
    pass


class InputError(ThinPosError):
    pass


class InternalError(ThinPosError):
    pass


class MalformedWord(InputError):
    pass


class NotLinkWord(InputError):
    pass


class NotBridgePosition(InputError):
    pass


class InconsistentShape(InputError):
    pass


class MalformedForest(InputError):
    pass


class MissingTableEntry(InputError):
    def __init__(self, region, signs):
        self.region = region
        self.signs = dict(signs)
        pattern = ", ".join(f"{k}:{v}" for k, v in sorted(self.signs.items()))
        super().__init__(f"no graph table row for region {region} with signs {{{pattern}}}")


class ParseError(InputError):
    pass


class ValidationError(InputError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class EmptyCandidateSet(InputError):
    pass


class CapExceeded(InputError):
    pass


class ConservationFailure(InternalError):
    pass


class InternalInconsistency(InternalError):
    pass
