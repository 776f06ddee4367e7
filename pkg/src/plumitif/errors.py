"""Exception types shared across the pipeline stages."""


class PlumitifError(Exception):
    """Base class for every error raised by this package."""


class InputError(PlumitifError):
    """Raw input rejected before the pipeline runs (empty, oversize, bad encoding)."""


class InputTooLargeError(InputError):
    def __init__(self, size: int, limit: int):
        super().__init__(f"input is {size} bytes, limit is {limit}")
        self.size = size
        self.limit = limit


class SegmentationError(PlumitifError):
    """Base for marker-scan failures."""


class MissingPartError(SegmentationError):
    def __init__(self, kind):
        super().__init__(f"no marker found for part {kind.value!r}")
        self.kind = kind


class AmbiguousMarkersError(SegmentationError):
    def __init__(self, offset: int, markers):
        names = ", ".join(repr(m) for m in markers)
        super().__init__(f"markers of different kinds match at offset {offset}: {names}")
        self.offset = offset
        self.markers = tuple(markers)


class DuplicateMarkerError(SegmentationError):
    def __init__(self, kind, offset: int):
        super().__init__(f"second marker for part {kind.value!r} at offset {offset}")
        self.kind = kind
        self.offset = offset


class NormalizationError(PlumitifError):
    """A required field of the normalized view cannot be assembled from entities."""

    def __init__(self, part: str, reason: str):
        super().__init__(f"{part}: {reason}")
        self.part = part
        self.reason = reason


class CccParseError(PlumitifError):
    """Statute HTML did not follow the documented markup schema."""

    def __init__(self, location: str, reason: str):
        super().__init__(f"{location}: {reason}")
        self.location = location
        self.reason = reason


class StoreSchemaError(PlumitifError):
    """Provision-store JSON document violates the documented schema."""


class ProvisionNotFoundError(PlumitifError):
    def __init__(self, citation):
        super().__init__(f"no provision for citation {citation}")
        self.citation = citation


class RuleTableError(PlumitifError):
    """Rule table / lexicon configuration file is malformed."""


class GenerationError(PlumitifError):
    """A paragraph could not be realized; captured per part in the report."""


class UnknownCodeError(GenerationError):
    def __init__(self, code: str):
        super().__init__(f"decision code {code!r} is not in the lexicon")
        self.code = code


class NoRuleError(GenerationError):
    def __init__(self, signature: str):
        super().__init__(f"no generation rule for conviction combination {signature!r}")
        self.signature = signature


class EdgeCaseError(GenerationError):
    """Duration arithmetic outside the covered cases (e.g. credit exceeds penalty)."""


class StitchStrategyFailure(PlumitifError):
    """The stitch strategy could not produce a preposition from the closed set."""


class EmptyCorpusError(PlumitifError):
    """Evaluation called on an empty corpus."""
