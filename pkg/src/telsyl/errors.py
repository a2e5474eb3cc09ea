"""Exception types shared across the pipeline.

Every error carries a short ``code`` so the CLI can print a machine-parsable
diagnostic line without inspecting the exception class.
"""


class TelsylError(ValueError):
    code = "Error"


class UnknownSymbol(TelsylError):
    code = "UnknownSymbol"

    def __init__(self, text, position):
        self.text = text
        self.position = position
        super().__init__(f"no WX symbol matches {text[position:position + 2]!r} at position {position} in {text!r}")


class DanglingSign(TelsylError):
    code = "DanglingSign"

    def __init__(self, text, position):
        self.text = text
        self.position = position
        super().__init__(f"sign U+{ord(text[position]):04X} at position {position} has no consonant to modify")


class Unrenderable(TelsylError):
    code = "Unrenderable"

    def __init__(self, token, position=None):
        self.token = token
        self.position = position
        super().__init__(f"WX token {token!r} has no orthographic form here")


class NoVowel(TelsylError):
    code = "NoVowel"

    def __init__(self, word):
        self.word = word
        super().__init__(f"word {word!r} has no vowel nucleus")


class EmptyCorpus(TelsylError):
    code = "EmptyCorpus"

    def __init__(self, msg="corpus has no usable words"):
        super().__init__(msg)


class EmptyTarget(TelsylError):
    code = "EmptyTarget"

    def __init__(self, msg="target syllable set is empty after intersection with the corpus"):
        super().__init__(msg)


class UnreachableCoverage(TelsylError):
    """Candidates ran out before the requested coverage; ``result`` holds the partial selection."""

    code = "UnreachableCoverage"

    def __init__(self, result, requested):
        self.result = result
        self.requested = requested
        reached = result.coverage[-1] if result.coverage else 0.0
        super().__init__(f"coverage {reached:.4f} is below requested {requested:.4f} and no candidate adds coverage")


class TableFormatError(TelsylError):
    code = "TableFormatError"
