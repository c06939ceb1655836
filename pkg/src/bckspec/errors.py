"""Shared exception types."""


class TableError(ValueError):
    """Operation table is structurally malformed (shape or entry range)."""


class AxiomError(ValueError):
    """A well-formed table fails one or more cBCK axioms."""

    def __init__(self, witnesses):
        self.witnesses = dict(witnesses)
        parts = ", ".join(
            "%s at %r" % (name, w) for name, w in sorted(self.witnesses.items())
        )
        super().__init__("not a cBCK-algebra: " + parts)


class HomomorphismError(ValueError):
    """Candidate map violates h(x*y) = h(x)*h(y), or has the wrong shape."""


class UnboundedError(ValueError):
    """Operation needs a bounded algebra but no top element exists."""


class SizeGuardError(RuntimeError):
    """Exhaustive computation refused: input exceeds the documented bound."""


class ImproperPreimageError(ValueError):
    """A prime's preimage under a homomorphism is the whole source algebra."""

    def __init__(self, prime):
        self.prime = tuple(sorted(prime))
        super().__init__(
            "preimage of prime %r is the whole source algebra" % (self.prime,)
        )


class SpecParseError(ValueError):
    """Input JSON does not match any known object schema."""
