"""Error taxonomy.

Four failure kinds are kept distinct on purpose:

* ``ValidationError``   -- the input data breaks a structural axiom; the
  message names the first violated law and a witness.
* ``PreconditionError`` -- the data is valid but an operation's stated
  hypothesis does not hold (e.g. a map is not steady).
* ``SearchBoundExceeded`` -- a finite search was cut off by a bound; this is
  *not* evidence of absence and is never reported as such.
* ``InternalConsistencyError`` -- a property that is supposed to hold by
  theorem failed; indicates a bug in this package.
* ``TheoremViolationError`` -- a verified construction contradicts a claimed
  result on a concrete instance; carries the witness as a research finding.
"""


class RadhomError(Exception):
    pass


class ValidationError(RadhomError):
    pass


class PreconditionError(RadhomError):
    pass


class SearchBoundExceeded(RadhomError):
    def __init__(self, message, searched=None):
        super().__init__(message)
        # record of what was fully searched before the cutoff
        self.searched = searched


class InternalConsistencyError(RadhomError):
    pass


class TheoremViolationError(RadhomError):
    """A theorem-level claim failed on a concrete instance.

    ``witness`` holds enough data to replay the failure.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
