class EmptyDocumentError(ValueError):
    """Raised when no sentence survives preprocessing."""


class InvalidKError(ValueError):
    """Raised for a cluster count outside ``[1, n_sentences]`` or a malformed k range."""


class InvalidAlphaError(ValueError):
    """Raised when the ROUGE-W weighting exponent is not greater than 1."""
