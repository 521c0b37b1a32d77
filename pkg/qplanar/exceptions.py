"""
Custom exceptions thrown by the qplanar toolkit.
"""


class QPlanarException(Exception):
    """
    Base class for qplanar exceptions.
    """

    def __init__(self, message=""):
        """
        Init method for QPlanarException base class.

        Arguments:
            message (str): message describing why the exception was raised.
        """
        super().__init__()
        self.message = message

    def __str__(self):
        """
        Show string representation of QPlanarException using its message.

        Returns:
            str: message describing why the exception was raised.
        """
        return self.message


class GraphConstructionError(QPlanarException):
    """
    Describes errors that occur while building a graph.

    Raised for invalid constructor sizes, self-loops, vertices out of range
    and malformed edge-list text.
    """

    def __init__(self, kind="", message=""):
        """
        Init method for GraphConstructionError custom exception class.

        Arguments:
            kind (str): name of the constructor or format raising the exception.
            message (str): message describing why the exception was raised.
        """
        self.kind = kind
        super().__init__(
            message="GraphConstructionError {kind}: {message}".format(kind=kind, message=message)
        )


class GraphPreconditionError(QPlanarException):
    """
    Describes a graph that does not satisfy the precondition of an operation.
    """

    def __init__(self, operation="", message=""):
        """
        Init method for GraphPreconditionError custom exception class.

        Arguments:
            operation (str): name of the operation whose precondition failed.
            message (str): message describing why the exception was raised.
        """
        self.operation = operation
        super().__init__(
            message="GraphPreconditionError {operation}: {message}".format(operation=operation, message=message)
        )


class NonConvergenceError(QPlanarException):
    """
    Describes a power iteration that did not reach the requested tolerance.

    The best iterate found is kept in ``best`` so callers can still inspect it.
    """

    def __init__(self, iterations=0, residual=float("inf"), best=None):
        """
        Init method for NonConvergenceError custom exception class.

        Arguments:
            iterations (int): number of iterations performed.
            residual (float): residual of the best iterate.
            best (SpectralResult): best iterate found.
        """
        self.iterations = iterations
        self.residual = residual
        self.best = best
        super().__init__(
            message=f"NonConvergenceError: residual {residual:.3e} after {iterations} iterations"
        )


class CertificateError(QPlanarException):
    """
    Describes errors that occur while building or checking a certificate.
    """

    def __init__(self, lemma_tag="", message=""):
        """
        Init method for CertificateError custom exception class.

        Arguments:
            lemma_tag (str): tag of the lemma the certificate belongs to.
            message (str): message describing why the exception was raised,
              naming the violated threshold when a hypothesis is unmet.
        """
        self.lemma_tag = lemma_tag
        super().__init__(
            message="CertificateError {lemma_tag}: {message}".format(lemma_tag=lemma_tag, message=message)
        )


class SwapError(QPlanarException):
    """
    Describes errors that occur while detecting or applying an edge swap.
    """

    def __init__(self, config="", message=""):
        """
        Init method for SwapError custom exception class.

        Arguments:
            config (str): configuration name (single, wide, near or apart), if known.
            message (str): message describing why the exception was raised.
        """
        self.config = config
        super().__init__(
            message="SwapError {config}: {message}".format(config=config, message=message)
        )


class PlanarCodeError(QPlanarException):
    """
    Describes a malformed planar_code stream.
    """

    def __init__(self, offset=0, message=""):
        """
        Init method for PlanarCodeError custom exception class.

        Arguments:
            offset (int): byte offset where parsing failed.
            message (str): message describing why the exception was raised.
        """
        self.offset = offset
        super().__init__(
            message="PlanarCodeError at byte {offset}: {message}".format(offset=offset, message=message)
        )


class EnumerationError(QPlanarException):
    """
    Describes an enumeration request outside of the supported range.
    """


class ConfigurationError(QPlanarException):
    """
    Describes errors that occur while validating the qplanar settings.
    """

    def __init__(self, setting="", message=""):
        """
        Init method for ConfigurationError custom exception class.

        Arguments:
            setting (str): name of the offending setting.
            message (str): message describing why the exception was raised.
        """
        self.setting = setting
        super().__init__(
            message="ConfigurationError {setting}: {message}".format(setting=setting, message=message)
        )
