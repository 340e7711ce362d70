

class SeqforgeException(Exception):
    """ Base exception class. All seqforge failures should subclass
        this class
    """
    pass


class ConfigurationFileNotFound(SeqforgeException):
    """ Raised when an explicitly named configuration file cannot be found """
    pass


class InvalidConfiguration(SeqforgeException):
    """ Raised when the configuration is not valid """
    pass


class UnknownSequence(SeqforgeException):
    """ Raised when an A-number is malformed or not registered """
    pass


class BFileParseError(SeqforgeException):
    """ Raised when a b-file line cannot be read as 'index value' """

    def __init__(self, line_no, line):
        super().__init__('Malformed b-file line {}: {!r}'.format(line_no, line))
        self.line_no = line_no
        self.line = line


class BFileStructureError(SeqforgeException):
    """ Raised when b-file indexes are not consecutive """

    def __init__(self, expected, found, line_no):
        super().__init__('Index gap at line {}: expected {} but found {}'.format(
            line_no, expected, found))
        self.expected = expected
        self.found = found
        self.line_no = line_no


class AlignmentError(SeqforgeException):
    """ Raised when two term lists share no index """
    pass


class BudgetExceeded(SeqforgeException):
    """ Raised when a search runs out of its work budget before producing
        an answer. ``progress`` holds whatever partial result is meaningful.
    """

    def __init__(self, message, progress=None):
        super().__init__(message)
        self.progress = progress


class UnfactoredError(SeqforgeException):
    """ Raised when the rho budget runs out. ``cofactor`` is the composite
        that could not be split
    """

    def __init__(self, cofactor, found=None):
        super().__init__('Could not factor composite cofactor {} ({} digits)'.format(
            cofactor, len(str(cofactor))))
        self.cofactor = cofactor
        self.found = found or []


class DuplicateTerm(SeqforgeException):
    """ Raised when a prefix expected to be injective repeats a value """

    def __init__(self, value):
        super().__init__('Value {} occurs more than once'.format(value))
        self.value = value


class DeadWordError(SeqforgeException):
    """ Raised when stepping the empty tag word """
    pass


class CheckpointError(SeqforgeException):
    """ Raised when a checkpoint file cannot be used to resume a run """
    pass


class WindowError(SeqforgeException):
    """ Raised when a line origin lies outside a stored array """
    pass


class PatchRadiusError(SeqforgeException):
    """ Raised when a patch is asked for shells beyond its valid radius """
    pass


class DisconnectedBase(SeqforgeException):
    """ Raised when the base vertex of a coordination job has no neighbours """
    pass
