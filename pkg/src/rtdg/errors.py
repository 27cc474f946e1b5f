class RTDGError(Exception):
    """Base class for every error raised by rtdg."""


class SpaceMismatchError(RTDGError, ValueError):
    pass


class InvalidPointError(RTDGError, ValueError):
    pass


class InvalidSpaceError(RTDGError, ValueError):
    pass


class InvalidDistanceError(RTDGError, ValueError):
    pass


class SizeLimitError(RTDGError):
    def __init__(self, what, size, limit):
        super().__init__(f"{what} has {size} elements, above the limit of {limit}")
        self.size = size
        self.limit = limit


class NoPreimageError(RTDGError, ValueError):
    pass


class ExprParseError(RTDGError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
