"""Exception hierarchy.

Every error derives from EqHomotopyError and from the builtin exception a
caller would naturally catch for that condition.
"""

__all__ = [
    'EqHomotopyError',
    'UnknownGroupError',
    'GroupTooLargeError',
    'SubgroupError',
    'DenominatorError',
    'FamilyError',
    'RestrictionError',
    'GradingError',
    'ComplexError',
    'UnsupportedFusionError',
    'GlueError',
    'OracleMismatchError',
    'Report',
]


class EqHomotopyError(Exception):
    pass


class UnknownGroupError(EqHomotopyError, ValueError):
    pass


class GroupTooLargeError(EqHomotopyError, ValueError):
    pass


class SubgroupError(EqHomotopyError, ValueError):
    pass


class DenominatorError(EqHomotopyError, ArithmeticError):
    """A localized scalar needs a prime that is not inverted."""

    def __init__(self, message, prime=None):
        super().__init__(message)
        self.prime = prime


class FamilyError(EqHomotopyError, ValueError):
    pass


class RestrictionError(EqHomotopyError, KeyError):

    def __str__(self):
        # KeyError quotes its argument; keep the message readable.
        return str(self.args[0]) if self.args else ''


class GradingError(EqHomotopyError, ValueError):
    pass


class ComplexError(EqHomotopyError, ArithmeticError):
    pass


class UnsupportedFusionError(EqHomotopyError, NotImplementedError):
    pass


class GlueError(EqHomotopyError, ArithmeticError):
    pass


class OracleMismatchError(EqHomotopyError, AssertionError):
    pass


class Report:
    """Outcome of a report-style check: ``ok`` unless an issue was recorded."""

    __slots__ = ('name', 'issues', 'checked')

    def __init__(self, name):
        self.name = name
        self.issues = []
        self.checked = 0

    @property
    def ok(self):
        return not self.issues

    def check(self, condition, message, *args):
        self.checked += 1
        if not condition:
            self.issues.append(message % args if args else message)
        return condition

    def extend(self, other):
        self.checked += other.checked
        self.issues.extend('%s: %s' % (other.name, m) for m in other.issues)

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return '<Report %s: %d checks, %d issues>' % (self.name, self.checked,
                                                     len(self.issues))
