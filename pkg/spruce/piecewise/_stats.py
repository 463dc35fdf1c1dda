"""Operation counting."""

__copyright__ = "Copyright (C) 2014 Ivan D Vasin"
__docformat__ = "restructuredtext"

__all__ = ['OperationCounts']


class OperationCounts(object):

    """Tallies of the elementary operations performed by the algorithms.

    The counts witness the cost claims of the piecewise algorithms
    independently of wall-clock time: one comparison per breakpoint
    comparison, one canonicalization per call of
    :meth:`~spruce.piecewise.EffectiveDomain.canonicalize`, and one
    evaluation per call of
    :meth:`~spruce.piecewise.EffectiveDomain.eval_at`.

    """

    def __init__(self):
        self.reset()

    def __repr__(self):
        return '{}(comparisons={}, canonicalize_calls={}, evaluations={})'\
                .format(self.__class__.__name__, self.comparisons,
                        self.canonicalize_calls, self.evaluations)

    def as_dict(self):
        return {'comparisons': self.comparisons,
                'canonicalize_calls': self.canonicalize_calls,
                'evaluations': self.evaluations}

    def reset(self):
        self.canonicalize_calls = 0
        self.comparisons = 0
        self.evaluations = 0
