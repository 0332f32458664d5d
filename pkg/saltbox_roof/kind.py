# coding=utf-8
"""Names of the roof shapes that the saltbox-roof family can take."""


class RoofShapeKind(object):
    """Constants for the seven roof shapes.

    The first six are the degenerate members with their own closed forms
    (see saltbox_roof.family). Saltbox is the general interior shape.
    """
    UNIFORM = 'Uniform'
    TRIANGULAR = 'Triangular'
    LEFT_SHED = 'LeftShed'
    RIGHT_SHED = 'RightShed'
    SHED_FLAT = 'ShedFlat'
    SKILLION = 'Skillion'
    SALTBOX = 'Saltbox'

    KINDS = (UNIFORM, TRIANGULAR, LEFT_SHED, RIGHT_SHED, SHED_FLAT, SKILLION, SALTBOX)
    FAMILY_KINDS = KINDS[:-1]
