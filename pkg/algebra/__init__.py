"""
Finite-dimensional unital associative algebras with a trace.

A trace is a linear functional with tr(xy) = tr(yx); its values are read as
scalar multiples of the unit.
"""
