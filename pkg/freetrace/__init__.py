"""
Free multilinear trace monomials and polynomials.

The spaces MTₙ (mixed) and PTₙ (pure) with their canonical ordered bases,
substitution, the Sₙ action and the PT_{n+1} ≅ MTₙ isomorphism.
"""
