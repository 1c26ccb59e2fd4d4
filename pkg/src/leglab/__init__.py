"""Classical invariants and tb bounds for Legendrian knot fronts."""
