"""proarrow: a desk-scale engine for proarrow equipments.

Finite strict categories, finite-set-valued profunctors, abstract double
categories with equipment checks, tabulators and two-sided discrete
fibrations, span double categories, pointwise Kan extensions, and internal
category theory over a finite site.  Every universal property is decided by
bounded search and every claimed equivalence carries an explicit witness.
"""

__version__ = "0.1.0"
