"""Decategorified trihedral Hecke algebras, sl3 polynomials, tricolored graphs and zigzag algebras."""
