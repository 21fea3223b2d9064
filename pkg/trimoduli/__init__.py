"""Pairwise coprime trinomial moduli, their resultant graph and a residue number system."""
