"""Casas-Alvero branch ideals, Groebner bases and finite-field verification."""
