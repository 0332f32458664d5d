# coding=utf-8
"""Numerical tolerances shared by the saltbox-roof modules."""

# slack allowed on the c_hat <= c_limit domain condition
EPS_DOMAIN = 1e-12

# slack on unit-area identities and on truncation window mass
EPS_AREA = 1e-12

# relative threshold under which a slope or a width is treated as zero
EPS_FLAT = 1e-9

# default tolerance of the shape classification
CLASSIFY_TOL = 1e-9

# largest quantile difference accepted by the validate command
VALIDATE_TOL = 1e-7

# maximum subdivision depth of the adaptive quadrature
QUAD_MAX_DEPTH = 50
