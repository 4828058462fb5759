__version__ = "1.0.0"
__author__ = "pyknotslopes developers"
__credits__ = "Knot Atlas, for the published PD codes and Jones polynomials"
