from .enveloping import EnvelopingAlgebra, UElement, PbwMonomial, sym_algebra, normal_form
from .hopf import HopfMaps, hopf_maps, Pairing, evaluation_pairing, DualityIsomorphismReport, duality_isomorphism
