from .weights import WeightSU, central_trace, enumerate_dominant_weights, weights_of_height, weyl_dimension
from .witten_sum import WittenEstimate, decay_exponent, witten_constant, witten_sum

__all__ = [
    "WeightSU",
    "central_trace",
    "enumerate_dominant_weights",
    "weights_of_height",
    "weyl_dimension",
    "WittenEstimate",
    "decay_exponent",
    "witten_constant",
    "witten_sum",
]
