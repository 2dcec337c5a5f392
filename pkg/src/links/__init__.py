"""Links from longitude data: Bing doubles, split unions and zero surgery."""

from .models import FramedLink, LongitudeLink
from .bing import bing_double, hopf_family, hopf_link
from .surgery import relabel, split_union, unlink, zero_surgery_degree
from .families import milnor_two_component, realization_link

__all__ = [
    "FramedLink",
    "LongitudeLink",
    "bing_double",
    "hopf_family",
    "hopf_link",
    "relabel",
    "split_union",
    "unlink",
    "zero_surgery_degree",
    "milnor_two_component",
    "realization_link",
]
