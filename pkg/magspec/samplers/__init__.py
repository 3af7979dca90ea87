from .base import Sampler, SerialSampler
from .parallel import ParallelSampler, make_sampler


__all__ = ["Sampler", "SerialSampler", "ParallelSampler", "make_sampler"]
