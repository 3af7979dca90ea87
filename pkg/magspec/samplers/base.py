from abc import ABC, abstractmethod


class Sampler(ABC):
    """
    Abstract sampler class.

    A sampler evaluates a function over a list of independent items, for
    example a momentum scan or the character samples of a band structure.
    """

    @abstractmethod
    def start_sampling(self, fn, items):
        """
        Start evaluating fn on every item.

        Args:
            fn (callable): pure function of one item
            items (list): the work items
        """

    @abstractmethod
    def store_samples(self, timeout=-1):
        """
        Collect the finished evaluations.

        Returns:
            result (dict): {item index: fn(item)} of the finished items
        """

    def map(self, fn, items):
        """Evaluate fn on every item and return the results in input order."""
        items = list(items)
        self.start_sampling(fn, items)
        result = {}
        while len(result) < len(items):
            result.update(self.store_samples())
        return [result[i] for i in range(len(items))]


class SerialSampler(Sampler):
    """Evaluates the items in-process, in order."""

    def __init__(self):
        self._pending = []

    def start_sampling(self, fn, items):
        self._pending.append((fn, list(items)))

    def store_samples(self, timeout=-1):
        result = {}
        while self._pending:
            fn, items = self._pending.pop(0)
            for i, item in enumerate(items):
                result[i] = fn(item)
        return result
