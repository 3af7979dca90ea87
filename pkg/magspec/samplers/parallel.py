import ray
import numpy as np
import os
import torch
from magspec.initializer import call_seed, get_logger
from magspec.samplers.base import Sampler, SerialSampler


@ray.remote
class Worker:
    def __init__(self, seed):
        self.seed = seed
        np.random.seed(seed)
        torch.manual_seed(seed)
        # one BLAS thread per worker, the pool provides the parallelism
        torch.set_num_threads(1)

        print("Worker initialized in PID: {}".format(os.getpid()))

    def evaluate(self, fn, indexed_items):
        """
        Args:
            fn (callable): function of one item
            indexed_items (list of (int, object)): items with their index

        Returns:
            list of (int, object): index and fn(item)
        """
        return [(i, fn(item)) for i, item in indexed_items]


class ParallelSampler(Sampler):
    """
    ParallelSampler evaluates items on a pool of ray workers.
    Items are dealt round-robin, so every worker gets a deterministic
    share, and results are keyed by item index.
    """

    def __init__(self, num_workers=2):
        if not ray.is_initialized():
            ray.init(ignore_reinit_error=True, include_dashboard=False)
        seed = call_seed()
        self._workers = [Worker.remote(seed + i)
                         for i in range(num_workers)]
        self._work_ids = {worker: None for worker in self._workers}

    def start_sampling(self, fn, items):
        items = list(enumerate(items))
        shares = [items[i::len(self._workers)]
                  for i in range(len(self._workers))]
        for worker, share in zip(self._workers, shares):
            assert self._work_ids[worker] is None, \
                "worker is still busy with a previous batch"
            if share:
                self._work_ids[worker] = worker.evaluate.remote(fn, share)

    def store_samples(self, timeout=-1):
        # if timeout < 0, wait until every worker finishes
        result = {}
        for worker, _id in self._work_ids.items():
            if _id is None:
                continue
            if timeout > 0:
                ready_id, _ = ray.wait([_id], num_returns=1, timeout=timeout)
            else:
                ready_id = [_id]

            if len(ready_id) > 0:
                result.update(dict(ray.get(ready_id[0])))
                self._work_ids[worker] = None
        return result


def make_sampler(num_workers=1):
    """SerialSampler for a single worker, a ray pool otherwise."""
    if num_workers <= 1:
        return SerialSampler()
    get_logger().debug("starting {} ray workers".format(num_workers))
    return ParallelSampler(num_workers)
