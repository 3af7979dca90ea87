import pytest
import ray
from magspec.samplers import SerialSampler, ParallelSampler, make_sampler


def square(x):
    return x * x


@pytest.fixture()
def setUp():
    ray.init(include_dashboard=False, ignore_reinit_error=True)
    yield {"items": list(range(11))}


def test_serial_sampler():
    sampler = SerialSampler()
    assert sampler.map(square, range(5)) == [0, 1, 4, 9, 16]
    assert sampler.map(square, []) == []


def test_parallel_sampler_keeps_order(setUp):
    items = setUp["items"]
    sampler = ParallelSampler(num_workers=2)

    # GIVEN items dealt round-robin over two workers
    # WHEN the results are collected
    # THEN they come back in input order
    assert sampler.map(square, items) == [square(x) for x in items]
    # the workers are free for another batch
    assert sampler.map(square, items[:2]) == [0, 1]


def test_store_samples_by_index(setUp):
    sampler = ParallelSampler(num_workers=2)
    sampler.start_sampling(square, [3, 4, 5])
    result = {}
    while len(result) < 3:
        result.update(sampler.store_samples(timeout=1e8))
    assert result == {0: 9, 1: 16, 2: 25}


def test_make_sampler(setUp):
    assert isinstance(make_sampler(1), SerialSampler)
    assert isinstance(make_sampler(2), ParallelSampler)
