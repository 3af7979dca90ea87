import os
import numpy as np
import torch
import logging
from magspec.utils.writer import DummyWriter

os.environ["PYTHONWARNINGS"] = 'ignore:semaphore_tracker:UserWarning'

_DEBUG_MODE = False


def enable_debug_mode():
    global _DEBUG_MODE
    print("-----DEBUG_MODE: True-----")
    torch.autograd.set_detect_anomaly(True)
    _DEBUG_MODE = True


def disable_debug_mode():
    global _DEBUG_MODE
    print("-----DEBUG_MODE: False-----")
    torch.autograd.set_detect_anomaly(False)
    _DEBUG_MODE = False


def is_debug_mode():
    global _DEBUG_MODE
    return _DEBUG_MODE


# every kernel runs in complex128, which is a CPU workload at desk scale
_DEVICE = torch.device('cpu')


def set_device(device):
    global _DEVICE
    _DEVICE = torch.device(device)


def get_device():
    return _DEVICE


_SEED = 0


def set_seed(seed):
    global _SEED
    np.random.seed(seed)
    torch.manual_seed(seed)
    _SEED = seed
    print("-----SEED: {}-----".format(_SEED))


def call_seed():
    global _SEED
    np.random.seed(_SEED)
    torch.manual_seed(_SEED)
    return _SEED


_WRITER = DummyWriter()


def set_writer(writer):
    global _WRITER
    _WRITER = writer


def get_writer():
    return _WRITER


_LOGGER = logging.getLogger(__name__)


def set_logger(logger):
    global _LOGGER
    _LOGGER = logger


def get_logger():
    return _LOGGER


def _default_num_workers():
    value = os.environ.get("MAGSPEC_THREADS")
    if value is None:
        return os.cpu_count() or 1
    try:
        num_workers = int(value)
    except ValueError:
        from magspec.exceptions import ConfigError
        raise ConfigError(
            "MAGSPEC_THREADS must be an integer, got {!r}".format(value))
    return max(num_workers, 1)


_NUM_WORKERS = None


def set_num_workers(num_workers):
    global _NUM_WORKERS
    _NUM_WORKERS = int(num_workers)
    print("-----NUM_WORKERS: {}-----".format(_NUM_WORKERS))


def get_num_workers():
    global _NUM_WORKERS
    if _NUM_WORKERS is None:
        _NUM_WORKERS = _default_num_workers()
    return _NUM_WORKERS


_CONVENTIONS = ("half", "double")
_CONVENTION = "half"


def set_convention(convention):
    global _CONVENTION
    if convention not in _CONVENTIONS:
        raise ValueError("convention must be one of {}".format(_CONVENTIONS))
    _CONVENTION = convention
    print("-----CONVENTION: {}-----".format(_CONVENTION))


def get_convention():
    return _CONVENTION
