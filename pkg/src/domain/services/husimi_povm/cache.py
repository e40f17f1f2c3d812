import threading

from loguru import logger

from src.domain.entities import PovmSet, SlotPartition, SphereGrid
from src.domain.services.husimi_povm.povm import build_povm
from src.domain.value_objects import SpinQuantumNumber


class PovmCache:
    """Read-mostly memo of build_povm keyed by (2j, partition, grid signature)"""

    def __init__(self):
        self._entries: dict[tuple, PovmSet] = {}
        self._lock = threading.Lock()

    def get(self, partition: SlotPartition, spin: SpinQuantumNumber, grid: SphereGrid) -> PovmSet:
        key = (spin.two_j, partition, grid.signature)
        with self._lock:
            cached = self._entries.get(key)
            if cached is not None:
                return cached

            logger.debug(f"POVM cache miss for {spin}, slots {partition.names}")
            povm = build_povm(partition, spin, grid)
            self._entries[key] = povm
            return povm

    def __len__(self) -> int:
        return len(self._entries)

    def clear(self):
        with self._lock:
            self._entries.clear()
