# FILE: src/ortholattice/utils/stats.py
from collections.abc import Sequence

import numpy as np


def summarize_ms(durations: Sequence[float]) -> tuple[float, float]:
    """秒単位の計測値から (中央値, 95 パーセンタイル) をミリ秒で返します。"""
    if not durations:
        return 0.0, 0.0
    samples = np.asarray(durations, dtype=np.float64) * 1000.0
    return float(np.median(samples)), float(np.percentile(samples, 95))
