"""Pure-numpy implementations of the hot kernels.

These are the fallback twins of the compiled extension (punkt._ckernels):
identical contracts, selected at import time by punkt.backend. The
fo-pooling scans loop over time with vectorized batch/unit math; the YIN
difference function is computed for all frames at once via FFT
cross-correlation plus cumulative energy terms.
"""

from __future__ import annotations

import numpy as np


def fo_pool(z, f, o, lengths, reverse=False):
    """fo-pooling scan: c_t = f_t*c_prev + (1-f_t)*z_t, h_t = o_t*c_t.

    z, f, o: [B, T, H]; lengths: [B] valid lengths. With reverse=False the
    scan is causal (c_prev = c_{t-1}); with reverse=True it is anti-causal
    (c_prev = c_{t+1}). Positions at or beyond each sample's length yield
    h = c = 0 and never leak state into valid positions.
    """
    B, T, H = z.shape
    cs = np.zeros_like(z)
    c = np.zeros((B, H), dtype=z.dtype)
    order = range(T - 1, -1, -1) if reverse else range(T)
    lengths = np.asarray(lengths)
    for t in order:
        active = (t < lengths).astype(z.dtype)[:, None]
        c = active * (f[:, t] * c + (1.0 - f[:, t]) * z[:, t])
        cs[:, t] = c
    h = o * cs
    return h, cs


def fo_pool_backward(z, f, o, cs, dh, lengths, reverse=False):
    """Exact reverse-mode gradients of fo_pool w.r.t. z, f and o."""
    B, T, H = z.shape
    dz = np.zeros_like(z)
    df = np.zeros_like(z)
    do = np.zeros_like(z)
    dc = np.zeros((B, H), dtype=z.dtype)
    lengths = np.asarray(lengths)
    # walk the forward scan order backwards; the carried dc crosses sample
    # boundaries as zero because inactive positions force dct = 0
    order = range(T) if reverse else range(T - 1, -1, -1)
    for t in order:
        active = (t < lengths).astype(z.dtype)[:, None]
        dct = (dh[:, t] * o[:, t] + dc) * active
        do[:, t] = dh[:, t] * cs[:, t] * active
        if reverse:
            c_prev = cs[:, t + 1] if t + 1 < T else np.zeros((B, H), dtype=z.dtype)
        else:
            c_prev = cs[:, t - 1] if t > 0 else np.zeros((B, H), dtype=z.dtype)
        df[:, t] = dct * (c_prev - z[:, t])
        dz[:, t] = dct * (1.0 - f[:, t])
        dc = dct * f[:, t]
    return dz, df, do


def yin_track(x, n_frames, hop, window, tau_min, tau_max, threshold, sample_rate):
    """Per-frame YIN f0 estimates (0.0 = unvoiced) for a padded signal.

    x must be float64 and long enough for every frame to read
    window + tau_max + 2 samples; the caller zero-pads. Returns float64
    [n_frames] of raw (unclamped) f0 values.
    """
    if n_frames <= 0:
        return np.zeros(0, dtype=np.float64)
    frame_len = window + tau_max + 2
    idx = np.arange(n_frames)[:, None] * hop + np.arange(frame_len)[None, :]
    frames = x[idx]

    nfft = 1
    while nfft < frame_len:
        nfft *= 2
    spec = np.fft.rfft(frames, nfft, axis=1)
    w0 = np.fft.rfft(frames[:, :window], nfft, axis=1)
    corr = np.fft.irfft(spec * np.conj(w0), nfft, axis=1)[:, : tau_max + 2]

    sq = np.concatenate(
        [np.zeros((n_frames, 1)), np.cumsum(frames * frames, axis=1)], axis=1
    )
    e_tau = sq[:, window : window + tau_max + 2] - sq[:, : tau_max + 2]
    d = e_tau[:, :1] + e_tau - 2.0 * corr
    d[:, 0] = 0.0
    np.maximum(d, 0.0, out=d)

    # cumulative-mean normalized difference; all-zero prefix -> 1 (unvoiced)
    denom = np.cumsum(d[:, 1:], axis=1)
    cm = np.ones_like(d)
    taus = np.arange(1, d.shape[1], dtype=np.float64)
    np.divide(d[:, 1:] * taus, denom, out=cm[:, 1:], where=denom > 0)

    # first lag under threshold within the search range
    region = cm[:, tau_min : tau_max + 1] < threshold
    voiced = region.any(axis=1)
    first = np.argmax(region, axis=1) + tau_min

    # descend from the crossing to the local minimum of the CMND curve
    nondec = cm[:, 1:] >= cm[:, :-1]
    cols = np.arange(cm.shape[1] - 1)
    stop = nondec & (cols[None, :] >= first[:, None])
    has_stop = stop.any(axis=1)
    tau_star = np.where(has_stop, np.argmax(stop, axis=1), tau_max)
    tau_star = np.minimum(tau_star, tau_max)

    # parabolic refinement on the CMND values around the minimum
    rows = np.arange(n_frames)
    t0 = np.clip(tau_star, 1, tau_max)
    a = cm[rows, t0 - 1]
    b = cm[rows, t0]
    c = cm[rows, t0 + 1]
    den = a - 2.0 * b + c
    shift = np.where(np.abs(den) > 1e-12, 0.5 * (a - c) / np.where(den == 0, 1.0, den), 0.0)
    shift = np.clip(shift, -1.0, 1.0)
    period = t0 + shift
    return np.where(voiced, sample_rate / period, 0.0)
