"""Swarm navigation simulator and 1D density propagator."""

from ._shiner import (
    Box,
    GridError,
    Metrics,
    Mode,
    ParamError,
    SwarmParams,
    build_neighborhood,
    env_speed,
    grid_stats,
    hammer,
    kernel_pdf,
    mc_sample,
    pdf_at_time,
    simulate,
    social_direction,
    step_displacement,
)

__all__ = [
    "Box",
    "GridError",
    "Metrics",
    "Mode",
    "ParamError",
    "SwarmParams",
    "build_neighborhood",
    "env_speed",
    "grid_stats",
    "hammer",
    "kernel_pdf",
    "mc_sample",
    "pdf_at_time",
    "simulate",
    "social_direction",
    "step_displacement",
]
