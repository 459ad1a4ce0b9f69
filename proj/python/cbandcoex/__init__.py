# SPDX-License-Identifier: Apache-2.0
"""Python bindings for the cbandcoex interference engine."""

from ._core import (  # noqa: F401
    DomainError,
    Error,
    InfeasibleError,
    Scenario,
    ValidationError,
    __version__,
    aggregate_bs_eirp,
    classify_lnb_state,
    clutter_frequency_factor,
    clutter_loss,
    free_space_path_loss,
    fss_off_axis_gain,
    max_permissible_interference_dbm,
    noise_floor_dbw,
    off_axis_angle,
    phi_min,
    power_sum,
    satellite_signal_power_dbm,
    to_dbm,
    to_dbw,
)
