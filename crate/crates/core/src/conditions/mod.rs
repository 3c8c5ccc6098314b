//! Local combinatorial curvature conditions and descent on balls.

mod descent;
mod largeness;
mod sd2star;
mod wheels;

pub use descent::{
    check_sdn, check_sdn_tilde, collapse_schedule, is_weakly_bridged, is_weakly_systolic, project, replay_schedule,
    CollapseSchedule, CollapseStep, Projection,
};

pub use largeness::{check_flag, check_k_large, check_locally_k_large, check_locally_k_large_exhaustive};
pub use sd2star::{check_sd2_star, check_sd2_star_k, check_sd2_star_links, PendantMode};
pub use wheels::{
    enumerate_pendant_wheels, enumerate_wheels, for_each_pendant_wheel, for_each_wheel, pendant_wheels_at, wheels_at,
    Wheel, WheelWithPendant,
};
