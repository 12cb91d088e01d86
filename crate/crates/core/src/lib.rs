//! Root systems, Chevalley signs, concave functions, level graphs and finite
//! parahoric group computations.

pub mod chevalley_signs;
pub mod concave;
pub mod exec;
pub mod level_graphs;
pub mod parahoric_group;
pub mod report;
pub mod root_system;
pub mod steinberg;
