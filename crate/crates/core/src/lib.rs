//! Classification and fundamental-group computations for maximizing plane
//! sextics with a distinguished type E6 singular point, via the skeletons
//! of the associated maximal trigonal curves.

pub mod alexander;
pub mod catalog;
pub mod config;
pub mod enumeration;
pub mod fpgroup;
pub mod matching;
pub mod params;
pub mod perturb;
pub mod rows;
pub mod skeleton;
pub mod vankampen;
pub mod verify;
