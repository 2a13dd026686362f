pub mod cat;
pub mod catalog;
pub mod cli;
pub mod cover;
pub mod cubical;
pub mod dipath;
pub mod dot;
pub mod error;
pub mod model;
pub mod pv;
pub mod report;
pub mod topology;
pub mod vankampen;
