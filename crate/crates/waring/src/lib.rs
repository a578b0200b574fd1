//! Exact Waring rank computation for binary forms.

pub mod binomial;
pub mod cli;
pub mod cover;
pub mod error;
pub mod field;
pub mod forms;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod sylvester;

pub use error::{Error, Result};
