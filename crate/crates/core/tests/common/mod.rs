#![allow(dead_code)]

pub mod dn;
pub mod figures;
