use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Resource caps guarding the exact counting routines.
///
/// Every counting DP checks its table size against these before allocating, so a
/// runaway parameter produces [`Error::ResourceLimit`] instead of exhausting memory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest admissible `h * m` for a single representation table.
    pub max_hm: u64,
    /// Largest multiplicity threshold `t` accepted by the extremal verifier.
    pub max_t: u64,
    /// Largest number of DP cells (summed over all part counts) in one table.
    pub max_dp_cells: u64,
    /// Largest number of lattice points enumerated in one region of `Z^d`.
    pub max_lattice_points: u64,
    /// Witness lists in serialized reports are cut to this length.
    pub witness_limit: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_hm: 10_000_000,
            max_t: 1_000_000,
            max_dp_cells: 20_000_000,
            max_lattice_points: 2_000_000,
            witness_limit: 32,
        }
    }
}

impl Caps {
    pub(crate) fn check(what: &'static str, requested: u128, limit: u64) -> Result<()> {
        if requested > limit as u128 {
            Err(Error::ResourceLimit {
                what,
                requested,
                limit: limit as u128,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_hm(&self, h: u64, m: u64) -> Result<()> {
        Self::check("h*m", h as u128 * m as u128, self.max_hm)
    }

    pub(crate) fn check_cells(&self, cells: u128) -> Result<()> {
        Self::check("dp cells", cells, self.max_dp_cells)
    }

    pub(crate) fn check_points(&self, points: u128) -> Result<()> {
        Self::check("lattice points", points, self.max_lattice_points)
    }

    pub fn check_t(&self, t: u128) -> Result<()> {
        Self::check("t", t, self.max_t)
    }
}
