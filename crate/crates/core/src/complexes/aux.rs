use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::LambdaScalar;

/// Data that cup products would provide, for inputs without a triangulation.
///
/// Mod-2 cocycles are given as one 0/1 value per cell of the orbit space.
/// `basis_cocycles` are integral cochains on the cover, one `[u, v]` pair per
/// cell (values on `e` and `tau*e`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuxData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_cocycle: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_square_cocycle: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x_cube_cocycle: Option<Vec<i64>>,
    /// Asserted nonvanishing of `x^k`, keyed by `"3"` and `"4"`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub x_power_nonzero: BTreeMap<String, bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub square_form: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_cocycles: Option<Vec<Vec<LambdaScalar>>>,
}

impl AuxData {
    pub fn is_empty(&self) -> bool {
        *self == AuxData::default()
    }

    pub fn power_flag(&self, k: u32) -> Option<bool> {
        self.x_power_nonzero.get(&k.to_string()).copied()
    }
}
