use alloc::vec::Vec;

use super::HeckeError;
use crate::coxeter::{CoxeterSystem, Element, Family, TypeLabel};

/// A weight function `L`, given by its positive values on the generators.
///
/// Additivity on reduced products forces `L(s_i) = L(s_j)` whenever `m_ij`
/// is odd, since `s_i` and `s_j` are then conjugate.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightFunction {
    values: Vec<u32>,
}

impl WeightFunction {
    pub fn new(system: &CoxeterSystem, values: &[i64]) -> Result<Self, HeckeError> {
        if values.len() != system.rank() {
            return Err(HeckeError::WeightLength { expected: system.rank(), got: values.len() });
        }
        let mut out = Vec::with_capacity(values.len());
        for (i, &v) in values.iter().enumerate() {
            if v <= 0 || v > i64::from(i32::MAX / 4) {
                return Err(HeckeError::NonPositiveWeight { generator: i, value: v });
            }
            out.push(v as u32);
        }
        for i in 0..out.len() {
            for j in (i + 1)..out.len() {
                if system.bond(i, j).is_odd() && out[i] != out[j] {
                    return Err(HeckeError::OddBondMismatch { i, j });
                }
            }
        }
        Ok(WeightFunction { values: out })
    }

    /// The equal-parameter weight `L = ||`.
    pub fn equal(system: &CoxeterSystem) -> Self {
        WeightFunction { values: alloc::vec![1; system.rank()] }
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, s: usize) -> i32 {
        self.values[s] as i32
    }

    pub fn is_equal_parameters(&self) -> bool {
        self.values.iter().all(|&v| v == 1)
    }

    /// `L(w)`, summed along the canonical reduced word.
    pub fn of(&self, w: &Element) -> u64 {
        w.letters().map(|s| u64::from(self.values[s])).sum()
    }
}

const AFFINE_F4: &[&[u32]] = &[&[1, 1, 1, 1, 1], &[1, 1, 1, 2, 2], &[2, 2, 2, 1, 1], &[1, 1, 1, 4, 4]];
const AFFINE_G2: &[&[u32]] = &[&[1, 1, 1], &[1, 1, 3], &[3, 3, 1], &[1, 1, 9]];

/// The admissible weight tuples recorded for an affine type, in generator
/// order. Only `~F4` and `~G2` are tabulated.
pub fn weight_catalog(ty: &TypeLabel) -> Option<&'static [&'static [u32]]> {
    match (ty.family, ty.n, ty.affine) {
        (Family::F, 4, true) => Some(AFFINE_F4),
        (Family::G, 2, true) => Some(AFFINE_G2),
        _ => None,
    }
}

pub fn in_catalog(ty: &TypeLabel, weight: &WeightFunction) -> bool {
    weight_catalog(ty).is_some_and(|c| c.iter().any(|t| *t == weight.values()))
}
