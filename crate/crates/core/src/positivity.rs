//! The trace `N^w` of `h -> v^{2|w|} T_w h T_{w^-1}` on `H` for equal
//! parameters, and the positive conjugacy classes.
//!
//! A class `C` is positive when `N^w` has nonnegative coefficients for
//! `w` of minimal length in `C`.

use alloc::vec::Vec;

use dashu_int::IBig;

use crate::coxeter::{ConjugacyClass, CoxeterError, ElemId, Element};
use crate::exec::Executor;
use crate::hecke::{HeckeAlgebra, HeckeError};
use crate::laurent::{Cone, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PositivityError {
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error("traces need a finite group")]
    InfiniteGroup,
    #[error("traces need equal parameters")]
    UnequalParameters,
    #[error("internal inconsistency in class {class}: {what}")]
    Inconsistent { class: usize, what: &'static str },
}

/// Classes flagged for spot checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Fixture {
    Identity,
    Coxeter,
    /// The class of a central longest element.
    CentralLongest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceChecks {
    pub constant_on_minimal: bool,
    pub even: bool,
    pub centralizer_identity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceReport {
    pub class_id: usize,
    pub representative: Element,
    pub class_size: usize,
    pub min_length: usize,
    /// `N^w` for `w` in `C_min`.
    pub n_poly: LaurentPoly,
    pub positive: bool,
    pub centralizer_order: u64,
    pub checks: TraceChecks,
    /// How many members of `C_min` were evaluated.
    pub evaluated: usize,
    pub fixtures: Vec<Fixture>,
}

fn require_trace_setting(alg: &HeckeAlgebra) -> Result<(), PositivityError> {
    if !alg.table().is_complete() {
        return Err(PositivityError::InfiniteGroup);
    }
    if !alg.weight().is_equal_parameters() {
        return Err(PositivityError::UnequalParameters);
    }
    Ok(())
}

/// `N^w = sum_x [T_x] v^{2|w|} T_w T_x T_{w^-1}`.
pub fn n_trace<E: Executor>(alg: &HeckeAlgebra, w: ElemId, exec: &E) -> Result<LaurentPoly, PositivityError> {
    require_trace_setting(alg)?;
    let w_inv = alg.table().inverse(w);
    let terms = exec.map(alg.dim(), |x| -> Result<LaurentPoly, HeckeError> {
        let mut d = alg.dense_zero();
        d[x] = LaurentPoly::one();
        alg.left_mul_basis(w, &mut d)?;
        alg.right_mul_basis(&mut d, w_inv)?;
        Ok(core::mem::take(&mut d[x]))
    });
    let mut sum = LaurentPoly::zero();
    for t in terms {
        sum += &t?;
    }
    Ok(sum.shift(2 * alg.table().length(w) as i32))
}

/// Evaluates `N^w` on `C_min` (at most `limit` members when given) and
/// checks constancy, evenness and `N^w(1) = |Z(w)|`.
pub fn class_report<E: Executor>(
    alg: &HeckeAlgebra,
    class: &ConjugacyClass,
    class_id: usize,
    limit: Option<usize>,
    exec: &E,
) -> Result<TraceReport, PositivityError> {
    require_trace_setting(alg)?;
    let count = limit.map_or(class.minimal.len(), |l| l.clamp(1, class.minimal.len()));
    let bad = |what| PositivityError::Inconsistent { class: class_id, what };
    let n_poly = n_trace(alg, class.minimal[0], exec)?;
    for &w in &class.minimal[1..count] {
        if n_trace(alg, w, exec)? != n_poly {
            return Err(bad("N^w is not constant on C_min"));
        }
    }
    if !n_poly.in_cone(Cone::EvenIntegral) {
        return Err(bad("N^w is not in Z[v^2]"));
    }
    if n_poly.eval_at_one() != IBig::from(class.centralizer_order) {
        return Err(bad("N^w(1) differs from the centralizer order"));
    }
    Ok(TraceReport {
        class_id,
        representative: alg.table().element(class.representative).clone(),
        class_size: class.size(),
        min_length: class.min_length,
        positive: n_poly.in_cone(Cone::EvenNatural),
        n_poly,
        centralizer_order: class.centralizer_order,
        checks: TraceChecks { constant_on_minimal: true, even: true, centralizer_identity: true },
        evaluated: count,
        fixtures: Vec::new(),
    })
}

/// One report per conjugacy class, in class order, with fixtures marked.
/// `progress` receives (classes done, total).
pub fn classify_positive<E: Executor>(
    alg: &HeckeAlgebra,
    limit: Option<usize>,
    exec: &E,
    mut progress: impl FnMut(usize, usize),
) -> Result<Vec<TraceReport>, PositivityError> {
    require_trace_setting(alg)?;
    let table = alg.table();
    let classes = table.conjugacy_classes()?;
    let special = table.special_elements().ok();
    let mut reports = Vec::with_capacity(classes.len());
    for (i, class) in classes.iter().enumerate() {
        let mut r = class_report(alg, class, i, limit, exec)?;
        if class.representative == ElemId::IDENTITY {
            r.fixtures.push(Fixture::Identity);
        }
        if let Some(sp) = &special {
            if sp.coxeter_class.representative == class.representative {
                r.fixtures.push(Fixture::Coxeter);
            }
            let w0 = table.longest().expect("complete table");
            if sp.longest_is_central && class.contains(w0) {
                r.fixtures.push(Fixture::CentralLongest);
            }
        }
        progress(i + 1, classes.len());
        reports.push(r);
    }
    Ok(reports)
}
