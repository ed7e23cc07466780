//! The Iwahori-Hecke algebra `H` of `(W, L)` over `Z[v, v^-1]`.
//!
//! Elements are finite combinations of the standard basis `T_w`. All
//! products are computed by multiplying by one generator at a time:
//!
//! ```text
//! T_s T_w = T_sw                             if |sw| > |w|
//! T_s T_w = T_sw + (v^L(s) - v^-L(s)) T_w    if |sw| < |w|
//! ```
//!
//! An algebra lives on a [`GroupTable`]: the whole group when `W` is finite,
//! or a length ball for affine groups, in which case products that leave
//! the ball are an error rather than a silent truncation.

mod weight;

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use dashu_ratio::RBig;
use once_cell::race::OnceBox;

pub use weight::{in_catalog, weight_catalog, WeightFunction};

use crate::coxeter::{CoxeterError, CoxeterSystem, ElemId, Element, GroupTable};
use crate::exec::Executor;
use crate::laurent::{Degree, LaurentError, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HeckeError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("expected {expected} weights, got {got}")]
    WeightLength { expected: usize, got: usize },
    #[error("weight of generator {generator} must be positive, got {value}")]
    NonPositiveWeight { generator: usize, value: i64 },
    #[error("generators {i} and {j} are joined by an odd bond and need equal weights")]
    OddBondMismatch { i: usize, j: usize },
    #[error("operands belong to different Hecke algebras")]
    MixedAlgebras,
    #[error("product leaves the length ball the algebra was built on")]
    OutsideBall,
    #[error("element is not in the algebra's group table")]
    UnknownElement,
    #[error("an unbounded scan needs a finite group")]
    InfiniteGroup,
    #[error("the scan radius {radius} needs a table of radius {needed}")]
    RadiusTooSmall { radius: usize, needed: usize },
}

/// A finite `Z[v, v^-1]`-combination of the `T_w`, sorted by element id.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HeckeElement {
    tag: u64,
    terms: Vec<(ElemId, LaurentPoly)>,
}

impl HeckeElement {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(ElemId, LaurentPoly)] {
        &self.terms
    }

    pub fn coeff(&self, w: ElemId) -> LaurentPoly {
        match self.terms.binary_search_by_key(&w, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => LaurentPoly::zero(),
        }
    }

    pub fn support(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.terms.iter().map(|t| t.0)
    }

    /// Multiplies every coefficient by `p`.
    pub fn scale(&self, p: &LaurentPoly) -> HeckeElement {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| (*w, c * p))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        HeckeElement { tag: self.tag, terms }
    }

    fn combine(&self, other: &HeckeElement, negate: bool) -> HeckeElement {
        assert_eq!(self.tag, other.tag, "operands belong to different Hecke algebras");
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            let next = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => a.next().cloned(),
                (None, Some(_)) => b.next().map(|(w, c)| (*w, if negate { -c } else { c.clone() })),
                (Some(x), Some(y)) if x.0 < y.0 => a.next().cloned(),
                (Some(x), Some(y)) if x.0 > y.0 => {
                    b.next().map(|(w, c)| (*w, if negate { -c } else { c.clone() }))
                }
                _ => {
                    let (w, c) = a.next().unwrap();
                    let mut c = c.clone();
                    c.add_shifted(&b.next().unwrap().1, 0, negate);
                    Some((*w, c))
                }
            };
            if let Some(t) = next.filter(|t| !t.1.is_zero()) {
                terms.push(t);
            }
        }
        HeckeElement { tag: self.tag, terms }
    }
}

/// Panics if the operands come from different algebras.
impl Add for &HeckeElement {
    type Output = HeckeElement;
    fn add(self, rhs: &HeckeElement) -> HeckeElement {
        self.combine(rhs, false)
    }
}

/// Panics if the operands come from different algebras.
impl Sub for &HeckeElement {
    type Output = HeckeElement;
    fn sub(self, rhs: &HeckeElement) -> HeckeElement {
        self.combine(rhs, true)
    }
}

impl Neg for &HeckeElement {
    type Output = HeckeElement;
    fn neg(self) -> HeckeElement {
        HeckeElement { tag: self.tag, terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect() }
    }
}

/// Result of the `f`-degree probe over a length ball.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FProbe {
    /// `None` when the whole finite group was scanned.
    pub radius: Option<usize>,
    /// Largest degree of any `f_{x,y,z}` seen.
    pub max_degree: i32,
    /// Least `(x, y, z)` attaining it.
    pub witness: (ElemId, ElemId, ElemId),
    pub pairs_scanned: usize,
}

/// The Hecke algebra of a Coxeter system with a weight function.
#[derive(Debug)]
pub struct HeckeAlgebra {
    table: Arc<GroupTable>,
    weight: WeightFunction,
    tag: u64,
    xi: Vec<LaurentPoly>,
    bar_cache: Vec<OnceBox<Vec<(ElemId, LaurentPoly)>>>,
}

/// Dense coordinate vector over the table.
pub(crate) type Dense = Vec<LaurentPoly>;

impl HeckeAlgebra {
    /// Algebra over the whole group; `W` must be finite.
    pub fn new(system: &CoxeterSystem, weight: WeightFunction) -> Result<Self, HeckeError> {
        Ok(Self::from_table(Arc::new(GroupTable::full(system)?), weight))
    }

    /// Algebra restricted to elements of length at most `radius`.
    pub fn with_radius(
        system: &CoxeterSystem,
        weight: WeightFunction,
        radius: usize,
    ) -> Result<Self, HeckeError> {
        Ok(Self::from_table(Arc::new(GroupTable::ball(system, radius)?), weight))
    }

    pub fn from_table(table: Arc<GroupTable>, weight: WeightFunction) -> Self {
        let xi = weight.values().iter().map(|&l| LaurentPoly::xi(l as i32)).collect();
        let tag = fingerprint(&table, &weight);
        let bar_cache = (0..table.len()).map(|_| OnceBox::new()).collect();
        HeckeAlgebra { table, weight, tag, xi, bar_cache }
    }

    pub fn table(&self) -> &GroupTable {
        &self.table
    }

    pub fn shared_table(&self) -> Arc<GroupTable> {
        self.table.clone()
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.table.system()
    }

    pub fn weight(&self) -> &WeightFunction {
        &self.weight
    }

    /// Hash of the Coxeter matrix, weights and table size.
    pub fn fingerprint(&self) -> u64 {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.table.len()
    }

    pub fn id(&self, w: &Element) -> Result<ElemId, HeckeError> {
        self.table.id_of(w).ok_or(HeckeError::UnknownElement)
    }

    pub fn id_of_word(&self, word: &[usize]) -> Result<ElemId, HeckeError> {
        let w = self.system().normal_form(word)?;
        self.id(&w)
    }

    pub fn zero(&self) -> HeckeElement {
        HeckeElement { tag: self.tag, terms: Vec::new() }
    }

    pub fn one(&self) -> HeckeElement {
        self.basis(ElemId::IDENTITY)
    }

    /// `T_w`.
    pub fn basis(&self, w: ElemId) -> HeckeElement {
        self.monomial(w, LaurentPoly::one())
    }

    /// `p T_w`.
    pub fn monomial(&self, w: ElemId, p: LaurentPoly) -> HeckeElement {
        let terms = if p.is_zero() { Vec::new() } else { vec![(w, p)] };
        HeckeElement { tag: self.tag, terms }
    }

    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (ElemId, LaurentPoly)>,
    ) -> Result<HeckeElement, HeckeError> {
        let mut dense = self.dense_zero();
        for (w, p) in terms {
            let slot = dense.get_mut(w.index()).ok_or(HeckeError::UnknownElement)?;
            *slot += &p;
        }
        Ok(self.sparse(dense))
    }

    /// Coordinates keyed by canonical words.
    pub fn to_elements(&self, h: &HeckeElement) -> Vec<(Element, LaurentPoly)> {
        h.terms.iter().map(|(w, p)| (self.table.element(*w).clone(), p.clone())).collect()
    }

    fn check(&self, h: &HeckeElement) -> Result<(), HeckeError> {
        if h.tag == self.tag {
            Ok(())
        } else {
            Err(HeckeError::MixedAlgebras)
        }
    }

    pub(crate) fn dense_zero(&self) -> Dense {
        vec![LaurentPoly::zero(); self.dim()]
    }

    pub(crate) fn dense(&self, h: &HeckeElement) -> Dense {
        let mut d = self.dense_zero();
        for (w, p) in &h.terms {
            d[w.index()] = p.clone();
        }
        d
    }

    pub(crate) fn sparse(&self, d: Dense) -> HeckeElement {
        let terms = d
            .into_iter()
            .enumerate()
            .filter(|(_, p)| !p.is_zero())
            .map(|(i, p)| (ElemId(i as u32), p))
            .collect();
        HeckeElement { tag: self.tag, terms }
    }

    /// In place `h -> T_s h` (left) or `h -> h T_s` (right).
    ///
    /// Elements pair up as `{x, y}` with `y = sx > x` (or `y = xs`); on such a
    /// pair `a T_x + b T_y` maps to `b T_x + (a + xi b) T_y`.
    pub(crate) fn gen_mul(&self, s: usize, h: &mut [LaurentPoly], left: bool) -> Result<(), HeckeError> {
        let l = self.weight.value(s);
        for x in self.table.ids() {
            let partner = if left { self.table.lmul(s, x) } else { self.table.rmul(x, s) };
            match partner {
                Some(y) if y > x => {
                    let (xi, yi) = (x.index(), y.index());
                    if h[xi].is_zero() && h[yi].is_zero() {
                        continue;
                    }
                    let (lo, hi) = h.split_at_mut(yi);
                    let (a, b) = (&mut lo[xi], &mut hi[0]);
                    core::mem::swap(a, b);
                    if !a.is_zero() {
                        b.add_shifted(a, l, false);
                        b.add_shifted(a, -l, true);
                    }
                }
                Some(_) => {}
                None => {
                    if !h[x.index()].is_zero() {
                        return Err(HeckeError::OutsideBall);
                    }
                }
            }
        }
        Ok(())
    }

    /// `h -> T_w h`.
    pub(crate) fn left_mul_basis(&self, w: ElemId, h: &mut [LaurentPoly]) -> Result<(), HeckeError> {
        for s in self.table.element(w).letters().rev() {
            self.gen_mul(s, h, true)?;
        }
        Ok(())
    }

    /// `h -> h T_w`.
    pub(crate) fn right_mul_basis(&self, h: &mut [LaurentPoly], w: ElemId) -> Result<(), HeckeError> {
        for s in self.table.element(w).letters() {
            self.gen_mul(s, h, false)?;
        }
        Ok(())
    }

    /// `acc += p * h`.
    pub(crate) fn axpy(acc: &mut [LaurentPoly], p: &LaurentPoly, h: &[LaurentPoly]) {
        for (a, c) in acc.iter_mut().zip(h) {
            if !c.is_zero() {
                *a += &(p * c);
            }
        }
    }

    /// The product in `H`.
    pub fn t_mul(&self, a: &HeckeElement, b: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.check(a)?;
        self.check(b)?;
        let base = self.dense(b);
        let mut acc = self.dense_zero();
        for (x, p) in &a.terms {
            let mut tmp = base.clone();
            self.left_mul_basis(*x, &mut tmp)?;
            Self::axpy(&mut acc, p, &tmp);
        }
        Ok(self.sparse(acc))
    }

    /// `T_x T_y = sum_z f_{x,y,z} T_z`.
    pub fn f_constants(&self, x: ElemId, y: ElemId) -> Result<HeckeElement, HeckeError> {
        let mut d = self.dense_zero();
        d[y.index()] = LaurentPoly::one();
        self.left_mul_basis(x, &mut d)?;
        Ok(self.sparse(d))
    }

    /// `bar(T_w)`, memoized. With `w = s w'` reduced,
    /// `bar(T_w) = (T_s - xi_s) bar(T_w')`.
    pub fn bar_basis(&self, w: ElemId) -> Result<&[(ElemId, LaurentPoly)], HeckeError> {
        if let Some(v) = self.bar_cache[w.index()].get() {
            return Ok(v);
        }
        let value = if w == ElemId::IDENTITY {
            vec![(w, LaurentPoly::one())]
        } else {
            let s = self.table.element(w).letters().next().unwrap();
            let tail = self.table.lmul(s, w).expect("descent stays in table");
            let prev = self.bar_basis(tail)?;
            let mut d = self.dense_zero();
            for (x, p) in prev {
                d[x.index()] = p.clone();
            }
            let orig = d.clone();
            self.gen_mul(s, &mut d, true)?;
            let xi = &self.xi[s];
            for (slot, p) in d.iter_mut().zip(&orig) {
                if !p.is_zero() {
                    *slot -= &(xi * p);
                }
            }
            self.sparse(d).terms
        };
        // a concurrent fill computes the same value; either copy may win
        let _ = self.bar_cache[w.index()].set(alloc::boxed::Box::new(value));
        Ok(self.bar_cache[w.index()].get().unwrap())
    }

    /// The bar involution: `v -> v^-1` on coefficients, `T_w -> T_{w^-1}^-1`.
    pub fn bar(&self, h: &HeckeElement) -> Result<HeckeElement, HeckeError> {
        self.check(h)?;
        let mut acc = self.dense_zero();
        for (w, p) in &h.terms {
            let pb = p.bar();
            for (x, q) in self.bar_basis(*w)? {
                acc[x.index()] += &(&pb * q);
            }
        }
        Ok(self.sparse(acc))
    }

    /// Evaluation of the coefficients at `v = c`, the image in `H_c`.
    pub fn specialize(&self, h: &HeckeElement, c: &RBig) -> Result<Vec<(ElemId, RBig)>, HeckeError> {
        self.check(h)?;
        let mut out = Vec::new();
        for (w, p) in &h.terms {
            let value = p.eval(c)?;
            if !value.is_zero() {
                out.push((*w, value));
            }
        }
        Ok(out)
    }

    /// Product in `H_c` of two specialized elements, using the structure
    /// constants `f_{x,y,z}` evaluated at `c`.
    pub fn specialized_mul(
        &self,
        a: &[(ElemId, RBig)],
        b: &[(ElemId, RBig)],
        c: &RBig,
    ) -> Result<Vec<(ElemId, RBig)>, HeckeError> {
        let mut acc = vec![RBig::ZERO; self.dim()];
        for (x, ax) in a {
            for (y, by) in b {
                let coeff = ax * by;
                for (z, f) in self.f_constants(*x, *y)?.terms() {
                    acc[z.index()] += &coeff * f.eval(c)?;
                }
            }
        }
        Ok(acc
            .into_iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(i, r)| (ElemId(i as u32), r))
            .collect())
    }

    /// Largest `deg f_{x,y,z}` over `|x|, |y| <= radius` (the whole group
    /// when `radius` is `None`), with the least triple attaining it.
    pub fn f_bound_probe<E: Executor>(
        &self,
        radius: Option<usize>,
        exec: &E,
    ) -> Result<FProbe, HeckeError> {
        let scan: Vec<ElemId> = match radius {
            None if self.table.is_complete() => self.table.ids().collect(),
            None => return Err(HeckeError::InfiniteGroup),
            Some(r) => {
                if let Some(tr) = self.table.radius() {
                    if tr < 2 * r {
                        return Err(HeckeError::RadiusTooSmall { radius: r, needed: 2 * r });
                    }
                }
                self.table.ids().take_while(|&x| self.table.length(x) <= r).collect()
            }
        };
        let columns = exec.map(scan.len(), |j| self.f_probe_column(&scan, scan[j]));
        let mut best: Option<(i32, (ElemId, ElemId, ElemId))> = None;
        for (j, col) in columns.into_iter().enumerate() {
            let (deg, x, z) = col?;
            let cand = (deg, (x, scan[j], z));
            best = match best {
                Some(b) if b.0 > cand.0 || (b.0 == cand.0 && b.1 <= cand.1) => Some(b),
                _ => Some(cand),
            };
        }
        let (max_degree, witness) = best.expect("identity is always scanned");
        Ok(FProbe { radius, max_degree, witness, pairs_scanned: scan.len() * scan.len() })
    }

    /// For fixed `y`, the best `(deg, x, z)` over the scanned `x`, built by
    /// `T_x T_y = T_s (T_{sx} T_y)` in id order.
    fn f_probe_column(&self, scan: &[ElemId], y: ElemId) -> Result<(i32, ElemId, ElemId), HeckeError> {
        let mut rows: Vec<Dense> = Vec::with_capacity(scan.len());
        let mut best: Option<(i32, ElemId, ElemId)> = None;
        for &x in scan {
            let row = if x == ElemId::IDENTITY {
                let mut d = self.dense_zero();
                d[y.index()] = LaurentPoly::one();
                d
            } else {
                let s = self.table.element(x).letters().next().unwrap();
                let prev = self.table.lmul(s, x).expect("descent stays in table");
                let mut d = rows[prev.index()].clone();
                self.gen_mul(s, &mut d, true)?;
                d
            };
            for (z, p) in row.iter().enumerate() {
                if let Degree::Finite(deg) = p.degree() {
                    if best.map_or(true, |b| deg > b.0) {
                        best = Some((deg, x, ElemId(z as u32)));
                    }
                }
            }
            rows.push(row);
        }
        Ok(best.expect("T_e T_y is nonzero"))
    }
}

fn fingerprint(table: &GroupTable, weight: &WeightFunction) -> u64 {
    // FNV-1a over the Coxeter matrix, the weights and the table size
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    let mut eat = |x: u64| {
        for b in x.to_le_bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
    };
    let sys = table.system();
    eat(sys.rank() as u64);
    for i in 0..sys.rank() {
        for j in 0..sys.rank() {
            eat(match sys.bond(i, j) {
                crate::coxeter::Bond::Order(m) => u64::from(m),
                crate::coxeter::Bond::Infinite => u64::MAX,
            });
        }
    }
    for &v in weight.values() {
        eat(u64::from(v));
    }
    eat(table.len() as u64);
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exec::Sequential;

    fn alg(l: &str, w: &[i64]) -> HeckeAlgebra {
        let s = CoxeterSystem::from_label(l).unwrap();
        let wt = WeightFunction::new(&s, w).unwrap();
        HeckeAlgebra::new(&s, wt).unwrap()
    }

    fn v(e: i32) -> LaurentPoly {
        LaurentPoly::v_pow(e)
    }

    #[test]
    fn quadratic_relation_single_generator() {
        for l in 1..=3 {
            let h = alg("A1", &[l]);
            let s = h.basis(ElemId(1));
            let sq = h.t_mul(&s, &s).unwrap();
            let expect = &h.one() + &h.monomial(ElemId(1), LaurentPoly::xi(l as i32));
            assert_eq!(sq, expect);
        }
    }

    #[test]
    fn lengths_add() {
        let h = alg("A2", &[1, 1]);
        let s0 = h.basis(h.id_of_word(&[0]).unwrap());
        let s1 = h.basis(h.id_of_word(&[1]).unwrap());
        let prod = h.t_mul(&s0, &s1).unwrap();
        assert_eq!(prod, h.basis(h.id_of_word(&[0, 1]).unwrap()));
    }

    #[test]
    fn f_constant_examples() {
        let h = alg("A1", &[1]);
        let s = ElemId(1);
        let f = h.f_constants(s, s).unwrap();
        assert_eq!(f.coeff(ElemId::IDENTITY), LaurentPoly::one());
        assert_eq!(f.coeff(s), &v(1) - &v(-1));
        let b3 = alg("B3", &[1, 1, 2]);
        for x in b3.table().ids() {
            assert_eq!(b3.f_constants(x, ElemId::IDENTITY).unwrap(), b3.basis(x));
        }
    }

    #[test]
    fn f_support_length_and_exponent_parity() {
        let h = alg("B3", &[1, 1, 2]);
        let t = h.table();
        let l = |w: ElemId| h.weight().of(t.element(w)) as i32;
        for x in t.ids().step_by(5) {
            for y in t.ids().step_by(3) {
                for (z, f) in h.f_constants(x, y).unwrap().terms() {
                    assert!(t.length(*z) <= t.length(x) + t.length(y));
                    let parity = (l(x) + l(y) + l(*z)).rem_euclid(2);
                    assert!(f.terms().all(|(e, _)| e.rem_euclid(2) == parity));
                }
            }
        }
    }

    #[test]
    fn bar_examples() {
        let h = alg("A2", &[1, 1]);
        let e = h.one();
        assert_eq!(h.bar(&e).unwrap(), e);
        let ve = h.monomial(ElemId::IDENTITY, v(3));
        assert_eq!(h.bar(&ve).unwrap(), h.monomial(ElemId::IDENTITY, v(-3)));
        for s in [1u32, 2] {
            let ts = h.basis(ElemId(s));
            assert_eq!(h.t_mul(&h.bar(&ts).unwrap(), &ts).unwrap(), e);
        }
    }

    #[test]
    fn bar_inverts_basis_elements() {
        let h = alg("B3", &[2, 2, 1]);
        let t = h.table();
        for w in t.ids() {
            let bw = h.bar(&h.basis(w)).unwrap();
            let prod = h.t_mul(&bw, &h.basis(t.inverse(w))).unwrap();
            assert_eq!(prod, h.one(), "{}", t.element(w));
        }
    }

    #[test]
    fn specialization_at_one_is_group_algebra() {
        let h = alg("A2", &[1, 1]);
        let one = RBig::ONE;
        let s = h.basis(ElemId(1));
        let sq = h.t_mul(&s, &s).unwrap();
        assert_eq!(h.specialize(&sq, &one).unwrap(), vec![(ElemId::IDENTITY, RBig::ONE)]);
        for w in h.table().ids() {
            assert_eq!(h.specialize(&h.basis(w), &RBig::from(5)).unwrap(), vec![(w, RBig::ONE)]);
        }
        assert_eq!(
            h.specialize(&s, &RBig::ZERO),
            Err(HeckeError::Laurent(LaurentError::EvalAtZero))
        );
    }

    #[test]
    fn probe_examples() {
        let h = alg("A1", &[1]);
        let p = h.f_bound_probe(None, &Sequential).unwrap();
        assert_eq!(p.max_degree, 1);
        assert_eq!(p.witness, (ElemId(1), ElemId(1), ElemId(1)));
        assert_eq!(p.pairs_scanned, 4);
        let zero = h.f_bound_probe(Some(0), &Sequential).unwrap();
        assert_eq!(zero.max_degree, 0);
        let s = CoxeterSystem::from_label("~A1").unwrap();
        let aff = HeckeAlgebra::with_radius(&s, WeightFunction::equal(&s), 3).unwrap();
        assert_eq!(aff.f_bound_probe(None, &Sequential), Err(HeckeError::InfiniteGroup));
        assert_eq!(
            aff.f_bound_probe(Some(2), &Sequential),
            Err(HeckeError::RadiusTooSmall { radius: 2, needed: 4 })
        );
        assert!(aff.f_bound_probe(Some(1), &Sequential).is_ok());
    }

    #[test]
    fn ball_overflow_is_an_error() {
        let s = CoxeterSystem::from_label("~A2").unwrap();
        let h = HeckeAlgebra::with_radius(&s, WeightFunction::equal(&s), 2).unwrap();
        let x = h.basis(h.id_of_word(&[0, 1]).unwrap());
        let y = h.basis(h.id_of_word(&[2]).unwrap());
        assert_eq!(h.t_mul(&x, &y), Err(HeckeError::OutsideBall));
    }

    #[test]
    fn mixed_algebras_rejected() {
        let a = alg("A2", &[1, 1]);
        let b = alg("B2", &[1, 2]);
        assert_eq!(a.t_mul(&a.one(), &b.one()), Err(HeckeError::MixedAlgebras));
        assert_eq!(a.bar(&b.one()), Err(HeckeError::MixedAlgebras));
    }
}
