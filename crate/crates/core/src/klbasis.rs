//! The Kazhdan-Lusztig basis `c_w` for an arbitrary weight function, the
//! structure constants `h_{x,y,z}`, the `a`-function and the ring `J`.
//!
//! `c_w = sum_y p_{y,w} T_y` is found by a triangular solve. Writing
//! `bar(T_y) = sum_x r_{x,y} T_x`, bar invariance reads
//!
//! ```text
//! p_{x,w} - bar(p_{x,w}) = sum_{y > x} bar(p_{y,w}) r_{x,y}
//! ```
//!
//! and since `p_{x,w}` has only negative powers of `v` for `x != w`, it is
//! the negative part of the right-hand side. Going down from `w` in id order
//! every term on the right is already known.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use dashu_int::IBig;
use dashu_ratio::RBig;
use once_cell::race::OnceBox;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coxeter::ElemId;
use crate::exec::Executor;
use crate::hecke::{Dense, HeckeAlgebra, HeckeElement, HeckeError};
use crate::laurent::{Degree, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum KlError {
    #[error(transparent)]
    Hecke(#[from] HeckeError),
    #[error("this computation needs a finite group")]
    InfiniteGroup,
    #[error("internal inconsistency: {0}")]
    Inconsistent(&'static str),
}

/// `c_w` in T-coordinates: `(y, p_{y,w})` sorted by `y`, ending with `(w, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlElement {
    pub top: ElemId,
    pub coords: Vec<(ElemId, LaurentPoly)>,
}

/// Write-once cache of KL elements over one Hecke algebra.
#[derive(Debug)]
pub struct KlBasis {
    algebra: HeckeAlgebra,
    cache: Vec<OnceBox<KlElement>>,
}

/// `a(z)` for every `z`, with the least pair `(x, y)` attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AFunction {
    pub values: Vec<i32>,
    pub witness: Vec<(ElemId, ElemId)>,
}

impl AFunction {
    pub fn get(&self, z: ElemId) -> i32 {
        self.values[z.index()]
    }
}

impl KlBasis {
    pub fn new(algebra: HeckeAlgebra) -> Self {
        let cache = (0..algebra.dim()).map(|_| OnceBox::new()).collect();
        KlBasis { algebra, cache }
    }

    pub fn algebra(&self) -> &HeckeAlgebra {
        &self.algebra
    }

    fn require_finite(&self) -> Result<(), KlError> {
        if self.algebra.table().is_complete() {
            Ok(())
        } else {
            Err(KlError::InfiniteGroup)
        }
    }

    /// `c_w`, computed on first use.
    pub fn element(&self, w: ElemId) -> Result<&KlElement, KlError> {
        if let Some(c) = self.cache[w.index()].get() {
            return Ok(c);
        }
        let c = self.solve(w)?;
        let _ = self.cache[w.index()].set(Box::new(c));
        Ok(self.cache[w.index()].get().unwrap())
    }

    /// Installs a previously computed `c_w`; returns false if one was
    /// already present.
    pub fn insert(&self, c: KlElement) -> bool {
        let slot = &self.cache[c.top.index()];
        slot.set(Box::new(c)).is_ok()
    }

    /// The elements computed so far, in id order.
    pub fn computed(&self) -> impl Iterator<Item = &KlElement> + '_ {
        self.cache.iter().filter_map(OnceBox::get)
    }

    /// Computes every `c_w` of a finite group.
    pub fn precompute<E: Executor>(&self, exec: &E) -> Result<(), KlError> {
        self.require_finite()?;
        // bar(T_w) fills along prefixes; warm it in order so workers share it
        for w in self.algebra.table().ids() {
            self.algebra.bar_basis(w)?;
        }
        exec.map(self.algebra.dim(), |i| self.element(ElemId(i as u32)).map(|_| ()))
            .into_iter()
            .collect()
    }

    fn solve(&self, w: ElemId) -> Result<KlElement, KlError> {
        let alg = &self.algebra;
        let interval: Vec<ElemId> = alg.bar_basis(w)?.iter().map(|t| t.0).collect();
        let mut acc = alg.dense_zero();
        let mut coords = Vec::with_capacity(interval.len());
        let add_bar = |acc: &mut Dense, p: &LaurentPoly, y: ElemId| -> Result<(), KlError> {
            let pb = p.bar();
            for (x, r) in alg.bar_basis(y)? {
                acc[x.index()] += &(&pb * r);
            }
            Ok(())
        };
        add_bar(&mut acc, &LaurentPoly::one(), w)?;
        coords.push((w, LaurentPoly::one()));
        for &x in interval.iter().rev().skip(1) {
            let q = &acc[x.index()];
            let p = q.truncate_below(0);
            if &(&p - &p.bar()) != q {
                return Err(KlError::Inconsistent("bar-invariance equation has no solution"));
            }
            if !p.is_zero() {
                add_bar(&mut acc, &p, x)?;
                coords.push((x, p));
            }
        }
        coords.reverse();
        Ok(KlElement { top: w, coords })
    }

    /// `c_w` as an element of `H`.
    pub fn as_hecke(&self, w: ElemId) -> Result<HeckeElement, KlError> {
        let c = self.element(w)?;
        Ok(self.algebra.from_terms(c.coords.iter().cloned())?)
    }

    /// Re-expands a T-basis vector in the c-basis, consuming it.
    fn dense_to_c(&self, mut a: Dense) -> Result<Vec<(ElemId, LaurentPoly)>, KlError> {
        let mut out = Vec::new();
        for z in (0..a.len()).rev() {
            if a[z].is_zero() {
                continue;
            }
            let b = core::mem::take(&mut a[z]);
            let cz = self.element(ElemId(z as u32))?;
            for (u, p) in &cz.coords[..cz.coords.len() - 1] {
                a[u.index()] -= &(&b * p);
            }
            out.push((ElemId(z as u32), b));
        }
        out.reverse();
        Ok(out)
    }

    /// Coordinates of `h` in the c-basis.
    pub fn to_c_basis(&self, h: &HeckeElement) -> Result<Vec<(ElemId, LaurentPoly)>, KlError> {
        self.dense_to_c(self.algebra.dense(h))
    }

    /// `sum_z b_z c_z` in T-coordinates.
    pub fn from_c_basis(&self, coords: &[(ElemId, LaurentPoly)]) -> Result<HeckeElement, KlError> {
        let mut acc = self.algebra.dense_zero();
        for (z, b) in coords {
            for (u, p) in &self.element(*z)?.coords {
                acc[u.index()] += &(b * p);
            }
        }
        Ok(self.algebra.sparse(acc))
    }

    /// `c_x c_y = sum_z h_{x,y,z} c_z`.
    pub fn h_constants(&self, x: ElemId, y: ElemId) -> Result<Vec<(ElemId, LaurentPoly)>, KlError> {
        let alg = &self.algebra;
        let cy = alg.dense(&self.as_hecke(y)?);
        let mut acc = alg.dense_zero();
        for (u, p) in &self.element(x)?.coords {
            let mut tmp = cy.clone();
            alg.left_mul_basis(*u, &mut tmp)?;
            HeckeAlgebra::axpy(&mut acc, p, &tmp);
        }
        self.dense_to_c(acc)
    }

    /// For fixed `y`, calls `visit(x, h_{x,y,-})` for every `x` in id order.
    /// `T_u c_y` is built for all `u` by `T_u c_y = T_s (T_{su} c_y)`.
    fn h_column<F>(&self, y: ElemId, mut visit: F) -> Result<(), KlError>
    where
        F: FnMut(ElemId, Vec<(ElemId, LaurentPoly)>),
    {
        let alg = &self.algebra;
        let table = alg.table();
        let mut rows: Vec<Dense> = Vec::with_capacity(table.len());
        for u in table.ids() {
            let row = if u == ElemId::IDENTITY {
                alg.dense(&self.as_hecke(y)?)
            } else {
                let s = table.element(u).letters().next().unwrap();
                let prev = table.lmul(s, u).expect("complete table");
                let mut d = rows[prev.index()].clone();
                alg.gen_mul(s, &mut d, true)?;
                d
            };
            rows.push(row);
        }
        for x in table.ids() {
            let mut acc = alg.dense_zero();
            for (u, p) in &self.element(x)?.coords {
                HeckeAlgebra::axpy(&mut acc, p, &rows[u.index()]);
            }
            visit(x, self.dense_to_c(acc)?);
        }
        Ok(())
    }

    /// `a(z) = max_{x,y} deg h_{x,y,z}` over the whole finite group.
    pub fn a_function<E: Executor>(&self, exec: &E) -> Result<AFunction, KlError> {
        self.require_finite()?;
        self.precompute(exec)?;
        let n = self.algebra.dim();
        let columns = exec.map(n, |y| {
            let mut best: Vec<Option<(i32, ElemId)>> = vec![None; n];
            self.h_column(ElemId(y as u32), |x, h| {
                for (z, p) in h {
                    if let Degree::Finite(d) = p.degree() {
                        let slot = &mut best[z.index()];
                        if slot.map_or(true, |b| d > b.0) {
                            *slot = Some((d, x));
                        }
                    }
                }
            })
            .map(|_| best)
        });
        let mut values = vec![i32::MIN; n];
        let mut witness = vec![(ElemId::IDENTITY, ElemId::IDENTITY); n];
        let mut seen = vec![false; n];
        for (y, col) in columns.into_iter().enumerate() {
            for (z, entry) in col?.into_iter().enumerate() {
                if let Some((d, x)) = entry {
                    let cand = (x, ElemId(y as u32));
                    if !seen[z] || d > values[z] || (d == values[z] && cand < witness[z]) {
                        values[z] = d;
                        witness[z] = cand;
                        seen[z] = true;
                    }
                }
            }
        }
        if values.iter().any(|&a| a < 0) {
            return Err(KlError::Inconsistent("a(z) < 0 although h_{e,z,z} = 1"));
        }
        Ok(AFunction { values, witness })
    }

    /// The structure constants of `J`, from the leading coefficients
    /// `gamma_{x,y,z^-1} = [v^a(z)] h_{x,y,z}`.
    pub fn j_ring<E: Executor>(&self, a: &AFunction, exec: &E) -> Result<JRing, KlError> {
        self.require_finite()?;
        let n = self.algebra.dim();
        let columns = exec.map(n, |y| {
            let mut col: Vec<Vec<(ElemId, IBig)>> = Vec::with_capacity(n);
            self.h_column(ElemId(y as u32), |_, h| {
                let row = h
                    .into_iter()
                    .map(|(z, p)| {
                        let g = p.coeff(a.get(z));
                        (z, g)
                    })
                    .filter(|(_, g)| !g.is_zero())
                    .collect();
                col.push(row);
            })
            .map(|_| col)
        });
        let mut products = vec![Vec::new(); n * n];
        for (y, col) in columns.into_iter().enumerate() {
            for (x, row) in col?.into_iter().enumerate() {
                products[x * n + y] = row;
            }
        }
        let inverse = self.algebra.table().ids().map(|z| self.algebra.table().inverse(z)).collect();
        Ok(JRing { n, products, inverse })
    }
}

/// A sparse element of `J`: `(w, coefficient of t_w)` sorted by `w`.
pub type JElement = Vec<(ElemId, IBig)>;

/// The ring `J` with basis `t_w` and `t_x t_y = sum_z gamma_{x,y,z^-1} t_z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JRing {
    n: usize,
    products: Vec<JElement>,
    inverse: Vec<ElemId>,
}

/// How many triples the associativity check visits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckMode {
    Exhaustive,
    Sampled { count: usize, seed: u64 },
}

impl CheckMode {
    /// Groups at most this large are always checked exhaustively.
    pub const EXHAUSTIVE_LIMIT: usize = 400;
    pub const DEFAULT_SAMPLES: usize = 20_000;

    pub fn auto(order: usize, force_exhaustive: bool, seed: u64) -> Self {
        if force_exhaustive || order <= Self::EXHAUSTIVE_LIMIT {
            CheckMode::Exhaustive
        } else {
            CheckMode::Sampled { count: Self::DEFAULT_SAMPLES, seed }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociativityReport {
    pub mode: CheckMode,
    pub triples_checked: usize,
    /// First failing `(x, y, z)` in scan order.
    pub counterexample: Option<(ElemId, ElemId, ElemId)>,
}

impl AssociativityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

impl JRing {
    pub fn order(&self) -> usize {
        self.n
    }

    /// `t_x t_y`.
    pub fn product(&self, x: ElemId, y: ElemId) -> &JElement {
        &self.products[x.index() * self.n + y.index()]
    }

    /// `gamma_{x,y,z}`, the coefficient of `t_{z^-1}` in `t_x t_y`.
    pub fn gamma(&self, x: ElemId, y: ElemId, z: ElemId) -> IBig {
        let target = self.inverse[z.index()];
        let row = self.product(x, y);
        match row.binary_search_by_key(&target, |t| t.0) {
            Ok(i) => row[i].1.clone(),
            Err(_) => IBig::ZERO,
        }
    }

    /// Nonzero `(x, y, z, gamma_{x,y,z^-1})` in id order.
    pub fn entries(&self) -> impl Iterator<Item = (ElemId, ElemId, ElemId, &IBig)> + '_ {
        let n = self.n;
        self.products.iter().enumerate().flat_map(move |(k, row)| {
            let (x, y) = (ElemId((k / n) as u32), ElemId((k % n) as u32));
            row.iter().map(move |(z, g)| (x, y, *z, g))
        })
    }

    pub fn mul(&self, a: &[(ElemId, IBig)], b: &[(ElemId, IBig)]) -> JElement {
        let mut acc: BTreeMap<ElemId, IBig> = BTreeMap::new();
        for (x, ax) in a {
            for (y, by) in b {
                let c = ax * by;
                for (z, g) in self.product(*x, *y) {
                    *acc.entry(*z).or_insert(IBig::ZERO) += &c * g;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    fn basis(w: ElemId) -> JElement {
        vec![(w, IBig::ONE)]
    }

    fn associative_at(&self, x: ElemId, y: ElemId, z: ElemId) -> bool {
        let left = self.mul(self.product(x, y), &Self::basis(z));
        let right = self.mul(&Self::basis(x), self.product(y, z));
        left == right
    }

    /// Checks `(t_x t_y) t_z = t_x (t_y t_z)`.
    pub fn associativity_check<E: Executor>(&self, mode: CheckMode, exec: &E) -> AssociativityReport {
        let n = self.n;
        let id = |i: usize| ElemId(i as u32);
        match mode {
            CheckMode::Exhaustive => {
                let firsts = exec.map(n, |x| {
                    for y in 0..n {
                        for z in 0..n {
                            if !self.associative_at(id(x), id(y), id(z)) {
                                return Some((id(x), id(y), id(z)));
                            }
                        }
                    }
                    None
                });
                AssociativityReport {
                    mode,
                    triples_checked: n * n * n,
                    counterexample: firsts.into_iter().flatten().next(),
                }
            }
            CheckMode::Sampled { count, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let triples: Vec<(ElemId, ElemId, ElemId)> = (0..count)
                    .map(|_| (id(rng.gen_range(0..n)), id(rng.gen_range(0..n)), id(rng.gen_range(0..n))))
                    .collect();
                let verdicts = exec.map(count, |k| {
                    let (x, y, z) = triples[k];
                    self.associative_at(x, y, z)
                });
                let counterexample = verdicts.iter().position(|ok| !ok).map(|k| triples[k]);
                AssociativityReport { mode, triples_checked: count, counterexample }
            }
        }
    }

    /// Solves `u t_w = t_w u = t_w` for all `w` over `Q`; returns the
    /// solution if it exists, is integral, and passes a direct check.
    pub fn find_unit(&self) -> Option<JElement> {
        let n = self.n;
        // rows keyed by (side, w, z): sum_a u_a [t_z](t_a t_w) = delta_{w,z}
        let mut rows: BTreeMap<(u8, u32, u32), Vec<RBig>> = BTreeMap::new();
        for a in 0..n {
            for w in 0..n {
                for (side, prod) in [(0u8, self.product(ElemId(a as u32), ElemId(w as u32))), (1, self.product(ElemId(w as u32), ElemId(a as u32)))] {
                    for (z, g) in prod {
                        let row = rows.entry((side, w as u32, z.0)).or_insert_with(|| vec![RBig::ZERO; n + 1]);
                        row[a] += RBig::from(g.clone());
                    }
                }
            }
        }
        for w in 0..n as u32 {
            for side in 0..2u8 {
                let row = rows.entry((side, w, w)).or_insert_with(|| vec![RBig::ZERO; n + 1]);
                row[n] = RBig::ONE;
            }
        }
        let mut m: Vec<Vec<RBig>> = rows.into_values().collect();
        let solution = solve_rational(&mut m, n)?;
        let mut unit = Vec::new();
        for (a, r) in solution.into_iter().enumerate() {
            if !r.is_int() {
                return None;
            }
            let (num, _) = r.into_parts();
            if !num.is_zero() {
                unit.push((ElemId(a as u32), num));
            }
        }
        let ok = (0..n).all(|w| {
            let t = Self::basis(ElemId(w as u32));
            self.mul(&unit, &t) == t && self.mul(&t, &unit) == t
        });
        ok.then_some(unit)
    }
}

/// Gauss-Jordan elimination on an augmented matrix with `vars` unknowns.
/// Free variables are set to zero; `None` if inconsistent.
fn solve_rational(m: &mut [Vec<RBig>], vars: usize) -> Option<Vec<RBig>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..vars {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, p);
        let inv = RBig::ONE / &m[r][col];
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[vars].is_zero()) {
        return None;
    }
    let mut x = vec![RBig::ZERO; vars];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = m[i][vars].clone();
    }
    Some(x)
}
