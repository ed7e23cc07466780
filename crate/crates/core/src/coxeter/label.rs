use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use super::{Bond, CoxeterError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

/// A finite or affine crystallographic type such as `D4` or `~F4`.
///
/// `n` is the rank of the underlying finite type, so an affine label has
/// `n + 1` generators. Affine generator 0 is the extra node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub family: Family,
    pub n: usize,
    pub affine: bool,
}

impl TypeLabel {
    pub fn new(family: Family, n: usize, affine: bool) -> Result<Self, CoxeterError> {
        let ok = match (family, affine) {
            (Family::A, _) => n >= 1,
            (Family::B, false) | (Family::C, _) => n >= 2,
            (Family::B, true) => n >= 3,
            (Family::D, _) => n >= 4,
            (Family::E, _) => (6..=8).contains(&n),
            (Family::F, _) => n == 4,
            (Family::G, _) => n == 2,
        };
        let label = TypeLabel { family, n, affine };
        if ok {
            Ok(label)
        } else {
            Err(CoxeterError::UnknownLabel(label.to_string()))
        }
    }

    pub fn rank(&self) -> usize {
        self.n + usize::from(self.affine)
    }

    /// The label the classifier reports for this Coxeter matrix (finite
    /// `C_n` and `B_n` share one).
    pub fn canonical(self) -> Self {
        match self {
            TypeLabel { family: Family::C, n, affine: false } => {
                TypeLabel { family: Family::B, n, affine: false }
            }
            other => other,
        }
    }

    pub(super) fn finite_order(&self) -> u128 {
        let fact = |k: usize| (1..=k as u128).product::<u128>();
        match self.family {
            Family::A => fact(self.n + 1),
            Family::B | Family::C => (1u128 << self.n) * fact(self.n),
            Family::D => (1u128 << (self.n - 1)) * fact(self.n),
            Family::E => match self.n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    /// Coxeter matrix in the generator order used throughout the crate:
    /// Bourbaki numbering shifted to 0-based for finite types; for affine
    /// types the extra node is 0 and the finite nodes follow. `~F4` and `~G2`
    /// are numbered along their chain.
    pub fn coxeter_matrix(&self) -> Vec<Vec<Bond>> {
        let r = self.rank();
        let mut edges: Vec<(usize, usize, Bond)> = Vec::new();
        let o = usize::from(self.affine);
        let three = Bond::Order(3);
        let four = Bond::Order(4);
        let path = |edges: &mut Vec<_>, from: usize, to: usize| {
            for i in from..to {
                edges.push((i, i + 1, three));
            }
        };
        match (self.family, self.affine) {
            (Family::A, false) => path(&mut edges, 0, r - 1),
            (Family::A, true) if self.n == 1 => edges.push((0, 1, Bond::Infinite)),
            (Family::A, true) => {
                path(&mut edges, 0, r - 1);
                edges.push((0, r - 1, three));
            }
            (Family::B | Family::C, _) => {
                path(&mut edges, o, r - 2);
                edges.push((r - 2, r - 1, four));
                match (self.family, self.affine) {
                    (Family::B, true) => edges.push((0, 2, three)),
                    (Family::C, true) => edges.push((0, 1, four)),
                    _ => {}
                }
            }
            (Family::D, _) => {
                path(&mut edges, o, r - 2);
                edges.push((r - 3, r - 1, three));
                if self.affine {
                    edges.push((0, 2, three));
                }
            }
            (Family::E, _) => {
                edges.push((o, o + 2, three));
                edges.push((o + 1, o + 3, three));
                path(&mut edges, o + 2, r - 1);
                if self.affine {
                    let attach = match self.n {
                        6 => 2,
                        7 => 1,
                        _ => 8,
                    };
                    edges.push((0, attach, three));
                }
            }
            (Family::F, _) => {
                path(&mut edges, 0, r - 1);
                let k = o + 1;
                edges.retain(|e| e.0 != k);
                edges.push((k, k + 1, four));
            }
            (Family::G, false) => edges.push((0, 1, Bond::Order(6))),
            (Family::G, true) => {
                edges.push((0, 1, three));
                edges.push((1, 2, Bond::Order(6)));
            }
        }
        let mut m = vec![vec![Bond::Order(2); r]; r];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = Bond::Order(1);
        }
        for (i, j, b) in edges {
            m[i][j] = b;
            m[j][i] = b;
        }
        m
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.affine {
            f.write_str("~")?;
        }
        write!(f, "{:?}{}", self.family, self.n)
    }
}

impl FromStr for TypeLabel {
    type Err = CoxeterError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || CoxeterError::UnknownLabel(s.to_string());
        let t = s.trim();
        let (affine, rest) = match t.strip_prefix('~') {
            Some(r) => (true, r),
            None => (false, t),
        };
        let mut chars = rest.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(unknown()),
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(unknown());
        }
        let n: usize = digits.parse().map_err(|_| unknown())?;
        TypeLabel::new(family, n, affine).map_err(|_| unknown())
    }
}

/// Connected components of the Coxeter graph (edges where `m_ij != 2`).
pub(super) fn components(rank: usize, matrix: &[Bond]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; rank];
    let mut out = Vec::new();
    for start in 0..rank {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in 0..rank {
                if !seen[v] && u != v && !matrix[u * rank + v].commutes() {
                    seen[v] = true;
                    comp.push(v);
                    stack.push(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Identifies a connected crystallographic Coxeter graph as a finite or
/// affine type; `None` for everything else (all of which are infinite).
pub(super) fn classify(nodes: &[usize], rank: usize, matrix: &[Bond]) -> Option<TypeLabel> {
    let n = nodes.len();
    let bond = |a: usize, b: usize| matrix[nodes[a] * rank + nodes[b]];
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut edges: Vec<(usize, usize, Bond)> = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let m = bond(a, b);
            if !m.commutes() {
                adj[a].push(b);
                adj[b].push(a);
                edges.push((a, b, m));
            }
        }
    }
    let mk = |family, k, affine| TypeLabel::new(family, k, affine).ok();
    if n == 1 {
        return mk(Family::A, 1, false);
    }
    if edges.iter().any(|e| e.2 == Bond::Infinite) {
        return if n == 2 { mk(Family::A, 1, true) } else { None };
    }
    let count = |m: u32| edges.iter().filter(|e| e.2 == Bond::Order(m)).count();
    let (c4, c6) = (count(4), count(6));
    let deg = |a: usize| adj[a].len();
    if edges.len() != n - 1 {
        let cycle = edges.len() == n && (0..n).all(|a| deg(a) == 2);
        return if cycle && n >= 3 && c4 == 0 && c6 == 0 { mk(Family::A, n - 1, true) } else { None };
    }
    let max_deg = (0..n).map(deg).max().unwrap_or(0);
    if c6 > 0 {
        return match (c6, c4, n, max_deg) {
            (1, 0, 2, _) => mk(Family::G, 2, false),
            (1, 0, 3, 2) => mk(Family::G, 2, true),
            _ => None,
        };
    }
    if max_deg >= 4 {
        return if n == 5 && max_deg == 4 && c4 == 0 { mk(Family::D, 4, true) } else { None };
    }
    let branches: Vec<usize> = (0..n).filter(|&a| deg(a) == 3).collect();
    // walk from `from` away from `prev` until a leaf; returns the nodes visited
    let arm = |prev: usize, from: usize| {
        let mut out = vec![from];
        let (mut p, mut cur) = (prev, from);
        while deg(cur) == 2 {
            let next = if adj[cur][0] == p { adj[cur][1] } else { adj[cur][0] };
            out.push(next);
            p = cur;
            cur = next;
        }
        out
    };
    let path_order = || {
        let start = (0..n).find(|&a| deg(a) == 1).unwrap();
        let mut order = vec![start];
        order.extend(arm(start, adj[start][0]));
        order
    };
    match (c4, branches.len()) {
        (0, 0) => mk(Family::A, n, false),
        (0, 1) => {
            let b = branches[0];
            let mut lens: Vec<usize> = adj[b].iter().map(|&a| arm(b, a).len()).collect();
            lens.sort_unstable();
            match (lens[0], lens[1], lens[2]) {
                (1, 1, k) => mk(Family::D, k + 3, false),
                (1, 2, 2) => mk(Family::E, 6, false),
                (1, 2, 3) => mk(Family::E, 7, false),
                (1, 2, 4) => mk(Family::E, 8, false),
                (2, 2, 2) => mk(Family::E, 6, true),
                (1, 3, 3) => mk(Family::E, 7, true),
                (1, 2, 5) => mk(Family::E, 8, true),
                _ => None,
            }
        }
        (0, 2) => {
            let leaves = |b: usize| adj[b].iter().filter(|&&a| deg(a) == 1).count();
            if branches.iter().all(|&b| leaves(b) == 2) {
                mk(Family::D, n - 1, true)
            } else {
                None
            }
        }
        (1, 0) => {
            let order = path_order();
            let k = (0..n - 1).find(|&i| bond(order[i], order[i + 1]) == Bond::Order(4)).unwrap();
            if k == 0 || k == n - 2 {
                mk(Family::B, n, false)
            } else if n == 4 {
                mk(Family::F, 4, false)
            } else if n == 5 {
                mk(Family::F, 4, true)
            } else {
                None
            }
        }
        (1, 1) => {
            let b = branches[0];
            let arms: Vec<Vec<usize>> = adj[b].iter().map(|&a| arm(b, a)).collect();
            // the 4-bond ends one arm; the other two arms are single nodes
            let ok = arms.iter().enumerate().any(|(i, a)| {
                let t = a.len();
                let before = if t == 1 { b } else { a[t - 2] };
                bond(before, a[t - 1]) == Bond::Order(4)
                    && arms.iter().enumerate().all(|(j, o)| j == i || o.len() == 1)
            });
            if ok {
                mk(Family::B, n - 1, true)
            } else {
                None
            }
        }
        (2, 0) => {
            let order = path_order();
            let ends = bond(order[0], order[1]) == Bond::Order(4)
                && bond(order[n - 2], order[n - 1]) == Bond::Order(4);
            if ends && n >= 3 {
                mk(Family::C, n - 1, true)
            } else {
                None
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_and_display() {
        for l in ["A1", "B3", "C2", "D4", "E8", "F4", "G2", "~A1", "~G2", "~F4", "~D7"] {
            assert_eq!(l.parse::<TypeLabel>().unwrap().to_string(), l);
        }
        for bad in ["", "A", "A0", "B1", "D3", "E5", "E9", "F3", "G3", "~B2", "H3", "I2", "A-1", "~"] {
            assert!(bad.parse::<TypeLabel>().is_err(), "{bad}");
        }
        assert_eq!("~c3".parse::<TypeLabel>().unwrap().rank(), 4);
    }

    #[test]
    fn orders() {
        let order = |l: &str| l.parse::<TypeLabel>().unwrap().finite_order();
        assert_eq!(order("A3"), 24);
        assert_eq!(order("B3"), 48);
        assert_eq!(order("D4"), 192);
        assert_eq!(order("B4"), 384);
        assert_eq!(order("G2"), 12);
    }

    #[test]
    fn affine_weight_orderings() {
        // nodes 0, 1, 2 of ~F4 are joined by simple bonds, 3 and 4 likewise
        let m = "~F4".parse::<TypeLabel>().unwrap().coxeter_matrix();
        assert_eq!(m[0][1], Bond::Order(3));
        assert_eq!(m[1][2], Bond::Order(3));
        assert_eq!(m[2][3], Bond::Order(4));
        assert_eq!(m[3][4], Bond::Order(3));
        let g = "~G2".parse::<TypeLabel>().unwrap().coxeter_matrix();
        assert_eq!(g[0][1], Bond::Order(3));
        assert_eq!(g[1][2], Bond::Order(6));
        assert_eq!(g[0][2], Bond::Order(2));
    }
}
