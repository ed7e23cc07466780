use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::{CoxeterError, CoxeterSystem, Element};

/// Index of an element inside a [`GroupTable`]. Ids follow the
/// (length, ShortLex) order, so id 0 is the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub u32);

impl ElemId {
    pub const IDENTITY: ElemId = ElemId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

const NONE: u32 = u32::MAX;

/// Largest table the builder will attempt.
pub const TABLE_LIMIT: usize = 1 << 24;

/// All elements of a finite group, or all elements of length at most a
/// radius, with generator multiplication tables.
///
/// In a ball, products that leave the ball are reported as `None`.
#[derive(Debug, Clone)]
pub struct GroupTable {
    system: CoxeterSystem,
    radius: Option<usize>,
    elements: Vec<Element>,
    index: BTreeMap<Vec<u8>, u32>,
    lmul: Vec<u32>,
    rmul: Vec<u32>,
    inverse: Vec<u32>,
}

impl CoxeterSystem {
    /// Elements of length at most `max_length`, sorted by (length,
    /// ShortLex). The bound may be omitted only for finite groups.
    pub fn enumerate(&self, max_length: Option<usize>) -> Result<Vec<Element>, CoxeterError> {
        if max_length.is_none() && !self.is_finite() {
            return Err(CoxeterError::InfiniteGroup);
        }
        layers(self, max_length)
    }
}

fn layers(sys: &CoxeterSystem, radius: Option<usize>) -> Result<Vec<Element>, CoxeterError> {
    let mut all = vec![Element::identity()];
    let mut layer = vec![Element::identity()];
    let mut k = 0;
    while !layer.is_empty() && radius.map_or(true, |r| k < r) {
        let mut next: BTreeSet<Element> = BTreeSet::new();
        let mut word: Vec<usize> = Vec::with_capacity(k + 1);
        for x in &layer {
            for s in 0..sys.rank() {
                word.clear();
                word.push(s);
                word.extend(x.letters());
                let y = sys.normal_form(&word)?;
                if y.length() > k {
                    next.insert(y);
                }
            }
        }
        if all.len() + next.len() > TABLE_LIMIT {
            return Err(CoxeterError::TooLarge(TABLE_LIMIT));
        }
        layer = next.into_iter().collect();
        all.extend(layer.iter().cloned());
        k += 1;
    }
    Ok(all)
}

impl GroupTable {
    /// The whole group; only for finite systems.
    pub fn full(system: &CoxeterSystem) -> Result<Self, CoxeterError> {
        if !system.is_finite() {
            return Err(CoxeterError::InfiniteGroup);
        }
        Self::build(system, None)
    }

    /// Elements of length at most `radius`. For a finite group whose
    /// longest element is within the radius this is the whole group.
    pub fn ball(system: &CoxeterSystem, radius: usize) -> Result<Self, CoxeterError> {
        Self::build(system, Some(radius))
    }

    fn build(system: &CoxeterSystem, radius: Option<usize>) -> Result<Self, CoxeterError> {
        let elements = layers(system, radius)?;
        let rank = system.rank();
        let index: BTreeMap<Vec<u8>, u32> =
            elements.iter().enumerate().map(|(i, e)| (e.word().to_vec(), i as u32)).collect();
        let lookup = |e: &Element| index.get(e.word()).copied().unwrap_or(NONE);
        let mut lmul = vec![NONE; elements.len() * rank];
        let mut inverse = vec![NONE; elements.len()];
        let mut word: Vec<usize> = Vec::new();
        for (i, x) in elements.iter().enumerate() {
            for s in 0..rank {
                word.clear();
                word.push(s);
                word.extend(x.letters());
                lmul[i * rank + s] = lookup(&system.normal_form(&word)?);
            }
            inverse[i] = lookup(&system.inverse(x)?);
        }
        let mut rmul = vec![NONE; elements.len() * rank];
        for i in 0..elements.len() {
            let inv = inverse[i] as usize;
            for s in 0..rank {
                let t = lmul[inv * rank + s];
                rmul[i * rank + s] = if t == NONE { NONE } else { inverse[t as usize] };
            }
        }
        let complete = system.is_finite()
            && (0..elements.len()).all(|i| (0..rank).all(|s| lmul[i * rank + s] != NONE));
        Ok(GroupTable {
            system: system.clone(),
            radius: if complete { None } else { radius },
            elements,
            index,
            lmul,
            rmul,
            inverse,
        })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Whether the table holds the whole (finite) group.
    pub fn is_complete(&self) -> bool {
        self.radius.is_none()
    }

    pub fn radius(&self) -> Option<usize> {
        self.radius
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = ElemId> + ExactSizeIterator {
        (0..self.elements.len() as u32).map(ElemId)
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, id: ElemId) -> &Element {
        &self.elements[id.index()]
    }

    pub fn id_of(&self, x: &Element) -> Option<ElemId> {
        self.index.get(x.word()).map(|&i| ElemId(i))
    }

    pub fn length(&self, id: ElemId) -> usize {
        self.elements[id.index()].length()
    }

    /// `s x`, or `None` if it falls outside the ball.
    pub fn lmul(&self, s: usize, x: ElemId) -> Option<ElemId> {
        let t = self.lmul[x.index() * self.rank() + s];
        (t != NONE).then_some(ElemId(t))
    }

    /// `x s`, or `None` if it falls outside the ball.
    pub fn rmul(&self, x: ElemId, s: usize) -> Option<ElemId> {
        let t = self.rmul[x.index() * self.rank() + s];
        (t != NONE).then_some(ElemId(t))
    }

    pub fn inverse(&self, x: ElemId) -> ElemId {
        ElemId(self.inverse[x.index()])
    }

    pub fn is_left_descent(&self, s: usize, x: ElemId) -> bool {
        self.lmul(s, x).is_some_and(|y| y < x)
    }

    pub fn is_right_descent(&self, x: ElemId, s: usize) -> bool {
        self.rmul(x, s).is_some_and(|y| y < x)
    }

    /// Product of two table elements, if it stays inside the table.
    pub fn multiply(&self, a: ElemId, b: ElemId) -> Option<ElemId> {
        self.element(a).letters().rev().try_fold(b, |acc, s| self.lmul(s, acc))
    }

    /// `s x s`, for conjugacy orbits.
    pub fn conjugate(&self, s: usize, x: ElemId) -> Option<ElemId> {
        self.lmul(s, x).and_then(|y| self.rmul(y, s))
    }

    /// The longest element of a complete table.
    pub fn longest(&self) -> Option<ElemId> {
        self.is_complete().then(|| ElemId(self.elements.len() as u32 - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(l: &str) -> GroupTable {
        GroupTable::full(&CoxeterSystem::from_label(l).unwrap()).unwrap()
    }

    fn profile(elems: &[Element]) -> Vec<usize> {
        let max = elems.iter().map(Element::length).max().unwrap_or(0);
        (0..=max).map(|k| elems.iter().filter(|e| e.length() == k).count()).collect()
    }

    #[test]
    fn enumerate_examples() {
        let a2 = CoxeterSystem::from_label("A2").unwrap();
        let all = a2.enumerate(None).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(profile(&all), vec![1, 2, 2, 1]);
        let aff = CoxeterSystem::from_label("~A1").unwrap();
        assert_eq!(aff.enumerate(Some(3)).unwrap().len(), 7);
        assert_eq!(aff.enumerate(None), Err(CoxeterError::InfiniteGroup));
        let b2 = CoxeterSystem::from_label("B2").unwrap().enumerate(None).unwrap();
        assert_eq!(b2.len(), 8);
        assert_eq!(b2.last().unwrap().length(), 4);
    }

    #[test]
    fn enumeration_is_sorted() {
        let all = CoxeterSystem::from_label("B3").unwrap().enumerate(None).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn classical_orders() {
        assert_eq!(table("A3").len(), 24);
        assert_eq!(table("B3").len(), 48);
        assert_eq!(table("A4").len(), 120);
        assert_eq!(table("D4").len(), 192);
        assert_eq!(table("B4").len(), 384);
        assert_eq!(table("G2").len(), 12);
        assert_eq!(table("F4").len(), 1152);
    }

    #[test]
    fn table_operations_agree_with_words() {
        let t = table("B3");
        let sys = t.system().clone();
        for a in t.ids() {
            assert_eq!(t.element(t.inverse(a)), &sys.inverse(t.element(a)).unwrap());
            for s in 0..3 {
                let left = t.lmul(s, a).unwrap();
                let expect = sys.multiply(&sys.generator(s).unwrap(), t.element(a)).unwrap();
                assert_eq!(t.element(left), &expect);
                let right = t.rmul(a, s).unwrap();
                let expect = sys.multiply(t.element(a), &sys.generator(s).unwrap()).unwrap();
                assert_eq!(t.element(right), &expect);
            }
        }
        let x = t.id_of(&sys.normal_form(&[0, 1, 2]).unwrap()).unwrap();
        let y = t.id_of(&sys.normal_form(&[2, 1]).unwrap()).unwrap();
        let xy = sys.normal_form(&[0, 1, 2, 2, 1]).unwrap();
        assert_eq!(t.element(t.multiply(x, y).unwrap()), &xy);
        assert_eq!(t.length(t.longest().unwrap()), 9);
    }

    #[test]
    fn ball_edges() {
        let sys = CoxeterSystem::from_label("~A2").unwrap();
        let ball = GroupTable::ball(&sys, 3).unwrap();
        assert!(!ball.is_complete());
        assert_eq!(ball.len(), 1 + 3 + 6 + 9);
        let far = ball.ids().last().unwrap();
        let s = (0..3).find(|&s| !ball.is_left_descent(s, far)).unwrap();
        assert_eq!(ball.lmul(s, far), None);
        // a finite group inside a large ball is complete
        let a2 = GroupTable::ball(&CoxeterSystem::from_label("A2").unwrap(), 10).unwrap();
        assert!(a2.is_complete());
    }
}
