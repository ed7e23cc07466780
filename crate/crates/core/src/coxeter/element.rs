use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use super::{CoxeterError, CoxeterSystem, RootAction};

/// A group element, stored as its ShortLex-least reduced word.
///
/// The derived order is (length, then lexicographic on the word), which is
/// the enumeration order used everywhere in reports.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element {
    word: Vec<u8>,
}

impl Element {
    pub fn identity() -> Self {
        Element { word: Vec::new() }
    }

    // Callers guarantee the word is already canonical.
    #[cfg(test)]
    pub(crate) fn from_canonical(word: Vec<u8>) -> Self {
        Element { word }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.word.iter().map(|&s| s as usize)
    }

    /// `|w|`.
    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word.len().cmp(&other.word.len()).then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("e");
        }
        for s in &self.word {
            write!(f, "s{s}")?;
        }
        Ok(())
    }
}

impl CoxeterSystem {
    pub fn identity(&self) -> Element {
        Element::identity()
    }

    pub fn generator(&self, i: usize) -> Result<Element, CoxeterError> {
        self.normal_form(&[i])
    }

    /// The canonical element represented by the product of the listed
    /// generators.
    pub fn normal_form(&self, word: &[usize]) -> Result<Element, CoxeterError> {
        let act = self.inverse_action(word)?;
        self.peel(act)
    }

    /// Reads off the ShortLex-least reduced word: the first letter is the
    /// smallest left descent, then recurse on the shorter element.
    fn peel(&self, mut act: RootAction) -> Result<Element, CoxeterError> {
        let mut word = Vec::new();
        while let Some(i) = act.first_left_descent() {
            word.push(i as u8);
            act.left_mul(self, i)?;
        }
        Ok(Element { word })
    }

    fn check(&self, x: &Element) -> Result<(), CoxeterError> {
        if x.letters().all(|s| s < self.rank) {
            Ok(())
        } else {
            Err(CoxeterError::MixedSystems)
        }
    }

    fn action_of(&self, x: &Element) -> Result<RootAction, CoxeterError> {
        self.check(x)?;
        let word: Vec<usize> = x.letters().collect();
        self.inverse_action(&word)
    }

    pub fn multiply(&self, a: &Element, b: &Element) -> Result<Element, CoxeterError> {
        self.check(a)?;
        self.check(b)?;
        let word: Vec<usize> = a.letters().chain(b.letters()).collect();
        self.normal_form(&word)
    }

    pub fn inverse(&self, a: &Element) -> Result<Element, CoxeterError> {
        self.check(a)?;
        let word: Vec<usize> = a.letters().rev().collect();
        self.normal_form(&word)
    }

    /// `{i : |s_i a| < |a|}`.
    pub fn left_descents(&self, a: &Element) -> Result<Vec<usize>, CoxeterError> {
        let act = self.action_of(a)?;
        Ok((0..self.rank).filter(|&i| act.is_left_descent(i)).collect())
    }

    /// `{i : |a s_i| < |a|}`.
    pub fn right_descents(&self, a: &Element) -> Result<Vec<usize>, CoxeterError> {
        let inv = self.inverse(a)?;
        self.left_descents(&inv)
    }

    /// `(left descents, right descents)`.
    pub fn descents(&self, a: &Element) -> Result<(Vec<usize>, Vec<usize>), CoxeterError> {
        Ok((self.left_descents(a)?, self.right_descents(a)?))
    }

    /// Bruhat order by the subword criterion, scanning the canonical reduced
    /// word of `y` from the left: with `y = s y'` reduced, `x <= y` iff
    /// `s x <= y'` when `s` is a left descent of `x`, and `x <= y'` otherwise.
    pub fn bruhat_leq(&self, x: &Element, y: &Element) -> Result<bool, CoxeterError> {
        self.check(y)?;
        let mut act = self.action_of(x)?;
        if x.length() > y.length() {
            return Ok(false);
        }
        let mut remaining = x.length();
        for (scanned, s) in y.letters().enumerate() {
            if remaining > y.length() - scanned {
                return Ok(false);
            }
            if act.is_left_descent(s) {
                act.left_mul(self, s)?;
                remaining -= 1;
            }
        }
        Ok(remaining == 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sys(l: &str) -> CoxeterSystem {
        CoxeterSystem::from_label(l).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let a2 = sys("A2");
        assert!(a2.normal_form(&[0, 0]).unwrap().is_identity());
        assert_eq!(a2.normal_form(&[1, 0, 1]).unwrap().word(), &[0, 1, 0]);
        let b2 = sys("B2");
        let w = b2.normal_form(&[0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!(w.word(), &[1, 0]);
        assert!(matches!(
            a2.normal_form(&[0, 2]),
            Err(CoxeterError::IndexOutOfRange { index: 2, rank: 2 })
        ));
    }

    #[test]
    fn normal_form_is_idempotent() {
        let b3 = sys("B3");
        let w = b3.normal_form(&[2, 1, 0, 2, 1, 2, 0, 1]).unwrap();
        let again: Vec<usize> = w.letters().collect();
        assert_eq!(b3.normal_form(&again).unwrap(), w);
    }

    #[test]
    fn multiply_inverse_descents() {
        let a2 = sys("A2");
        let s0s1 = a2.normal_form(&[0, 1]).unwrap();
        assert_eq!(a2.multiply(&s0s1, &Element::identity()).unwrap(), s0s1);
        assert_eq!(a2.descents(&s0s1).unwrap(), (vec![0], vec![1]));
        assert_eq!(a2.inverse(&s0s1).unwrap().word(), &[1, 0]);
        let bad = Element::from_canonical(vec![3]);
        assert_eq!(a2.multiply(&s0s1, &bad), Err(CoxeterError::MixedSystems));
        assert_eq!(a2.bruhat_leq(&bad, &s0s1), Err(CoxeterError::MixedSystems));
    }

    #[test]
    fn bruhat_examples() {
        let a2 = sys("A2");
        let s0 = a2.generator(0).unwrap();
        let s1 = a2.generator(1).unwrap();
        let s0s1 = a2.normal_form(&[0, 1]).unwrap();
        assert!(a2.bruhat_leq(&Element::identity(), &s0s1).unwrap());
        assert!(a2.bruhat_leq(&s0, &s0s1).unwrap());
        assert!(!a2.bruhat_leq(&s0, &s1).unwrap());
        assert!(!a2.bruhat_leq(&s0s1, &s0).unwrap());
        let s1s0 = a2.normal_form(&[1, 0]).unwrap();
        assert!(!a2.bruhat_leq(&s0s1, &s1s0).unwrap());
    }

    #[test]
    fn affine_words_reduce() {
        let a1 = sys("~A1");
        let w = a1.normal_form(&[0, 1, 0, 1, 1, 0]).unwrap();
        assert_eq!(w.word(), &[0, 1]);
        let long = a1.normal_form(&[1, 0, 1, 0, 1, 0, 1]).unwrap();
        assert_eq!(long.length(), 7);
        assert_eq!(long.word(), &[1, 0, 1, 0, 1, 0, 1]);
    }
}
