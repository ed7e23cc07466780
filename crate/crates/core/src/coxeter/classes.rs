use alloc::vec;
use alloc::vec::Vec;

use super::{CoxeterError, Element, ElemId, GroupTable};

/// A conjugacy class of a finite Coxeter group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// The ShortLex-least element of minimal length.
    pub representative: ElemId,
    /// All members, sorted.
    pub members: Vec<ElemId>,
    /// Members of minimal length (`C_min`), sorted.
    pub minimal: Vec<ElemId>,
    pub min_length: usize,
    /// `|W| / |C|`.
    pub centralizer_order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: ElemId) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    fn from_orbit(table: &GroupTable, mut members: Vec<ElemId>) -> Self {
        members.sort_unstable();
        let min_length = table.length(members[0]);
        let minimal: Vec<ElemId> =
            members.iter().copied().take_while(|&x| table.length(x) == min_length).collect();
        ConjugacyClass {
            representative: members[0],
            centralizer_order: (table.len() / members.len()) as u64,
            minimal,
            min_length,
            members,
        }
    }
}

/// The Coxeter element `s_0 s_1 ... s_{r-1}` with its class, and the
/// longest element `w_0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecialElements {
    pub coxeter_element: Element,
    pub coxeter_class: ConjugacyClass,
    pub longest: Element,
    pub longest_is_central: bool,
}

impl GroupTable {
    fn require_complete(&self) -> Result<(), CoxeterError> {
        if self.is_complete() {
            Ok(())
        } else {
            Err(CoxeterError::InfiniteGroup)
        }
    }

    /// Closure of `{x}` under conjugation by generators.
    fn orbit(&self, x: ElemId, seen: &mut [bool]) -> Vec<ElemId> {
        seen[x.index()] = true;
        let mut orbit = vec![x];
        let mut i = 0;
        while i < orbit.len() {
            let y = orbit[i];
            i += 1;
            for s in 0..self.rank() {
                let z = self.conjugate(s, y).expect("complete table");
                if !seen[z.index()] {
                    seen[z.index()] = true;
                    orbit.push(z);
                }
            }
        }
        orbit
    }

    /// All conjugacy classes, sorted by (minimal length, representative).
    pub fn conjugacy_classes(&self) -> Result<Vec<ConjugacyClass>, CoxeterError> {
        self.require_complete()?;
        let mut seen = vec![false; self.len()];
        let mut classes = Vec::new();
        // scanning ids upward meets each class first at its least member
        for x in self.ids() {
            if !seen[x.index()] {
                let orbit = self.orbit(x, &mut seen);
                classes.push(ConjugacyClass::from_orbit(self, orbit));
            }
        }
        Ok(classes)
    }

    pub fn class_of(&self, x: ElemId) -> Result<ConjugacyClass, CoxeterError> {
        self.require_complete()?;
        let mut seen = vec![false; self.len()];
        Ok(ConjugacyClass::from_orbit(self, self.orbit(x, &mut seen)))
    }

    /// Whether `x` commutes with every generator.
    pub fn is_central(&self, x: ElemId) -> bool {
        (0..self.rank()).all(|s| self.conjugate(s, x) == Some(x))
    }

    pub fn special_elements(&self) -> Result<SpecialElements, CoxeterError> {
        self.require_complete()?;
        if !self.system().is_irreducible() {
            return Err(CoxeterError::Reducible);
        }
        let word: Vec<usize> = (0..self.rank()).collect();
        let coxeter_element = self.system().normal_form(&word)?;
        let c = self.id_of(&coxeter_element).expect("complete table");
        let w0 = self.longest().expect("complete table");
        Ok(SpecialElements {
            coxeter_class: self.class_of(c)?,
            coxeter_element,
            longest: self.element(w0).clone(),
            longest_is_central: self.is_central(w0),
        })
    }
}
