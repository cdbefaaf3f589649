//! Quasisymmetric functions in the monomial and fundamental bases.
//!
//! [`QSymFunc`] stores a finite linear combination of basis elements
//! indexed by compositions. The two bases are related through composition
//! refinement: a fundamental element is the sum of the monomial elements
//! over all refinements of its index, and the inverse change of basis
//! carries the sign `(-1)` to the power of the length difference. A
//! quasisymmetric function whose monomial coefficients are constant on
//! complete rearrangement classes collapses to an ordinary symmetric
//! function via [`QSymFunc::to_symmetric`].

use crate::error::{Error, Result};
use crate::expand::{self, MultiPoly};
use crate::partitions::{Composition, Partition};
use crate::qt::QTPoly;
use crate::symfunc::{SymBasis, SymFunc};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// The two standard quasisymmetric bases.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum QSymBasis {
    Monomial,
    Fundamental,
}

impl QSymBasis {
    /// One-letter basis tag used in displays: `M` or `F`.
    pub fn letter(self) -> char {
        match self {
            QSymBasis::Monomial => 'M',
            QSymBasis::Fundamental => 'F',
        }
    }
}

/// A quasisymmetric function: a finite linear combination of basis
/// elements indexed by compositions, with [`QTPoly`] coefficients. Zero
/// coefficients are never stored; term iteration order is the display
/// order (weight ascending, then the canonical composition order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSymFunc {
    basis: QSymBasis,
    terms: BTreeMap<Composition, QTPoly>,
}

impl QSymFunc {
    pub fn zero(basis: QSymBasis) -> Self {
        QSymFunc { basis, terms: BTreeMap::new() }
    }

    /// The basis element indexed by `gamma` with coefficient one.
    pub fn generator(basis: QSymBasis, gamma: Composition) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(gamma, &QTPoly::one());
        out
    }

    /// The monomial element `M_gamma`.
    pub fn monomial(gamma: Composition) -> Self {
        Self::generator(QSymBasis::Monomial, gamma)
    }

    /// The fundamental element `F_gamma`.
    pub fn fundamental(gamma: Composition) -> Self {
        Self::generator(QSymBasis::Fundamental, gamma)
    }

    pub fn from_terms<I>(basis: QSymBasis, terms: I) -> Self
    where
        I: IntoIterator<Item = (Composition, QTPoly)>,
    {
        let mut out = Self::zero(basis);
        for (gamma, c) in terms {
            out.add_term(gamma, &c);
        }
        out
    }

    pub fn basis(&self) -> QSymBasis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of the basis element at `gamma` (zero if absent).
    pub fn coeff(&self, gamma: &Composition) -> QTPoly {
        self.terms.get(gamma).cloned().unwrap_or_else(QTPoly::zero)
    }

    /// Iterate terms in canonical (display) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &QTPoly)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, gamma: Composition, c: &QTPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&gamma) {
            Some(v) => {
                *v = v.add(c);
                if v.is_zero() {
                    self.terms.remove(&gamma);
                }
            }
            None => {
                self.terms.insert(gamma, c.clone());
            }
        }
    }

    /// Sum of two expansions in the *same* basis.
    pub fn add(&self, other: &Self) -> Self {
        assert!(self.basis == other.basis, "cannot add across bases");
        let mut out = self.clone();
        for (gamma, c) in &other.terms {
            out.add_term(gamma.clone(), c);
        }
        out
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &QTPoly) -> Self {
        let mut out = Self::zero(self.basis);
        for (gamma, v) in &self.terms {
            out.add_term(gamma.clone(), &v.mul(c));
        }
        out
    }

    /// Rewrite in the monomial basis: `F_gamma` is the sum of `M_alpha`
    /// over all compositions `alpha` refining `gamma`.
    pub fn to_monomial_basis(&self) -> QSymFunc {
        if self.basis == QSymBasis::Monomial {
            return self.clone();
        }
        let mut out = QSymFunc::zero(QSymBasis::Monomial);
        for (gamma, c) in &self.terms {
            for alpha in gamma.refinements() {
                out.add_term(alpha, c);
            }
        }
        out
    }

    /// Rewrite in the fundamental basis: `M_gamma` is the alternating sum
    /// of `F_alpha` over refinements, signed by the length difference.
    pub fn to_fundamental_basis(&self) -> QSymFunc {
        if self.basis == QSymBasis::Fundamental {
            return self.clone();
        }
        let mut out = QSymFunc::zero(QSymBasis::Fundamental);
        for (gamma, c) in &self.terms {
            for alpha in gamma.refinements() {
                let signed = if (alpha.len() - gamma.len()) % 2 == 0 {
                    c.clone()
                } else {
                    c.neg()
                };
                out.add_term(alpha, &signed);
            }
        }
        out
    }

    /// The quasisymmetric image of a symmetric function: each `m_lambda`
    /// becomes the sum of `M_gamma` over the rearrangement class of
    /// `lambda`. The input is converted to the monomial symmetric basis
    /// first, so the default degree cap applies.
    pub fn from_symmetric(f: &SymFunc) -> Result<QSymFunc> {
        let fm = f.to_basis(SymBasis::Monomial)?;
        let mut out = QSymFunc::zero(QSymBasis::Monomial);
        for (lambda, c) in fm.terms() {
            for gamma in lambda.rearrangements() {
                out.add_term(gamma, c);
            }
        }
        Ok(out)
    }

    /// Collapse to a symmetric function in the monomial symmetric basis.
    /// Errors with [`Error::NotSymmetric`] unless, in the monomial
    /// quasisymmetric basis, every rearrangement class that appears is
    /// complete and carries one common coefficient.
    pub fn to_symmetric(&self) -> Result<SymFunc> {
        let fm = self.to_monomial_basis();
        let mut classes: BTreeMap<Partition, Vec<(&Composition, &QTPoly)>> = BTreeMap::new();
        for (gamma, c) in &fm.terms {
            classes.entry(gamma.to_partition()).or_default().push((gamma, c));
        }
        let mut out = SymFunc::zero(SymBasis::Monomial);
        for (lambda, members) in classes {
            let class = lambda.rearrangements();
            if members.len() != class.len() {
                return Err(Error::NotSymmetric(format!(
                    "rearrangement class of {lambda} has {} of {} members",
                    members.len(),
                    class.len()
                )));
            }
            let common = members[0].1;
            if members.iter().any(|(_, c)| *c != common) {
                return Err(Error::NotSymmetric(format!(
                    "coefficients differ across the rearrangement class of {lambda}"
                )));
            }
            out.add_term(lambda, common);
        }
        Ok(out)
    }

    /// Expand into `vars` concrete variables. All coefficients must be
    /// free of `q` and `t`.
    pub fn expand_in_variables(&self, vars: usize) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(vars);
        for (gamma, c) in &self.terms {
            if c.num_terms() > 1 || (c.num_terms() == 1 && c.coeff(0, 0).is_zero()) {
                return Err(Error::InvalidParameter(format!(
                    "cannot expand into variables: coefficient of {gamma} involves q or t"
                )));
            }
            let k = c.coeff(0, 0);
            let piece = match self.basis {
                QSymBasis::Monomial => expand::qsym_monomial_expansion(gamma, vars),
                QSymBasis::Fundamental => expand::qsym_fundamental_expansion(gamma, vars),
            };
            out = out.add(&piece.scale(&k));
        }
        Ok(out)
    }
}

impl fmt::Display for QSymFunc {
    /// Canonical form, e.g. `M[3,1,2,1] + M[3,1,1,1,1]`: terms in
    /// canonical composition order, coefficient `1` omitted, multi-term or
    /// negative coefficients parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .map(|(gamma, c)| {
                let cs = c.to_string();
                let simple = c.num_terms() == 1 && !cs.starts_with('-');
                if gamma.is_empty() {
                    if simple {
                        cs
                    } else {
                        format!("({cs})")
                    }
                } else {
                    let base = format!("{}[{}]", self.basis.letter(), gamma.display_inner());
                    if c.is_one() {
                        base
                    } else if simple {
                        format!("{cs}*{base}")
                    } else {
                        format!("({cs})*{base}")
                    }
                }
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn fundamental_expands_over_refinements() {
        let f = QSymFunc::fundamental(comp(&[3, 1, 2, 1])).to_monomial_basis();
        assert_eq!(
            f.to_string(),
            "M[3,1,2,1] + M[3,1,1,1,1] + M[2,1,1,2,1] + M[2,1,1,1,1,1] + \
             M[1,2,1,2,1] + M[1,2,1,1,1,1] + M[1,1,1,1,2,1] + M[1,1,1,1,1,1,1]"
        );
        assert_eq!(f.num_terms(), 8);
    }

    #[test]
    fn basis_changes_invert_each_other() {
        for d in 1..=5u32 {
            for gamma in Composition::all_of(d) {
                let m = QSymFunc::monomial(gamma.clone());
                assert!(m.to_fundamental_basis().to_monomial_basis() == m);
                let f = QSymFunc::fundamental(gamma.clone());
                assert!(f.to_monomial_basis().to_fundamental_basis() == f);
            }
        }
        // Also on a combination with q,t coefficients.
        let mut g = QSymFunc::fundamental(comp(&[2, 1])).scale(&QTPoly::q());
        g = g.add(&QSymFunc::fundamental(comp(&[1, 1, 1])).scale(&QTPoly::t()));
        assert!(g.to_monomial_basis().to_fundamental_basis() == g);
    }

    #[test]
    fn monomial_expansion_matches_printed_values() {
        // M_21(x,y,z) = x^2 y + x^2 z + y^2 z.
        let m21 = QSymFunc::monomial(comp(&[2, 1])).expand_in_variables(3).unwrap();
        let one = BigRational::from_integer(1.into());
        assert_eq!(m21.num_terms(), 3);
        assert_eq!(m21.coeff(&[2, 1, 0]), one);
        assert_eq!(m21.coeff(&[2, 0, 1]), one);
        assert_eq!(m21.coeff(&[0, 2, 1]), one);
    }

    #[test]
    fn symmetric_round_trip_and_collapse() {
        // s_21 written in fundamentals is F_21 + F_12; it collapses to
        // m_21 + 2 m_111.
        let f = QSymFunc::fundamental(comp(&[2, 1]))
            .add(&QSymFunc::fundamental(comp(&[1, 2])));
        let sym = f.to_symmetric().unwrap();
        let want = SymFunc::m(&[2, 1]).add(&SymFunc::m(&[1, 1, 1]).scale(&QTPoly::from_int(2)));
        assert!(sym == want);
        // from_symmetric splits m over the rearrangement class; collapsing
        // returns the original.
        let mixed = SymFunc::m(&[2, 1])
            .scale(&QTPoly::q())
            .add(&SymFunc::m(&[2]))
            .add(&SymFunc::m(&[1, 1, 1, 1]));
        let q = QSymFunc::from_symmetric(&mixed).unwrap();
        assert!(q.to_symmetric().unwrap() == mixed);
        // Concrete-variable cross-check of the splitting.
        let m21_direct = SymFunc::m(&[2, 1]).expand_in_variables(3).unwrap();
        let m21_split = QSymFunc::from_symmetric(&SymFunc::m(&[2, 1]))
            .unwrap()
            .expand_in_variables(3)
            .unwrap();
        assert!(m21_direct == m21_split);
    }

    #[test]
    fn collapse_rejects_non_symmetric_input() {
        let lone = QSymFunc::monomial(comp(&[2, 1]));
        assert!(matches!(lone.to_symmetric(), Err(Error::NotSymmetric(_))));
        // Complete class but unequal coefficients.
        let skew = QSymFunc::monomial(comp(&[2, 1]))
            .add(&QSymFunc::monomial(comp(&[1, 2])).scale(&QTPoly::from_int(2)));
        assert!(matches!(skew.to_symmetric(), Err(Error::NotSymmetric(_))));
        // The fundamental of a single row is symmetric (it is h_d).
        for d in 1..=4u32 {
            let hd = QSymFunc::fundamental(comp(&[d])).to_symmetric().unwrap();
            let want = SymFunc::h(&[d]).to_basis(SymBasis::Monomial).unwrap();
            assert!(hd == want);
        }
    }
}
