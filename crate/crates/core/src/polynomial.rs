//! Sparse bivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::field::{Field, FieldElement};
use crate::monomial::{Monomial, MonomialOrder};

/// A polynomial in `x, y`. Zero coefficients are never stored, so the zero
/// polynomial has empty support.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, FieldElement>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: FieldElement) -> Self {
        Polynomial::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: FieldElement) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c);
        p
    }

    /// The monic monomial `m` over `field`.
    pub fn monomial(m: Monomial, field: Field) -> Self {
        Polynomial::term(m, field.one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, FieldElement)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(x, y)` exponent order; use [`Polynomial::sorted_terms`]
    /// for a monomial-order traversal.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &FieldElement)> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&FieldElement> {
        self.terms.get(m)
    }

    /// Coefficient field, or `None` for the zero polynomial.
    pub fn field(&self) -> Option<Field> {
        self.terms.values().next().map(FieldElement::field)
    }

    pub fn constant_term(&self) -> Option<&FieldElement> {
        self.terms.get(&Monomial::ONE)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree of a term (the order of vanishing at the origin).
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn add_term(&mut self, m: Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(&Monomial, &FieldElement)> {
        self.terms.iter().max_by(|a, b| ord.compare(a.0, b.0))
    }

    pub fn leading_monomial(&self, ord: MonomialOrder) -> Option<Monomial> {
        self.leading_term(ord).map(|(m, _)| *m)
    }

    pub fn leading_coeff(&self, ord: MonomialOrder) -> Option<&FieldElement> {
        self.leading_term(ord).map(|(_, c)| c)
    }

    /// Terms sorted descending by `ord`.
    pub fn sorted_terms(&self, ord: MonomialOrder) -> Vec<(Monomial, FieldElement)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_by(|a, b| ord.compare(&b.0, &a.0));
        v
    }

    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: Monomial, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, a)| (*k * m, a * c)).collect(),
        }
    }

    /// Scales so the leading coefficient under `ord` is one.
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.leading_coeff(ord) {
            None => Polynomial::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Drops every term of total degree above `d`.
    pub fn truncate(&self, d: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Evaluates at `(a, b)`.
    pub fn eval(&self, a: &FieldElement, b: &FieldElement) -> Option<FieldElement> {
        let field = self.field()?;
        let mut acc = field.zero();
        for (m, c) in &self.terms {
            acc += &(c * &(&a.pow(m.x as u64) * &b.pow(m.y as u64)));
        }
        Some(acc)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Renders terms in descending `ord` order, e.g. `x^2 - y`.
    pub fn display_with(&self, ord: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c };
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if m == Monomial::ONE {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&m.to_string());
            } else {
                out.push_str(&format!("{magnitude}*{m}"));
            }
        }
        out
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(MonomialOrder::default()))
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (n, d) in &rhs.terms {
                out.add_term(*m * *n, c * d);
            }
        }
        out
    }
}
