//! Multivariate division and Buchberger's algorithm.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};

use crate::field::{Field, FieldElement};
use crate::monomial::{Monomial, MonomialOrder};
use crate::polynomial::Polynomial;

type OrderKey = (u32, u32, u32);

/// Working copy of a polynomial keyed by monomial order, so the leading term
/// is `last_key_value`.
struct Dividend {
    ord: MonomialOrder,
    terms: BTreeMap<OrderKey, (Monomial, FieldElement)>,
}

impl Dividend {
    fn new(f: &Polynomial, ord: MonomialOrder) -> Self {
        Dividend {
            ord,
            terms: f.terms().map(|(m, c)| (ord.key(m), (*m, c.clone()))).collect(),
        }
    }

    fn pop_leading(&mut self) -> Option<(Monomial, FieldElement)> {
        self.terms.pop_last().map(|(_, t)| t)
    }

    /// `self -= c * m * g`
    fn sub_multiple(&mut self, g: &Polynomial, m: Monomial, c: &FieldElement) {
        for (gm, gc) in g.terms() {
            let mono = *gm * m;
            let delta = gc * c;
            let key = self.ord.key(&mono);
            match self.terms.get_mut(&key) {
                Some((_, existing)) => {
                    *existing -= &delta;
                    if existing.is_zero() {
                        self.terms.remove(&key);
                    }
                }
                None => {
                    self.terms.insert(key, (mono, -delta));
                }
            }
        }
    }
}

/// Fully reduces `f` by `basis`.
///
/// The order-largest reducible monomial is always reduced next, by the first
/// basis element (in sequence order) whose leading monomial divides it. The
/// result has no monomial divisible by any basis leading monomial.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Polynomial {
    let leads: Vec<(Monomial, FieldElement)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(ord).expect("basis polynomials must be nonzero");
            (*m, c.inv().expect("nonzero leading coefficient"))
        })
        .collect();
    let mut work = Dividend::new(f, ord);
    let mut remainder = Polynomial::zero();
    while let Some((m, c)) = work.pop_leading() {
        let divisor = leads.iter().position(|(lm, _)| lm.divides(&m));
        match divisor {
            Some(i) => {
                let (lm, lc_inv) = &leads[i];
                let q = m.checked_div(lm).expect("divides");
                let factor = &c * lc_inv;
                // the leading term cancels exactly; subtract the tail only
                let tail = tail_of(&basis[i], lm);
                work.sub_multiple(&tail, q, &factor);
            }
            None => remainder.add_term(m, c),
        }
    }
    remainder
}

fn tail_of(g: &Polynomial, lead: &Monomial) -> Polynomial {
    Polynomial::from_terms(g.terms().filter(|(m, _)| *m != lead).map(|(m, c)| (*m, c.clone())))
}

/// `lcm/LT(f) * f - lcm/LT(g) * g`, with leading coefficients normalized away.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Polynomial {
    let (fm, fc) = f.leading_term(ord).expect("nonzero");
    let (gm, gc) = g.leading_term(ord).expect("nonzero");
    let l = fm.lcm(gm);
    let a = f.mul_term(l.checked_div(fm).unwrap(), &fc.inv().unwrap());
    let b = g.mul_term(l.checked_div(gm).unwrap(), &gc.inv().unwrap());
    &a - &b
}

/// A reduced Gröbner basis: monic generators, none of whose monomials is
/// divisible by another generator's leading monomial, sorted by leading
/// monomial in descending order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    field: Field,
    generators: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// The monomial ideal generated by `monomials`; it is its own reduced basis
    /// once redundant generators are dropped.
    pub fn from_monomials(monomials: &[Monomial], field: Field, ord: MonomialOrder) -> Self {
        let gens: Vec<Polynomial> = monomials.iter().map(|m| Polynomial::monomial(*m, field)).collect();
        buchberger_in(&gens, ord, field)
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.generators
            .iter()
            .map(|g| g.leading_monomial(self.order).expect("nonzero generator"))
            .collect()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.generators, self.order)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    pub fn is_unit(&self) -> bool {
        self.leading_monomials().contains(&Monomial::ONE)
    }

    pub fn is_zero_dimensional(&self) -> bool {
        let leads = self.leading_monomials();
        leads.iter().any(|m| m.y == 0) && leads.iter().any(|m| m.x == 0)
    }

    /// Every pairwise S-polynomial reduces to zero.
    pub fn certify(&self) -> bool {
        let g = &self.generators;
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| self.reduce(&s_polynomial(&g[i], &g[j], self.order)).is_zero())
        })
    }

    /// Checks the reducedness conditions directly.
    pub fn is_reduced(&self) -> bool {
        let leads = self.leading_monomials();
        self.generators.iter().enumerate().all(|(i, g)| {
            g.leading_coeff(self.order).is_some_and(FieldElement::is_one)
                && g.monomials().all(|m| {
                    leads
                        .iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(m))
                })
        })
    }
}

/// Leading monomials of a reduced basis: the minimal generators of `in_>(I)`.
pub fn initial_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    gb.leading_monomials()
}

pub fn is_zero_dimensional(gb: &GroebnerBasis) -> bool {
    gb.is_zero_dimensional()
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
///
/// The coefficient field is taken from the generators; the zero ideal yields
/// an empty basis over the rationals.
pub fn buchberger(gens: &[Polynomial], ord: MonomialOrder) -> GroebnerBasis {
    let field = gens.iter().find_map(Polynomial::field).unwrap_or(Field::Rationals);
    buchberger_in(gens, ord, field)
}

fn buchberger_in(gens: &[Polynomial], ord: MonomialOrder, field: Field) -> GroebnerBasis {
    let mut basis: Vec<Polynomial> = gens.iter().filter(|g| !g.is_zero()).map(|g| g.monic(ord)).collect();
    let mut leads: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(ord).unwrap()).collect();

    // normal selection: smallest lcm first, ties by index
    let mut pairs = BinaryHeap::new();
    let push_pair = |pairs: &mut BinaryHeap<_>, leads: &[Monomial], i: usize, j: usize| {
        let l = leads[i].lcm(&leads[j]);
        pairs.push(Reverse((ord.key(&l), i, j)));
    };
    for j in 0..basis.len() {
        for i in 0..j {
            push_pair(&mut pairs, &leads, i, j);
        }
    }

    while let Some(Reverse((_, i, j))) = pairs.pop() {
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let lcm = leads[i].lcm(&leads[j]);
        // chain criterion: some k with LM(k) | lcm whose pairs with i and j were already handled
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&lcm)
                && leads[i].lcm(&leads[k]) != lcm
                && leads[j].lcm(&leads[k]) != lcm
                && !pairs.iter().any(|Reverse((_, a, b))| {
                    let p = (*a.min(b), *a.max(b));
                    p == (i.min(k), i.max(k)) || p == (j.min(k), j.max(k))
                })
        });
        if chained {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], ord);
        let r = normal_form(&s, &basis, ord);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(ord);
        leads.push(r.leading_monomial(ord).unwrap());
        basis.push(r);
        let n = basis.len() - 1;
        for k in 0..n {
            push_pair(&mut pairs, &leads, k, n);
        }
    }

    GroebnerBasis {
        order: ord,
        field,
        generators: interreduce(basis, ord),
    }
}

fn interreduce(basis: Vec<Polynomial>, ord: MonomialOrder) -> Vec<Polynomial> {
    let mut sorted: Vec<(Monomial, Polynomial)> = basis
        .into_iter()
        .map(|g| (g.leading_monomial(ord).unwrap(), g))
        .collect();
    sorted.sort_by(|a, b| ord.compare(&a.0, &b.0));

    // minimal: drop anything whose leading monomial is divisible by a kept one
    let mut minimal: Vec<(Monomial, Polynomial)> = Vec::new();
    for (m, g) in sorted {
        if !minimal.iter().any(|(l, _)| l.divides(&m)) {
            minimal.push((m, g));
        }
    }

    let polys: Vec<Polynomial> = minimal.iter().map(|(_, g)| g.clone()).collect();
    let mut reduced: Vec<Polynomial> = (0..polys.len())
        .map(|i| {
            let others: Vec<Polynomial> = polys
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            normal_form(&polys[i], &others, ord).monic(ord)
        })
        .collect();
    reduced.sort_by(|a, b| ord.compare(&b.leading_monomial(ord).unwrap(), &a.leading_monomial(ord).unwrap()));
    reduced
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::{OrderKind, VarPrecedence};
    use crate::parse::{parse_ideal, parse_polynomial};
    use proptest::prelude::*;

    fn q(s: &str) -> Polynomial {
        parse_polynomial(s, Field::Rationals).unwrap()
    }

    fn gb(s: &str, ord: MonomialOrder) -> GroebnerBasis {
        buchberger(&parse_ideal(s, Field::Rationals).unwrap(), ord)
    }

    const DRL: MonomialOrder = MonomialOrder::new(OrderKind::DegRevLex, VarPrecedence::XY);
    const LEX_XY: MonomialOrder = MonomialOrder::new(OrderKind::Lex, VarPrecedence::XY);
    const LEX_YX: MonomialOrder = MonomialOrder::new(OrderKind::Lex, VarPrecedence::YX);

    #[test]
    fn division_examples() {
        // x^2 + y = 1*(x^2 - y) + 2y
        assert_eq!(normal_form(&q("x^2 + y"), &[q("x^2 - y")], DRL), q("2y"));
        assert_eq!(normal_form(&q("y"), &[q("x")], LEX_XY), q("y"));
        // x^3 = x*(x^2 - y) + xy
        let v = normal_form(&q("x^3"), &[q("x^2 - y")], LEX_XY);
        assert_eq!(v, q("x*y"));
        assert!(normal_form(&(&q("x^3") - &v), &[q("x^2 - y")], LEX_XY).is_zero());
    }

    #[test]
    fn division_uses_first_divisor_in_sequence() {
        // both x and x + y have leading monomial x under lex x>y
        let r1 = normal_form(&q("x"), &[q("x + y"), q("x")], LEX_XY);
        let r2 = normal_form(&q("x"), &[q("x"), q("x + y")], LEX_XY);
        assert_eq!(r1, q("-y"));
        assert!(r2.is_zero());
    }

    #[test]
    fn buchberger_examples() {
        assert_eq!(gb("x, y", DRL).generators(), &[q("x"), q("y")]);
        assert_eq!(gb("y - x^2, x^3", DRL).generators(), &[q("x^2 - y"), q("x*y"), q("y^2")]);
        for ord in MonomialOrder::all() {
            let g = gb("x^2, x*y, y^2", ord);
            let mut got = g.generators().to_vec();
            got.sort_by_key(|p| p.leading_monomial(ord));
            let mut want = vec![q("x^2"), q("x*y"), q("y^2")];
            want.sort_by_key(|p| p.leading_monomial(ord));
            assert_eq!(got, want);
        }
        assert_eq!(gb("y - x^2, x^3", LEX_YX).generators(), &[q("y - x^2"), q("x^3")]);
        assert!(gb("0", DRL).is_empty());
        assert!(gb("x, x - 1", DRL).is_unit());
    }

    #[test]
    fn initial_ideals_and_dimension() {
        assert_eq!(
            initial_ideal(&gb("y - x^2, x^3", LEX_YX)),
            vec![Monomial::Y, Monomial::new(3, 0)]
        );
        assert_eq!(
            initial_ideal(&gb("y - x^2, x^3", DRL)),
            vec![Monomial::new(2, 0), Monomial::new(1, 1), Monomial::new(0, 2)]
        );
        assert_eq!(initial_ideal(&gb("x, y", DRL)), vec![Monomial::X, Monomial::Y]);
        assert!(is_zero_dimensional(&gb("x^2, x*y, y^2", DRL)));
        assert!(!is_zero_dimensional(&gb("x", DRL)));
        assert!(is_zero_dimensional(&gb("y, x^3", LEX_YX)));
        assert!(!is_zero_dimensional(&gb("x*y", DRL)));
    }

    #[test]
    fn modular_bases() {
        let g = buchberger(&parse_ideal("x^2 - 1, y - x", Field::Prime(5)).unwrap(), DRL);
        assert!(g.certify());
        assert!(g.is_reduced());
        assert!(g.contains(&parse_polynomial("y^2 - 1", Field::Prime(5)).unwrap()));
    }

    fn small_poly(field: Field) -> impl Strategy<Value = Polynomial> {
        prop::collection::vec(((0u32..4, 0u32..4), -3i64..4), 1..5).prop_map(move |terms| {
            Polynomial::from_terms(terms.into_iter().map(|((a, b), c)| (Monomial::new(a, b), field.from_i64(c))))
        })
    }

    fn order() -> impl Strategy<Value = MonomialOrder> {
        (0..6usize).prop_map(|i| MonomialOrder::all()[i])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn basis_invariants(
            gens in prop::collection::vec(small_poly(Field::Prime(7)), 1..4),
            ord in order(),
            mult in small_poly(Field::Prime(7)),
        ) {
            let g = buchberger(&gens, ord);
            prop_assert!(g.certify());
            prop_assert!(g.is_reduced());
            // idempotent
            prop_assert_eq!(&buchberger(g.generators(), ord), &g);
            // independent of generator order
            let mut rev = gens.clone();
            rev.reverse();
            prop_assert_eq!(&buchberger(&rev, ord), &g);
            // ideal membership
            for f in &gens {
                prop_assert!(g.contains(&(&mult * f)));
            }
        }

        #[test]
        fn division_is_correct(
            gens in prop::collection::vec(small_poly(Field::Rationals), 1..3),
            f in small_poly(Field::Rationals),
            ord in order(),
        ) {
            let nonzero: Vec<_> = gens.into_iter().filter(|g| !g.is_zero()).collect();
            prop_assume!(!nonzero.is_empty());
            let r = normal_form(&f, &nonzero, ord);
            let leads: Vec<_> = nonzero.iter().map(|g| g.leading_monomial(ord).unwrap()).collect();
            prop_assert!(r.monomials().all(|m| leads.iter().all(|l| !l.divides(m))));
            let g = buchberger(&nonzero, ord);
            prop_assert!(g.contains(&(&f - &r)));
        }
    }
}
