//! The Artinian quotient `A = k[x,y]/I` of a zero-dimensional ideal and its
//! local invariants at rational support points.
//!
//! `A` is presented by its standard monomials and the commuting matrices of
//! multiplication by `x` and `y`. The local factor at a rational point `p` is
//! the joint generalized eigenspace of the pair at `p`; translated to the
//! origin its matrices are nilpotent. Two independent linear-algebra routes
//! give the socle dimension and the minimal number of generators of the local
//! ideal, and the two must differ by exactly one.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::groebner::GroebnerBasis;
use crate::linalg::{Echelon, Matrix, Subspace};
use crate::monomial::{Monomial, MonomialOrder};
use crate::polynomial::Polynomial;

/// Standard monomials of a reduced Gröbner basis, ascending in its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    order: MonomialOrder,
    monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// The colength `n = dim_k k[x,y]/I`.
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.iter().position(|s| s == m)
    }
}

/// Monomials outside the initial ideal. The unit ideal gives an empty basis.
pub fn quotient_basis(gb: &GroebnerBasis) -> Result<QuotientBasis> {
    if !gb.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let leads = gb.leading_monomials();
    let x_bound = leads.iter().filter(|m| m.y == 0).map(|m| m.x).min().unwrap();
    let y_bound = leads.iter().filter(|m| m.x == 0).map(|m| m.y).min().unwrap();
    let mut monomials: Vec<Monomial> = (0..x_bound)
        .flat_map(|a| (0..y_bound).map(move |b| Monomial::new(a, b)))
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .collect();
    let ord = gb.order();
    monomials.sort_by(|a, b| ord.compare(a, b));
    Ok(QuotientBasis { order: ord, monomials })
}

/// Multiplication by `x` and by `y` on a basis of a finite-dimensional algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicationPair {
    pub x: Matrix,
    pub y: Matrix,
}

impl MultiplicationPair {
    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn commutes(&self) -> bool {
        &self.x * &self.y == &self.y * &self.x
    }

    /// Matrix of multiplication by `x^a y^b`.
    pub fn monomial(&self, m: &Monomial) -> Matrix {
        &self.x.pow(m.x as usize) * &self.y.pow(m.y as usize)
    }
}

/// Column `j` of `M_x` is the normal form of `x` times the `j`-th standard
/// monomial, written in the standard basis; likewise `M_y`.
pub fn multiplication_matrices(qb: &QuotientBasis, gb: &GroebnerBasis) -> MultiplicationPair {
    let field = gb.field();
    let n = qb.dim();
    let index: HashMap<Monomial, usize> = qb.monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let build = |var: Monomial| {
        let mut mat = Matrix::zeros(field, n, n);
        for (j, s) in qb.monomials.iter().enumerate() {
            let product = *s * var;
            let nf = gb.reduce(&Polynomial::monomial(product, field));
            for (m, c) in nf.terms() {
                let i = *index.get(m).expect("normal form is supported on standard monomials");
                mat.set(i, j, c.clone());
            }
        }
        mat
    };
    MultiplicationPair {
        x: build(Monomial::X),
        y: build(Monomial::Y),
    }
}

/// A rational point of the plane.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl Point {
    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// The local factor `O_{ξ,p}` at a rational support point, translated so
/// that `p` sits at the origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalQuotient {
    point: Point,
    /// Nilpotent multiplication matrices of the translated local algebra.
    matrices: MultiplicationPair,
    nilpotency_index: u32,
}

impl LocalQuotient {
    /// Builds a local quotient from nilpotent commuting matrices of a local algebra.
    pub fn new(point: Point, matrices: MultiplicationPair) -> Result<Self> {
        if matrices.dim() == 0 {
            return Err(Error::UnitIdeal);
        }
        let nilpotency_index = nilpotency_index(&matrices)
            .ok_or_else(|| Error::InvalidInput("multiplication matrices are not nilpotent".into()))?;
        Ok(LocalQuotient {
            point,
            matrices,
            nilpotency_index,
        })
    }

    pub fn point(&self) -> &Point {
        &self.point
    }

    /// `n_p = dim_k O_{ξ,p}`.
    pub fn dim(&self) -> usize {
        self.matrices.dim()
    }

    pub fn matrices(&self) -> &MultiplicationPair {
        &self.matrices
    }

    pub fn field(&self) -> Field {
        self.matrices.x.field()
    }

    /// Least `r` with `m_p^r ⊆ I` locally.
    pub fn nilpotency_index(&self) -> u32 {
        self.nilpotency_index
    }
}

/// Least `r` such that every degree-`r` word in the matrices vanishes.
fn nilpotency_index(pair: &MultiplicationPair) -> Option<u32> {
    let n = pair.dim();
    let field = pair.x.field();
    let mut x_pows = vec![Matrix::identity(field, n)];
    let mut y_pows = vec![Matrix::identity(field, n)];
    for r in 1..=n.max(1) {
        x_pows.push(&x_pows[r - 1] * &pair.x);
        y_pows.push(&y_pows[r - 1] * &pair.y);
        if (0..=r).all(|i| (&x_pows[i] * &y_pows[r - i]).is_zero()) {
            return Some(r as u32);
        }
    }
    None
}

/// Decomposition of `A` into local factors at rational points, plus the
/// dimension of whatever is supported at non-rational points.
#[derive(Clone, Debug)]
pub struct LocalDecomposition {
    pub colength: usize,
    pub components: Vec<LocalQuotient>,
    /// Total dimension of the part of `A` not accounted for by rational points.
    pub non_rational_dim: usize,
}

impl LocalDecomposition {
    pub fn component_at_origin(&self) -> Option<&LocalQuotient> {
        self.components.iter().find(|c| c.point.is_origin())
    }

    /// True when the support is the origin alone.
    pub fn is_local_at_origin(&self) -> bool {
        self.non_rational_dim == 0 && self.components.len() == 1 && self.components[0].point.is_origin()
    }
}

/// Splits `A` into local factors at the rational joint eigenvalues of
/// `(M_x, M_y)`. Each factor is the joint generalized kernel of
/// `M_x - a` and `M_y - b`, computed by raising each to the `n`-th power.
pub fn local_components(gb: &GroebnerBasis) -> Result<LocalDecomposition> {
    let qb = quotient_basis(gb)?;
    let n = qb.dim();
    if n == 0 {
        return Ok(LocalDecomposition {
            colength: 0,
            components: Vec::new(),
            non_rational_dim: 0,
        });
    }
    let field = gb.field();
    let pair = multiplication_matrices(&qb, gb);
    let mut components = Vec::new();
    let whole = Subspace::full(field, n);

    for a in field.roots(&pair.x.charpoly()) {
        let kx = pair.x.shift(&a).pow(n).kernel();
        let ay = kx.restrict(&pair.y);
        for b in field.roots(&ay.charpoly()) {
            let inner = ay.shift(&b).pow(kx.dim()).kernel();
            let joint = whole.compose(&kx).compose(&inner);
            let local = MultiplicationPair {
                x: joint.restrict(&pair.x).shift(&a),
                y: joint.restrict(&pair.y).shift(&b),
            };
            components.push(LocalQuotient::new(Point { x: a.clone(), y: b }, local)?);
        }
    }
    let rational: usize = components.iter().map(LocalQuotient::dim).sum();
    Ok(LocalDecomposition {
        colength: n,
        components,
        non_rational_dim: n - rational,
    })
}

/// `dim_k { v : x v = y v = 0 }`, the kernel of the stacked matrix `[M_x; M_y]`.
pub fn socle_dimension(lq: &LocalQuotient) -> usize {
    let m = &lq.matrices;
    m.x.stack(&m.y).kernel().dim()
}

/// The image of a local ideal `J ⊂ k[x,y]` at the origin inside the
/// truncation `V = k[x,y]/m^{r+1}`, where `m^r ⊆ J`.
#[derive(Clone, Debug)]
pub struct LocalIdeal {
    truncation: u32,
    space: Vec<Monomial>,
    span: Echelon,
}

impl LocalIdeal {
    fn layout(field: Field, r: u32) -> (Vec<Monomial>, HashMap<Monomial, usize>, Echelon) {
        let space = Monomial::up_to_degree(r);
        let index = space.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        (space.clone(), index, Echelon::new(field, space.len()))
    }

    fn vector(field: Field, index: &HashMap<Monomial, usize>, f: &Polynomial, r: u32) -> Vec<FieldElement> {
        let mut v = vec![field.zero(); index.len()];
        for (m, c) in f.terms() {
            if m.degree() <= r {
                v[index[m]] = c.clone();
            }
        }
        v
    }

    /// From polynomial generators of an ideal whose local nilpotency index at
    /// the origin is `r`. The truncated ideal is spanned by all monomial
    /// multiples of the generators together with every monomial of degree `r`.
    pub fn from_generators(gens: &[Polynomial], r: u32) -> Result<Self> {
        let field = gens
            .iter()
            .find_map(Polynomial::field)
            .ok_or_else(|| Error::InvalidInput("no nonzero generators".into()))?;
        if gens.iter().any(|g| g.constant_term().is_some()) {
            return Err(Error::PointNotInSupport);
        }
        let (space, index, mut span) = Self::layout(field, r);
        for m in space.iter().filter(|m| m.degree() == r) {
            span.insert(Self::vector(field, &index, &Polynomial::monomial(*m, field), r));
        }
        for g in gens.iter().filter(|g| !g.is_zero()) {
            let low = g.min_degree().unwrap();
            for u in space.iter().filter(|u| u.degree() + low <= r) {
                let multiple = g.mul_term(*u, &field.one());
                span.insert(Self::vector(field, &index, &multiple, r));
            }
        }
        Ok(LocalIdeal {
            truncation: r,
            space,
            span,
        })
    }

    /// The annihilator of the local algebra: polynomials `f` of degree at most
    /// `r` with `f(N_x, N_y) = 0`.
    pub fn from_local_quotient(lq: &LocalQuotient) -> Self {
        let field = lq.field();
        let r = lq.nilpotency_index();
        let (space, _, mut span) = Self::layout(field, r);
        let n = lq.dim();
        let columns: Vec<Vec<FieldElement>> = space
            .iter()
            .map(|m| {
                let mm = lq.matrices.monomial(m);
                (0..n).flat_map(|i| mm.row(i).to_vec()).collect()
            })
            .collect();
        let eval = Matrix::from_columns(field, n * n, &columns);
        for v in eval.kernel().basis {
            span.insert(v);
        }
        LocalIdeal {
            truncation: r,
            space,
            span,
        }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    /// `dim_k` of the truncated ideal.
    pub fn truncated_dim(&self) -> usize {
        self.span.rank()
    }

    /// The span of `x * f` and `y * f` over the truncated ideal.
    fn maximal_multiple(&self) -> Echelon {
        let field = self.span.field();
        let index: HashMap<Monomial, usize> = self.space.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut out = Echelon::new(field, self.space.len());
        for v in self.span.basis() {
            for var in [Monomial::X, Monomial::Y] {
                let mut w = vec![field.zero(); self.space.len()];
                for (i, c) in v.iter().enumerate() {
                    let m = self.space[i] * var;
                    if !c.is_zero() && m.degree() <= self.truncation {
                        w[index[&m]] = c.clone();
                    }
                }
                out.insert(w);
            }
        }
        out
    }
}

/// `e(J) = dim_k J / mJ`, computed as `rank(J̄) - rank(m J̄)` in the truncation.
pub fn minimal_generator_count(ideal: &LocalIdeal) -> usize {
    ideal.truncated_dim() - ideal.maximal_multiple().rank()
}

/// Betti numbers of the minimal resolution `0 → R^{b2} → R^{b1} → R → O → 0`
/// together with the independently computed socle dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiData {
    pub e: usize,
    pub b1: usize,
    pub b2: usize,
    pub socle_dim: usize,
}

pub fn betti_data(lq: &LocalQuotient, ideal: &LocalIdeal) -> Result<BettiData> {
    let socle = socle_dimension(lq);
    let e = minimal_generator_count(ideal);
    if e == 0 || socle != e - 1 {
        return Err(Error::LemmaViolation {
            socle,
            generators: e,
        });
    }
    Ok(BettiData {
        e,
        b1: e,
        b2: e - 1,
        socle_dim: socle,
    })
}

/// `μ = C(b2 + 1, 2)`, the multiplicity of the universal family at a point
/// whose local ring has socle dimension `b2`.
pub fn universal_family_multiplicity(b2: usize) -> Result<u64> {
    if b2 == 0 {
        return Err(Error::InvalidInput("b2 must be positive for a nonempty scheme".into()));
    }
    let b = b2 as u64;
    Ok(b * (b + 1) / 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityReport {
    pub b2: usize,
    pub mu: u64,
    pub local_length: usize,
    /// `μ ≤ n_p`
    pub mu_le_length: bool,
    pub mu_eq_length: bool,
}

pub fn multiplicity_report(lq: &LocalQuotient, ideal: &LocalIdeal) -> Result<MultiplicityReport> {
    let betti = betti_data(lq, ideal)?;
    let mu = universal_family_multiplicity(betti.b2)?;
    let n = lq.dim();
    Ok(MultiplicityReport {
        b2: betti.b2,
        mu,
        local_length: n,
        mu_le_length: mu <= n as u64,
        mu_eq_length: mu == n as u64,
    })
}

/// Picks the generator-based truncation at the origin and the
/// annihilator-based one elsewhere.
pub fn local_ideal(gb: &GroebnerBasis, lq: &LocalQuotient) -> Result<LocalIdeal> {
    if lq.point().is_origin() {
        LocalIdeal::from_generators(gb.generators(), lq.nilpotency_index())
    } else {
        Ok(LocalIdeal::from_local_quotient(lq))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::buchberger;
    use crate::monomial::{OrderKind, VarPrecedence};
    use crate::parse::parse_ideal;

    fn gb(s: &str) -> GroebnerBasis {
        buchberger(&parse_ideal(s, Field::Rationals).unwrap(), MonomialOrder::default())
    }

    fn gb_in(s: &str, field: Field) -> GroebnerBasis {
        buchberger(&parse_ideal(s, field).unwrap(), MonomialOrder::default())
    }

    fn origin(s: &str) -> (GroebnerBasis, LocalQuotient) {
        let g = gb(s);
        let d = local_components(&g).unwrap();
        assert!(d.is_local_at_origin(), "{s}");
        let lq = d.components[0].clone();
        (g, lq)
    }

    const PRODUCT: &str = "x*(x-1)^2, x*(x-1)*(y-2), x*(y-2)^2, y*(x-1)^2, y*(x-1)*(y-2), y*(y-2)^2";

    fn mat(rows: &[&[i64]]) -> Matrix {
        let f = Field::Rationals;
        Matrix::from_rows(f, rows.iter().map(|r| r.iter().map(|&v| f.from_i64(v)).collect()).collect())
    }

    #[test]
    fn quotient_bases() {
        assert_eq!(quotient_basis(&gb("x, y")).unwrap().monomials(), &[Monomial::ONE]);
        assert_eq!(
            quotient_basis(&gb("x^2, x*y, y^2")).unwrap().monomials(),
            &[Monomial::ONE, Monomial::Y, Monomial::X]
        );
        let lex = MonomialOrder::new(OrderKind::Lex, VarPrecedence::YX);
        let g = buchberger(&parse_ideal("y, x^3", Field::Rationals).unwrap(), lex);
        assert_eq!(
            quotient_basis(&g).unwrap().monomials(),
            &[Monomial::ONE, Monomial::X, Monomial::new(2, 0)]
        );
        assert_eq!(quotient_basis(&gb("x")), Err(Error::NotZeroDimensional));
        assert_eq!(quotient_basis(&gb("1, x")).unwrap().dim(), 0);
    }

    #[test]
    fn multiplication_examples() {
        let g = gb("x, y");
        let m = multiplication_matrices(&quotient_basis(&g).unwrap(), &g);
        assert!(m.x.is_zero() && m.y.is_zero() && m.dim() == 1);

        // basis (1, y, x) under degrevlex: x*1 = x, x*x = 0, x*y = 0
        let g = gb("x^2, x*y, y^2");
        let qb = quotient_basis(&g).unwrap();
        let m = multiplication_matrices(&qb, &g);
        assert_eq!(m.x, mat(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]));
        assert_eq!(m.y, mat(&[&[0, 0, 0], &[1, 0, 0], &[0, 0, 0]]));

        let lex = MonomialOrder::new(OrderKind::Lex, VarPrecedence::YX);
        let g = buchberger(&parse_ideal("y, x^3", Field::Rationals).unwrap(), lex);
        let m = multiplication_matrices(&quotient_basis(&g).unwrap(), &g);
        assert_eq!(m.x, mat(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0]]));
        assert!(m.y.is_zero());
        assert!(m.commutes());
    }

    #[test]
    fn splits_into_rational_points() {
        let d = local_components(&gb("x, y")).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].dim(), 1);
        assert_eq!(d.components[0].nilpotency_index(), 1);

        let d = local_components(&gb("x*(x - 1), y")).unwrap();
        let pts: Vec<String> = d.components.iter().map(|c| c.point().to_string()).collect();
        assert_eq!(pts, vec!["(0, 0)", "(1, 0)"]);
        assert!(d.components.iter().all(|c| c.dim() == 1));

        let (_, lq) = origin("x^2, x*y, y^2");
        assert_eq!((lq.dim(), lq.nilpotency_index()), (3, 2));

        // four reduced points
        let d = local_components(&gb("x^2 - x, y^2 - y")).unwrap();
        assert_eq!(d.components.len(), 4);
        assert_eq!(d.non_rational_dim, 0);

        // the product m_0 * (x - 1, y - 2)^2: a simple point and a fat point
        let d = local_components(&gb(PRODUCT)).unwrap();
        let summary: Vec<(String, usize)> = d.components.iter().map(|c| (c.point().to_string(), c.dim())).collect();
        assert_eq!(summary, vec![("(0, 0)".to_string(), 1), ("(1, 2)".to_string(), 3)]);
    }

    #[test]
    fn non_rational_support_is_reported() {
        let d = local_components(&gb("x^2 - 2, y")).unwrap();
        assert!(d.components.is_empty());
        assert_eq!(d.non_rational_dim, 2);
        let d = local_components(&gb("x*(x^2 + 1), y")).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.non_rational_dim, 2);
        // x^2 + 1 splits over F_5
        let d = local_components(&gb_in("x*(x^2 + 1), y", Field::Prime(5))).unwrap();
        assert_eq!(d.components.len(), 3);
        assert_eq!(d.non_rational_dim, 0);
    }

    #[test]
    fn socle_examples() {
        for (s, want) in [("x, y", 1), ("x^2, x*y, y^2", 2), ("y, x^3", 1)] {
            let (_, lq) = origin(s);
            assert_eq!(socle_dimension(&lq), want, "{s}");
        }
    }

    #[test]
    fn generator_counts() {
        for (s, want) in [("x, y", 2), ("x^2, x*y, y^2", 3), ("y - x^2, x^3", 2)] {
            let (g, lq) = origin(s);
            let by_gens = LocalIdeal::from_generators(g.generators(), lq.nilpotency_index()).unwrap();
            assert_eq!(minimal_generator_count(&by_gens), want, "{s}");
            let by_matrices = LocalIdeal::from_local_quotient(&lq);
            assert_eq!(minimal_generator_count(&by_matrices), want, "{s}");
        }
        let g = gb("x - 1, y");
        assert_eq!(
            LocalIdeal::from_generators(g.generators(), 1).unwrap_err(),
            Error::PointNotInSupport
        );
    }

    #[test]
    fn betti_examples() {
        for (s, e, b2) in [("x, y", 2, 1), ("x^2, x*y, y^2", 3, 2), ("y, x^3", 2, 1)] {
            let (g, lq) = origin(s);
            let li = local_ideal(&g, &lq).unwrap();
            let b = betti_data(&lq, &li).unwrap();
            assert_eq!((b.e, b.b1, b.b2, b.socle_dim), (e, e, b2, b2), "{s}");
        }
    }

    #[test]
    fn lemma_violation_is_reported() {
        // pair the socle of m^2 with the generators of the maximal ideal
        let (_, lq) = origin("x^2, x*y, y^2");
        let (g, _) = origin("x, y");
        let li = LocalIdeal::from_generators(g.generators(), 1).unwrap();
        assert_eq!(
            betti_data(&lq, &li),
            Err(Error::LemmaViolation { socle: 2, generators: 2 })
        );
    }

    #[test]
    fn multiplicity_formula() {
        assert_eq!(universal_family_multiplicity(1), Ok(1));
        assert_eq!(universal_family_multiplicity(2), Ok(3));
        assert_eq!(universal_family_multiplicity(3), Ok(6));
        assert!(universal_family_multiplicity(0).is_err());
        let mut prev = 0;
        for b in 1..50 {
            let mu = universal_family_multiplicity(b).unwrap();
            assert!(mu > prev);
            prev = mu;
        }
    }

    #[test]
    fn multiplicity_reports() {
        let cases = [("x^2, x*y, y^2", 2, 3, 3, true), ("y, x^5", 1, 1, 5, false), ("x, y", 1, 1, 1, true)];
        for (s, b2, mu, n, eq) in cases {
            let (g, lq) = origin(s);
            let r = multiplicity_report(&lq, &local_ideal(&g, &lq).unwrap()).unwrap();
            assert_eq!((r.b2, r.mu, r.local_length, r.mu_eq_length), (b2, mu, n, eq), "{s}");
            assert!(r.mu_le_length);
        }
    }

    #[test]
    fn off_origin_components_use_the_annihilator() {
        let g = gb(PRODUCT);
        let d = local_components(&g).unwrap();
        let fat = &d.components[1];
        assert_eq!(fat.nilpotency_index(), 2);
        let b = betti_data(fat, &local_ideal(&g, fat).unwrap()).unwrap();
        assert_eq!((b.e, b.b2, b.socle_dim), (3, 2, 2));
        let simple = &d.components[0];
        let b = betti_data(simple, &local_ideal(&g, simple).unwrap()).unwrap();
        assert_eq!((b.e, b.b2), (2, 1));
    }

    #[test]
    fn both_truncation_routes_agree_at_the_origin() {
        for s in ["y^2 - x^3, x*y", "x^2 - y^3, x*y^2, y^4", "x^3, x^2*y, y^2 - x*y", "x^2, y^2", PRODUCT] {
            let g = gb(s);
            let d = local_components(&g).unwrap();
            let lq = d.component_at_origin().unwrap();
            let a = LocalIdeal::from_generators(g.generators(), lq.nilpotency_index()).unwrap();
            let b = LocalIdeal::from_local_quotient(lq);
            assert_eq!(a.truncated_dim(), b.truncated_dim(), "{s}");
            assert_eq!(minimal_generator_count(&a), minimal_generator_count(&b), "{s}");
        }
    }

    #[test]
    fn nilpotency_index_is_exact() {
        // (x^2, y^2): both squares vanish but xy does not, so r = 3
        let (_, lq) = origin("x^2, y^2");
        assert_eq!(lq.nilpotency_index(), 3);
        let m = lq.matrices();
        assert!(m.x.pow(2).is_zero() && m.y.pow(2).is_zero());
        assert!(!(&m.x * &m.y).is_zero());
    }
}
