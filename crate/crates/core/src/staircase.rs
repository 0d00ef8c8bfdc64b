//! Partitions as staircases of monomial ideals.
//!
//! A partition `λ1 ≥ λ2 ≥ … ≥ λℓ` is drawn with `λ_{j+1}` boxes in row `j`,
//! the row of `y^j`; the boxes are the standard monomials
//! `{ x^i y^j : j < ℓ, i < λ_{j+1} }`. The outer corners of the staircase are
//! the minimal generators of the ideal and the inner corners are the lcms of
//! consecutive generators, one per distinct part size.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates that the parts are positive and weakly decreasing.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("a partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn distinct_parts(&self) -> usize {
        1 + self.parts.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// The standard monomials (boxes), row by row.
    pub fn boxes(&self) -> Vec<Monomial> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(j, &len)| (0..len).map(move |i| Monomial::new(i, j as u32)))
            .collect()
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
#[derive(Clone, Debug)]
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // rightmost part bigger than one
        if let Some(k) = current.iter().rposition(|&p| p > 1) {
            let ones = (current.len() - k - 1) as u32;
            let v = current[k] - 1;
            let mut succ = current[..k].to_vec();
            let mut rest = ones + v + 1;
            while rest >= v {
                succ.push(v);
                rest -= v;
            }
            if rest > 0 {
                succ.push(rest);
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

pub fn partitions_of(n: u32) -> Partitions {
    Partitions {
        next: (n >= 1).then(|| vec![n]),
    }
}

/// Minimal generators, from `x^{λ1}` up the staircase to `y^ℓ`.
pub fn monomial_ideal_of(lambda: &Partition) -> Vec<Monomial> {
    let parts = lambda.parts();
    let mut gens: Vec<Monomial> = parts
        .iter()
        .enumerate()
        .filter(|&(j, &p)| j == 0 || p < parts[j - 1])
        .map(|(j, &p)| Monomial::new(p, j as u32))
        .collect();
    gens.push(Monomial::new(0, parts.len() as u32));
    gens
}

/// Outer corners (minimal generators) and inner corners (lcms of
/// consecutive generators) of a staircase.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StaircaseCorners {
    pub outer: Vec<Monomial>,
    pub inner: Vec<Monomial>,
}

impl StaircaseCorners {
    /// Number of minimal generators `e`.
    pub fn e(&self) -> usize {
        self.outer.len()
    }

    /// Number of inner corners, `b2`.
    pub fn b2(&self) -> usize {
        self.inner.len()
    }
}

pub fn corners(lambda: &Partition) -> StaircaseCorners {
    let outer = monomial_ideal_of(lambda);
    let inner: Vec<Monomial> = outer.windows(2).map(|w| w[0].lcm(&w[1])).collect();
    assert_eq!(outer.len(), inner.len() + 1);
    assert_eq!(inner.len(), lambda.distinct_parts());
    StaircaseCorners { outer, inner }
}

/// Largest `k` with `k(k+1)/2 ≤ n`.
pub fn b2_bound(n: u32) -> u32 {
    let n = n as u64;
    let mut k = 0u64;
    while (k + 1) * (k + 2) / 2 <= n {
        k += 1;
    }
    k as u32
}

/// The staircase `(b, b-1, …, 1)` of size `b(b+1)/2`, whose `b2` is `b`.
pub fn optimal_witness(b: u32) -> Result<Partition> {
    if b == 0 {
        return Err(Error::InvalidInput("witness size must be positive".into()));
    }
    Partition::new((1..=b).rev().collect())
}

pub fn is_triangular(n: u32) -> bool {
    let k = b2_bound(n) as u64;
    k * (k + 1) / 2 == n as u64
}
