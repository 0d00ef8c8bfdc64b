//! Monomials `x^a y^b` and the monomial orders on them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The monomial `x^x * y^y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    pub x: u32,
    pub y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, y: 0 };
    pub const X: Monomial = Monomial { x: 1, y: 0 };
    pub const Y: Monomial = Monomial { x: 0, y: 1 };

    pub const fn new(x: u32, y: u32) -> Self {
        Monomial { x, y }
    }

    pub fn degree(&self) -> u32 {
        self.x + self.y
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    /// `self / divisor` when the quotient is a monomial.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor
            .divides(self)
            .then(|| Monomial::new(self.x - divisor.x, self.y - divisor.y))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.x.max(other.x), self.y.max(other.y))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.x.min(other.x), self.y.min(other.y))
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.gcd(other) == Monomial::ONE
    }

    /// True for `1`, `x^a` or `y^b`.
    pub fn is_pure_power(&self) -> bool {
        self.x == 0 || self.y == 0
    }

    /// All monomials of total degree at most `d`, ordered by degree and then
    /// by descending power of `x`.
    pub fn up_to_degree(d: u32) -> Vec<Monomial> {
        (0..=d)
            .flat_map(|k| (0..=k).rev().map(move |a| Monomial::new(a, k - a)))
            .collect()
    }
}

impl std::ops::Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factor = |f: &mut fmt::Formatter<'_>, v: &str, e: u32| match e {
            1 => write!(f, "{v}"),
            _ => write!(f, "{v}^{e}"),
        };
        match (self.x, self.y) {
            (0, 0) => write!(f, "1"),
            (a, 0) => factor(f, "x", a),
            (0, b) => factor(f, "y", b),
            (a, b) => {
                factor(f, "x", a)?;
                write!(f, "*")?;
                factor(f, "y", b)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
}

/// Which variable is larger.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarPrecedence {
    /// `x > y`
    #[default]
    #[serde(rename = "xy")]
    XY,
    /// `y > x`
    #[serde(rename = "yx")]
    YX,
}

/// A monomial order on `k[x, y]`. The default is degrevlex with `x > y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub vars: VarPrecedence,
}

impl MonomialOrder {
    pub const fn new(kind: OrderKind, vars: VarPrecedence) -> Self {
        MonomialOrder { kind, vars }
    }

    /// The six orders: three kinds times two variable precedences.
    pub fn all() -> [MonomialOrder; 6] {
        use OrderKind::*;
        use VarPrecedence::*;
        [
            MonomialOrder::new(Lex, XY),
            MonomialOrder::new(Lex, YX),
            MonomialOrder::new(DegLex, XY),
            MonomialOrder::new(DegLex, YX),
            MonomialOrder::new(DegRevLex, XY),
            MonomialOrder::new(DegRevLex, YX),
        ]
    }

    /// A key whose natural tuple order is this monomial order.
    pub fn key(&self, m: &Monomial) -> (u32, u32, u32) {
        let (first, last) = match self.vars {
            VarPrecedence::XY => (m.x, m.y),
            VarPrecedence::YX => (m.y, m.x),
        };
        match self.kind {
            OrderKind::Lex => (first, last, 0),
            OrderKind::DegLex => (first + last, first, last),
            // smaller exponent of the last variable wins among equal degrees
            OrderKind::DegRevLex => (first + last, u32::MAX - last, first),
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.compare(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Free-function form of [`MonomialOrder::compare`].
pub fn compare(a: &Monomial, b: &Monomial, ord: MonomialOrder) -> Ordering {
    ord.compare(a, b)
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        })
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lex" => Ok(OrderKind::Lex),
            "deglex" | "grlex" => Ok(OrderKind::DegLex),
            "degrevlex" | "grevlex" => Ok(OrderKind::DegRevLex),
            other => Err(Error::InvalidInput(format!("unknown monomial order `{other}`"))),
        }
    }
}

impl fmt::Display for VarPrecedence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VarPrecedence::XY => "x>y",
            VarPrecedence::YX => "y>x",
        })
    }
}

impl FromStr for VarPrecedence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "xy" | "x>y" => Ok(VarPrecedence::XY),
            "yx" | "y>x" => Ok(VarPrecedence::YX),
            other => Err(Error::InvalidInput(format!("unknown variable precedence `{other}`"))),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.vars)
    }
}
