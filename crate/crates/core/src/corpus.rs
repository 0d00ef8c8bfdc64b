//! A fixed list of test ideals over `Q`.

/// One named ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub ideal: &'static str,
    /// Supported at the origin alone.
    pub local: bool,
}

const fn entry(name: &'static str, ideal: &'static str, local: bool) -> CorpusEntry {
    CorpusEntry { name, ideal, local }
}

/// Non-monomial ideals supported only at the origin.
pub const LOCAL: &[CorpusEntry] = &[
    entry("parabola-3", "y - x^2, x^3", true),
    entry("parabola-5", "y - x^3, x^5", true),
    entry("cusp-xy", "y^2 - x^3, x*y", true),
    entry("node-square", "x^2 - y^2, x*y", true),
    entry("sum-of-squares", "x^2 + y^2, x*y", true),
    entry("tacnode-cut", "x^2 - y^3, x*y^2, y^4", true),
    entry("tilted-m3", "x^3, x^2*y, y^2 - x*y", true),
    entry("cusp-plus", "x^2 + y^3, x*y", true),
    entry("cubic-pair", "x*y, x^3 + y^3", true),
    entry("mixed-cubic", "y^2 + x^3, x^2*y", true),
    entry("line-times", "x^2 + x*y, y^3", true),
    entry("skew-m2", "x^2 - x*y, x*y - y^2, y^3", true),
];

/// Ideals with several support points or with non-rational points.
pub const SCATTERED: &[CorpusEntry] = &[
    entry("four-points", "x^2 - x, y^2 - y", false),
    entry("two-points", "x*(x-1), y", false),
    entry(
        "point-and-fat-point",
        "x*(x-1)^2, x*(x-1)*(y-2), x*(y-2)^2, y*(x-1)^2, y*(x-1)*(y-2), y*(y-2)^2",
        false,
    ),
    entry("irrational-pair", "x^2 - 2, y", false),
];

pub fn all() -> impl Iterator<Item = &'static CorpusEntry> {
    LOCAL.iter().chain(SCATTERED)
}
