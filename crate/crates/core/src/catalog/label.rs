//! Type labels: the names of the catalog families, their textual grammar,
//! and the canonicalization used when two names denote the same class.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::rational::Rational;
use crate::Result;

/// Name of a catalog family with its parameters.
///
/// Ordinary families use underscore notation (`A_3`, `BC_2`); extended
/// families use parenthesized parameters (`Adot(0,4)`, `B(2,1)`,
/// `D(2,1,1/2)`). The `Display`/`FromStr` pair is a strict grammar: parsing
/// accepts exactly the canonical spellings.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    BC(usize),
    G2,
    F4,
    /// Null anchor over a single simply-laced component: `Adot(0,n)`.
    ImaginaryA(usize),
    /// Null anchor over a single doubled-edge component: `Cdot(0,n)`.
    ImaginaryC(usize),
    /// Null anchors spanning two simply-laced components of different sizes:
    /// `Adot(m,n)`, `m < n`.
    ImaginaryAPair(usize, usize),
    /// Two equal simply-laced components joined by null roots: `A(l,l)`.
    APair(usize),
    /// `B(t,u)` family rows (all four corner cases included).
    BPair(usize, usize),
    /// `BC(t,u)`, canonical with `t <= u`.
    BCPair(usize, usize),
    /// `C(t,u)`, canonical with `t <= u`.
    CPair(usize, usize),
    /// `D(t,u)`; the three regimes are `t = 1`, `t = 2`, and `t >= 3`.
    DPair(usize, usize),
    /// `AB(1,3)`.
    AB13,
    /// `G(1,2)`.
    G12,
    /// `D(2,1,lambda)` with `lambda` outside `{0, -1}`.
    D21(Rational),
}

impl TypeLabel {
    /// Structural validity of the parameters (range minimums, orderings,
    /// excluded scalars). Construction and parsing both enforce this.
    pub fn validate(&self) -> Result<()> {
        use TypeLabel::*;
        let fail = |reason: &str| {
            Err(Error::BadParameter {
                family: self.family_name().to_string(),
                reason: reason.to_string(),
            })
        };
        match self {
            A(n) | B(n) | BC(n) if *n < 1 => fail("rank must be at least 1"),
            C(n) if *n < 2 => fail("rank must be at least 2"),
            D(n) if *n < 4 => fail("rank must be at least 4"),
            ImaginaryA(n) | ImaginaryC(n) if *n < 2 => fail("size must be at least 2"),
            ImaginaryAPair(m, n) if *m < 2 => fail("sizes must be at least 2"),
            ImaginaryAPair(m, n) if m >= n => {
                fail("sizes must be distinct and written in increasing order")
            }
            APair(l) if *l < 1 => fail("size must be at least 1"),
            BPair(t, u) if *t < 1 || *u < 1 => fail("sizes must be at least 1"),
            BCPair(t, u) if *t < 1 || *u < 1 => fail("sizes must be at least 1"),
            BCPair(t, u) if t > u => fail("sizes must be written in increasing order"),
            CPair(t, u) if *t < 1 || *u < 2 => fail("first size at least 1, second at least 2"),
            CPair(t, u) if t > u => fail("sizes must be written in increasing order"),
            DPair(1, u) if *u < 3 => fail("second size must be at least 3 when the first is 1"),
            DPair(t, u) if *t >= 2 && *u < 2 => fail("second size must be at least 2"),
            DPair(t, _) if *t < 1 => fail("sizes must be at least 1"),
            D21(lambda) if lambda.is_zero() || *lambda == Rational::from_integer(-1) => {
                fail("scalar must avoid 0 and -1")
            }
            _ => Ok(()),
        }
    }

    /// Family name without parameters, for diagnostics.
    pub fn family_name(&self) -> &'static str {
        use TypeLabel::*;
        match self {
            A(_) => "A",
            B(_) => "B",
            C(_) => "C",
            D(_) => "D",
            BC(_) => "BC",
            G2 => "G2",
            F4 => "F4",
            ImaginaryA(_) => "Adot(0,_)",
            ImaginaryC(_) => "Cdot(0,_)",
            ImaginaryAPair(_, _) => "Adot(_,_)",
            APair(_) => "A(_,_)",
            BPair(_, _) => "B(_,_)",
            BCPair(_, _) => "BC(_,_)",
            CPair(_, _) => "C(_,_)",
            DPair(_, _) => "D(_,_)",
            AB13 => "AB(1,3)",
            G12 => "G(1,2)",
            D21(_) => "D(2,1,_)",
        }
    }

    /// Whether two labels belong to the same family, parameters aside.
    pub fn same_family(&self, other: &TypeLabel) -> bool {
        std::mem::discriminant(self) == std::mem::discriminant(other)
    }

    /// Ambient dimension of the constructed realization.
    pub fn dim(&self) -> usize {
        use TypeLabel::*;
        match self {
            A(n) | B(n) | C(n) | D(n) | BC(n) => *n,
            G2 => 2,
            F4 => 4,
            ImaginaryA(n) => *n,
            ImaginaryC(n) => n + 1,
            ImaginaryAPair(m, n) => m + n - 1,
            APair(l) => 2 * l,
            BPair(t, u) | BCPair(t, u) | CPair(t, u) | DPair(t, u) => t + u,
            AB13 => 4,
            G12 => 3,
            D21(_) => 3,
        }
    }

    /// The canonical name of the isomorphism class. Distinct labels can name
    /// the same class at small parameters (a rank-1 doubled-edge family is
    /// the rank-1 simply-laced one; the two rank-2 two-length families
    /// coincide); classification always reports the canonical name.
    pub fn canonical(&self) -> TypeLabel {
        match self {
            TypeLabel::B(1) => TypeLabel::A(1),
            TypeLabel::C(2) => TypeLabel::B(2),
            other => other.clone(),
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TypeLabel::*;
        match self {
            A(n) => write!(f, "A_{n}"),
            B(n) => write!(f, "B_{n}"),
            C(n) => write!(f, "C_{n}"),
            D(n) => write!(f, "D_{n}"),
            BC(n) => write!(f, "BC_{n}"),
            G2 => write!(f, "G2"),
            F4 => write!(f, "F4"),
            ImaginaryA(n) => write!(f, "Adot(0,{n})"),
            ImaginaryC(n) => write!(f, "Cdot(0,{n})"),
            ImaginaryAPair(m, n) => write!(f, "Adot({m},{n})"),
            APair(l) => write!(f, "A({l},{l})"),
            BPair(t, u) => write!(f, "B({t},{u})"),
            BCPair(t, u) => write!(f, "BC({t},{u})"),
            CPair(t, u) => write!(f, "C({t},{u})"),
            DPair(t, u) => write!(f, "D({t},{u})"),
            AB13 => write!(f, "AB(1,3)"),
            G12 => write!(f, "G(1,2)"),
            D21(lambda) => write!(f, "D(2,1,{lambda})"),
        }
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadLabel(s.to_string());
        let label = match s {
            "G2" => TypeLabel::G2,
            "F4" => TypeLabel::F4,
            "AB(1,3)" => TypeLabel::AB13,
            "G(1,2)" => TypeLabel::G12,
            _ => {
                if let Some((family, rank)) = s.split_once('_') {
                    let n: usize = parse_count(rank).ok_or_else(bad)?;
                    match family {
                        "A" => TypeLabel::A(n),
                        "B" => TypeLabel::B(n),
                        "C" => TypeLabel::C(n),
                        "D" => TypeLabel::D(n),
                        "BC" => TypeLabel::BC(n),
                        _ => return Err(bad()),
                    }
                } else {
                    let (family, rest) = s.split_once('(').ok_or_else(bad)?;
                    let inner = rest.strip_suffix(')').ok_or_else(bad)?;
                    let parts: Vec<&str> = inner.split(',').collect();
                    match (family, parts.as_slice()) {
                        ("Adot", ["0", n]) => {
                            TypeLabel::ImaginaryA(parse_count(n).ok_or_else(bad)?)
                        }
                        ("Cdot", ["0", n]) => {
                            TypeLabel::ImaginaryC(parse_count(n).ok_or_else(bad)?)
                        }
                        ("Adot", [m, n]) => TypeLabel::ImaginaryAPair(
                            parse_count(m).ok_or_else(bad)?,
                            parse_count(n).ok_or_else(bad)?,
                        ),
                        ("A", [l, l2]) if l == l2 => {
                            TypeLabel::APair(parse_count(l).ok_or_else(bad)?)
                        }
                        ("D", ["2", "1", lambda]) => {
                            TypeLabel::D21(lambda.parse().map_err(|_| bad())?)
                        }
                        ("B", [t, u]) => TypeLabel::BPair(
                            parse_count(t).ok_or_else(bad)?,
                            parse_count(u).ok_or_else(bad)?,
                        ),
                        ("BC", [t, u]) => TypeLabel::BCPair(
                            parse_count(t).ok_or_else(bad)?,
                            parse_count(u).ok_or_else(bad)?,
                        ),
                        ("C", [t, u]) => TypeLabel::CPair(
                            parse_count(t).ok_or_else(bad)?,
                            parse_count(u).ok_or_else(bad)?,
                        ),
                        ("D", [t, u]) => TypeLabel::DPair(
                            parse_count(t).ok_or_else(bad)?,
                            parse_count(u).ok_or_else(bad)?,
                        ),
                        _ => return Err(bad()),
                    }
                }
            }
        };
        label.validate()?;
        Ok(label)
    }
}

/// Positive decimal count without sign or leading zeros.
fn parse_count(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || s.starts_with('0') {
        return None;
    }
    s.parse().ok()
}
