use std::fmt;
use std::ops::Add;

/// Polynomial degree with `NegInfinity` for the zero polynomial, so that
/// `deg(rs) = deg r + deg s` holds without special cases.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn of_len(len: usize) -> Self {
        if len == 0 {
            Degree::NegInfinity
        } else {
            Degree::Finite(len - 1)
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

impl PartialEq<usize> for Degree {
    fn eq(&self, other: &usize) -> bool {
        *self == Degree::Finite(*other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_infinity_is_absorbing_and_least() {
        assert_eq!(Degree::NegInfinity + Degree::Finite(3), Degree::NegInfinity);
        assert!(Degree::NegInfinity < Degree::Finite(0));
        assert_eq!(Degree::Finite(2) + Degree::Finite(3), 5);
        assert_eq!(Degree::of_len(0), Degree::NegInfinity);
    }
}
