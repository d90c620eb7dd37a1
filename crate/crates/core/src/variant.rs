//! Ramsey variant descriptions: which parameter applies to each color class
//! and at what thresholds.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{EdgeColoring, Graph};
use crate::solvers::{
    beta_at_least, gamma_at_least, independence_number, ir_at_least, upper_domination_number,
    upper_irredundance_number,
};

/// The three graph parameters a color class can be measured by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamKind {
    /// Independence number.
    Independence,
    /// Upper domination number.
    UpperDomination,
    /// Upper irredundance number.
    UpperIrredundance,
}

impl ParamKind {
    pub fn value(self, g: &Graph) -> usize {
        match self {
            ParamKind::Independence => independence_number(g).value,
            ParamKind::UpperDomination => upper_domination_number(g).value,
            ParamKind::UpperIrredundance => upper_irredundance_number(g).value,
        }
    }

    pub fn at_least(self, g: &Graph, k: usize) -> bool {
        match self {
            ParamKind::Independence => beta_at_least(g, k),
            ParamKind::UpperDomination => gamma_at_least(g, k),
            ParamKind::UpperIrredundance => ir_at_least(g, k),
        }
    }
}

impl fmt::Display for ParamKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamKind::Independence => write!(f, "beta"),
            ParamKind::UpperDomination => write!(f, "Gamma"),
            ParamKind::UpperIrredundance => write!(f, "IR"),
        }
    }
}

/// The six variant letters. Each letter fixes the pair of parameters applied
/// to the blue and red subgraphs:
///
/// | letter | blue  | red   |
/// |--------|-------|-------|
/// | r      | beta  | beta  |
/// | s      | IR    | IR    |
/// | w      | IR    | Gamma |
/// | t      | IR    | beta  |
/// | u      | Gamma | Gamma |
/// | v      | Gamma | beta  |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariantLetter {
    R,
    S,
    W,
    T,
    U,
    V,
}

impl VariantLetter {
    pub const ALL: [VariantLetter; 6] = [
        VariantLetter::S,
        VariantLetter::W,
        VariantLetter::U,
        VariantLetter::T,
        VariantLetter::V,
        VariantLetter::R,
    ];

    pub fn params(self) -> (ParamKind, ParamKind) {
        match self {
            VariantLetter::R => (ParamKind::Independence, ParamKind::Independence),
            VariantLetter::S => (ParamKind::UpperIrredundance, ParamKind::UpperIrredundance),
            VariantLetter::W => (ParamKind::UpperIrredundance, ParamKind::UpperDomination),
            VariantLetter::T => (ParamKind::UpperIrredundance, ParamKind::Independence),
            VariantLetter::U => (ParamKind::UpperDomination, ParamKind::UpperDomination),
            VariantLetter::V => (ParamKind::UpperDomination, ParamKind::Independence),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            VariantLetter::R => 'r',
            VariantLetter::S => 's',
            VariantLetter::W => 'w',
            VariantLetter::T => 't',
            VariantLetter::U => 'u',
            VariantLetter::V => 'v',
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VariantParseError {
    #[error("variant spec must look like \"u(3,3)\", got {0:?}")]
    Malformed(String),
    #[error("unknown variant letter {0:?} (expected one of r, s, w, t, u, v)")]
    UnknownLetter(char),
    #[error("thresholds must be at least 2, got ({0},{1})")]
    ThresholdTooSmall(usize, usize),
}

/// A fully specified Ramsey number variant: a parameter per color and the
/// thresholds `(m, n)` the coloring must reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RamseyVariant {
    pub letter: VariantLetter,
    pub m: usize,
    pub n: usize,
}

impl RamseyVariant {
    pub fn new(letter: VariantLetter, m: usize, n: usize) -> Result<Self, VariantParseError> {
        if m < 2 || n < 2 {
            return Err(VariantParseError::ThresholdTooSmall(m, n));
        }
        Ok(RamseyVariant { letter, m, n })
    }

    pub fn blue_param(&self) -> ParamKind {
        self.letter.params().0
    }

    pub fn red_param(&self) -> ParamKind {
        self.letter.params().1
    }
}

impl fmt::Display for RamseyVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.letter.as_char(), self.m, self.n)
    }
}

impl FromStr for RamseyVariant {
    type Err = VariantParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let letter = match chars.next() {
            Some(c) => match c {
                'r' => VariantLetter::R,
                's' => VariantLetter::S,
                'w' => VariantLetter::W,
                't' => VariantLetter::T,
                'u' => VariantLetter::U,
                'v' => VariantLetter::V,
                other => return Err(VariantParseError::UnknownLetter(other)),
            },
            None => return Err(VariantParseError::Malformed(s.to_string())),
        };
        let rest = chars.as_str();
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| VariantParseError::Malformed(s.to_string()))?;
        let (m_str, n_str) = inner
            .split_once(',')
            .ok_or_else(|| VariantParseError::Malformed(s.to_string()))?;
        let m: usize = m_str
            .trim()
            .parse()
            .map_err(|_| VariantParseError::Malformed(s.to_string()))?;
        let n: usize = n_str
            .trim()
            .parse()
            .map_err(|_| VariantParseError::Malformed(s.to_string()))?;
        RamseyVariant::new(letter, m, n)
    }
}

/// Verdict of evaluating one coloring against a variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AvoidanceVerdict {
    pub blue_value: usize,
    pub red_value: usize,
    pub avoids: bool,
}

/// Applies the variant's parameters to both color classes.
pub fn evaluate_coloring(c: &EdgeColoring, v: &RamseyVariant) -> AvoidanceVerdict {
    let blue_value = v.blue_param().value(c.blue());
    let red_value = v.red_param().value(&c.red());
    AvoidanceVerdict {
        blue_value,
        red_value,
        avoids: blue_value <= v.m - 1 && red_value <= v.n - 1,
    }
}

/// Threshold-only avoidance check; equivalent to `evaluate_coloring(..).avoids`
/// but exits early. Blue is tested first: its threshold is smaller in every
/// case of interest, and the red side is only computed when blue survives.
pub fn coloring_avoids(c: &EdgeColoring, v: &RamseyVariant) -> bool {
    if v.blue_param().at_least(c.blue(), v.m) {
        return false;
    }
    !v.red_param().at_least(&c.red(), v.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn parse_and_display() {
        let v: RamseyVariant = "u(3,3)".parse().unwrap();
        assert_eq!(v.letter, VariantLetter::U);
        assert_eq!((v.m, v.n), (3, 3));
        assert_eq!(v.to_string(), "u(3,3)");

        let v: RamseyVariant = " t( 3 , 8 ) ".parse().unwrap();
        assert_eq!(v.to_string(), "t(3,8)");

        assert!(matches!(
            "x(3,3)".parse::<RamseyVariant>(),
            Err(VariantParseError::UnknownLetter('x'))
        ));
        assert!(matches!(
            "u(3;3)".parse::<RamseyVariant>(),
            Err(VariantParseError::Malformed(_))
        ));
        assert!(matches!(
            "u(1,3)".parse::<RamseyVariant>(),
            Err(VariantParseError::ThresholdTooSmall(1, 3))
        ));
        assert!(matches!(
            "".parse::<RamseyVariant>(),
            Err(VariantParseError::Malformed(_))
        ));
    }

    #[test]
    fn letter_parameter_map() {
        use ParamKind::*;
        let cases = [
            (VariantLetter::R, Independence, Independence),
            (VariantLetter::S, UpperIrredundance, UpperIrredundance),
            (VariantLetter::W, UpperIrredundance, UpperDomination),
            (VariantLetter::T, UpperIrredundance, Independence),
            (VariantLetter::U, UpperDomination, UpperDomination),
            (VariantLetter::V, UpperDomination, Independence),
        ];
        for (letter, blue, red) in cases {
            assert_eq!(letter.params(), (blue, red));
        }
    }

    #[test]
    fn evaluate_pentagon_avoids_r33() {
        let v: RamseyVariant = "r(3,3)".parse().unwrap();
        let c = EdgeColoring::from_blue(Graph::cycle(5).unwrap());
        let verdict = evaluate_coloring(&c, &v);
        assert_eq!((verdict.blue_value, verdict.red_value), (2, 2));
        assert!(verdict.avoids);
        assert!(coloring_avoids(&c, &v));
    }

    #[test]
    fn evaluate_empty_blue_on_six_fails_r33() {
        let v: RamseyVariant = "r(3,3)".parse().unwrap();
        let c = EdgeColoring::from_blue(Graph::empty(6).unwrap());
        let verdict = evaluate_coloring(&c, &v);
        assert_eq!(verdict.blue_value, 6);
        assert!(!verdict.avoids);
        assert!(!coloring_avoids(&c, &v));
    }

    #[test]
    fn evaluate_prism_blue_fails_u33() {
        let v: RamseyVariant = "u(3,3)".parse().unwrap();
        let prism = Graph::cycle(6).unwrap().complement();
        let c = EdgeColoring::from_blue(prism);
        let verdict = evaluate_coloring(&c, &v);
        assert_eq!(verdict.blue_value, 3);
        assert!(!verdict.avoids);
    }
}
