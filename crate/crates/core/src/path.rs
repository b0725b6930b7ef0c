//! Path families and explicit lattice paths.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::stepset::StepSet;

/// The three families of non-negative paths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PathKind {
    /// Ends on altitude 0.
    Excursion,
    /// Excursion with extra horizontal steps that may only be taken on
    /// altitude 0. Requires `0 ∉ S`.
    Dispersed,
    /// Arbitrary final altitude.
    Meander,
}

impl PathKind {
    pub const ALL: [PathKind; 3] = [PathKind::Excursion, PathKind::Dispersed, PathKind::Meander];

    pub fn check(self, s: &StepSet) -> Result<()> {
        if self == PathKind::Dispersed && s.has_zero_step() {
            Err(Error::DispersedNeedsNoZeroStep)
        } else {
            Ok(())
        }
    }

    /// Whether the path has to come back to altitude 0.
    pub fn returns_to_zero(self) -> bool {
        self != PathKind::Meander
    }

    pub fn applies_to(self, s: &StepSet) -> bool {
        self.check(s).is_ok()
    }
}

impl fmt::Display for PathKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathKind::Excursion => "excursion",
            PathKind::Dispersed => "dispersed",
            PathKind::Meander => "meander",
        })
    }
}

impl FromStr for PathKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "excursion" => Ok(PathKind::Excursion),
            "dispersed" => Ok(PathKind::Dispersed),
            "meander" => Ok(PathKind::Meander),
            _ => Err(Error::Syntax {
                what: "path kind",
                detail: s.to_string(),
            }),
        }
    }
}

/// A single step of a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Down,
    /// A step of height `b >= 0` from the step set; `Up(0)` is the horizontal
    /// step of `S` and counts towards ascents.
    Up(u32),
    /// Horizontal step of a dispersed excursion, only allowed on altitude 0.
    /// It never counts towards an ascent.
    Flat,
}

impl Step {
    pub fn height(self) -> i64 {
        match self {
            Step::Down => -1,
            Step::Up(b) => i64::from(b),
            Step::Flat => 0,
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::Down => f.write_str("-1"),
            Step::Up(b) => write!(f, "{b}"),
            Step::Flat => f.write_str("H"),
        }
    }
}

/// Number of `r`-ascents in a step sequence, by direct scan: maximal runs of
/// exactly `r` consecutive up steps, including a run that ends the path.
pub fn count_ascents(steps: &[Step], r: usize) -> usize {
    let mut run = 0usize;
    let mut found = 0usize;
    for step in steps {
        match step {
            Step::Up(_) => run += 1,
            Step::Down | Step::Flat => {
                if run == r {
                    found += 1;
                }
                run = 0;
            }
        }
    }
    if run == r {
        found += 1;
    }
    found
}

/// An explicit path of some kind over a step set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub kind: PathKind,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn ascents(&self, r: usize) -> usize {
        count_ascents(&self.steps, r)
    }

    /// Checks membership in the family `kind` over `s`.
    pub fn validate(&self, s: &StepSet) -> Result<()> {
        self.kind.check(s)?;
        let mut alt: i64 = 0;
        for step in &self.steps {
            match *step {
                Step::Down => {}
                Step::Up(b) if s.ups().contains(&b) => {}
                Step::Flat if self.kind == PathKind::Dispersed && alt == 0 => {}
                _ => return Err(Error::InvalidPath(self.kind)),
            }
            alt += step.height();
            if alt < 0 {
                return Err(Error::InvalidPath(self.kind));
            }
        }
        if self.kind.returns_to_zero() && alt != 0 {
            return Err(Error::InvalidPath(self.kind));
        }
        Ok(())
    }

    /// Parses the comma separated text form, e.g. `"2,-1,H,-1"`.
    pub fn parse(kind: PathKind, text: &str) -> Result<LatticePath> {
        let text = text.trim();
        let mut steps = Vec::new();
        if !text.is_empty() {
            for tok in text.split(',') {
                let tok = tok.trim();
                let step = match tok {
                    "H" | "h" => Step::Flat,
                    _ => match tok.parse::<i64>() {
                        Ok(-1) => Step::Down,
                        Ok(b) if b >= 0 => Step::Up(b as u32),
                        _ => {
                            return Err(Error::Syntax {
                                what: "path",
                                detail: tok.to_string(),
                            })
                        }
                    },
                };
                steps.push(step);
            }
        }
        Ok(LatticePath { kind, steps })
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.steps.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}
