//! Permutations of `{1..n}` with the dotted cycle notation used throughout
//! the crate, e.g. `(132.45.6.78.)`.
//!
//! Composition follows `phi psi (x) = phi(psi(x))`.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{1..n}`, stored by images (1-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its images, checking bijectivity.
    /// `images[x-1]` is the image of `x`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n {
                return Err(Error::SymbolOutOfRange { sym: v, n });
            }
            if seen[v - 1] {
                return Err(Error::BadCycles(format!("value {v} appears twice")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn order(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of `x` (1-based).
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self` after `other`: the result maps `x` to `self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(Permutation {
            images: (1..=self.order())
                .map(|x| self.apply(other.apply(x)))
                .collect(),
        })
    }

    pub fn invert(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Cycle decomposition in canonical order: each cycle starts at its
    /// minimal element, cycles are sorted by minimal element, fixed points
    /// appear as singletons.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Parses dotted cycle notation, strict mode: every element of `{1..n}`
    /// must appear exactly once (fixed points as singleton cycles).
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        Self::parse_cycles_mode(text, n, true)
    }

    /// Lenient parse: elements absent from all cycles are fixed points.
    pub fn parse_cycles_lenient(text: &str, n: usize) -> Result<Self> {
        Self::parse_cycles_mode(text, n, false)
    }

    fn parse_cycles_mode(text: &str, n: usize, strict: bool) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::BadCycles("missing enclosing parentheses".into()))?;

        let mut images: Vec<usize> = (1..=n).collect();
        let mut seen = vec![false; n];
        for token in inner.split('.') {
            let token = token.trim();
            if token.is_empty() {
                continue;
            }
            // Single digits per element for n <= 9; comma-separated otherwise.
            let elems: Vec<usize> = if token.contains(',') {
                token
                    .split(',')
                    .map(|s| {
                        s.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::BadCycles(format!("bad element {s:?}")))
                    })
                    .collect::<Result<_>>()?
            } else if n <= 9 {
                token
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| Error::BadCycles(format!("bad element {c:?}")))
                    })
                    .collect::<Result<_>>()?
            } else {
                vec![token
                    .parse::<usize>()
                    .map_err(|_| Error::BadCycles(format!("bad element {token:?}")))?]
            };
            for &e in &elems {
                if e < 1 || e > n {
                    return Err(Error::SymbolOutOfRange { sym: e, n });
                }
                if seen[e - 1] {
                    return Err(Error::BadCycles(format!("element {e} repeated")));
                }
                seen[e - 1] = true;
            }
            for i in 0..elems.len() {
                images[elems[i] - 1] = elems[(i + 1) % elems.len()];
            }
        }
        if strict {
            if let Some(missing) = seen.iter().position(|&s| !s) {
                return Err(Error::BadCycles(format!("element {} missing", missing + 1)));
            }
        }
        Permutation::from_images(images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.order();
        write!(f, "(")?;
        for cycle in self.cycles() {
            if n <= 9 {
                for e in cycle {
                    write!(f, "{e}")?;
                }
            } else {
                let parts: Vec<String> = cycle.iter().map(|e| e.to_string()).collect();
                write!(f, "{}", parts.join(","))?;
            }
            write!(f, ".")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{self}")
    }
}
