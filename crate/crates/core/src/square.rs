//! Latin squares as quasigroup multiplication tables over symbols `{1..n}`,
//! with the text file format, divisions, parastrophes and group predicates.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// An order-`n` latin square; `get(x, y)` is the product `x * y` (1-based).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatinSquare {
    n: usize,
    cells: Vec<usize>, // row-major, values 1..=n
}

/// Outcome of the group test: either a group with its identity element, or a
/// witness for the failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupCheck {
    Group { identity: usize },
    NoIdentity,
    NotAssociative { x: usize, y: usize, z: usize },
}

impl GroupCheck {
    pub fn is_group(&self) -> bool {
        matches!(self, GroupCheck::Group { .. })
    }
}

impl LatinSquare {
    /// Validates rows as a latin square over `{1..n}`.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let n = rows.len();
        let mut cells = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Malformed {
                    line: i + 1,
                    msg: format!("row {} has {} entries, expected {}", i + 1, row.len(), n),
                });
            }
            cells.extend_from_slice(row);
        }
        let sq = LatinSquare { n, cells };
        sq.validate()?;
        Ok(sq)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        for x in 1..=n {
            let mut seen = vec![false; n];
            for y in 1..=n {
                let v = self.get(x, y);
                if v < 1 || v > n {
                    return Err(Error::SymbolOutOfRange { sym: v, n });
                }
                if seen[v - 1] {
                    return Err(Error::DuplicateInRow { row: x, value: v });
                }
                seen[v - 1] = true;
            }
        }
        for y in 1..=n {
            let mut seen = vec![false; n];
            for x in 1..=n {
                let v = self.get(x, y);
                if seen[v - 1] {
                    return Err(Error::DuplicateInCol { col: y, value: v });
                }
                seen[v - 1] = true;
            }
        }
        Ok(())
    }

    /// Parses the square file format: a header line with `n`, then `n` lines
    /// of `n` whitespace-separated integers. Lines starting with `#` and
    /// blank lines are ignored; CRLF is accepted.
    pub fn parse(text: &str) -> Result<Self> {
        let mut data = text.lines().enumerate().filter_map(|(i, l)| {
            let t = l.trim();
            if t.is_empty() || t.starts_with('#') {
                None
            } else {
                Some((i + 1, t))
            }
        });
        let (hline, header) = data.next().ok_or(Error::Malformed {
            line: 1,
            msg: "empty input".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Malformed {
            line: hline,
            msg: format!("expected the order, got {header:?}"),
        })?;
        if n == 0 {
            return Err(Error::Malformed {
                line: hline,
                msg: "order must be positive".into(),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            let (lno, line) = data.next().ok_or(Error::Malformed {
                line: hline,
                msg: format!("expected {n} data rows"),
            })?;
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Malformed {
                        line: lno,
                        msg: format!("expected an integer, got {tok:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            if row.len() != n {
                return Err(Error::Malformed {
                    line: lno,
                    msg: format!("expected {n} entries, got {}", row.len()),
                });
            }
            rows.push(row);
        }
        if let Some((lno, _)) = data.next() {
            return Err(Error::Malformed {
                line: lno,
                msg: "trailing content after the table".into(),
            });
        }
        Self::from_rows(rows)
    }

    /// Canonical text form: header line, then single-space separated rows,
    /// LF line endings. Round-trips with [`LatinSquare::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for x in 1..=self.n {
            let row: Vec<String> = (1..=self.n).map(|y| self.get(x, y).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// The product `x * y` (both 1-based).
    pub fn get(&self, x: usize, y: usize) -> usize {
        self.cells[(x - 1) * self.n + (y - 1)]
    }

    pub(crate) fn set(&mut self, x: usize, y: usize, v: usize) {
        self.cells[(x - 1) * self.n + (y - 1)] = v;
    }

    fn check_sym(&self, s: usize) -> Result<()> {
        if s < 1 || s > self.n {
            Err(Error::SymbolOutOfRange { sym: s, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Row `i` read as a permutation: `L_i(x) = i * x`.
    pub fn left_translation(&self, i: usize) -> Result<Permutation> {
        self.check_sym(i)?;
        let images = (1..=self.n).map(|x| self.get(i, x)).collect();
        Permutation::from_images(images)
    }

    /// The unique `y` with `x * y = a` (left division `x \ a`).
    pub fn left_divide(&self, x: usize, a: usize) -> Result<usize> {
        self.check_sym(x)?;
        self.check_sym(a)?;
        Ok((1..=self.n).find(|&y| self.get(x, y) == a).unwrap())
    }

    /// The unique `z` with `z * y = a` (right division `a / y`).
    pub fn right_divide(&self, a: usize, y: usize) -> Result<usize> {
        self.check_sym(a)?;
        self.check_sym(y)?;
        Ok((1..=self.n).find(|&z| self.get(z, y) == a).unwrap())
    }

    /// The `k`-th parastrophe (conjugate), `k` in `0..=5`; `k = 0` is the
    /// original operation and `k = 5` the transpose.
    pub fn parastrophe(&self, k: usize) -> Result<LatinSquare> {
        if k > 5 {
            return Err(Error::SymbolOutOfRange { sym: k, n: 5 });
        }
        let n = self.n;
        let mut out = LatinSquare {
            n,
            cells: vec![0; n * n],
        };
        for x in 1..=n {
            for y in 1..=n {
                let z = self.get(x, y);
                // each triple x*y = z induces one entry of the conjugate table
                match k {
                    0 => out.set(x, y, z),
                    1 => out.set(x, z, y), // x o1 z = y  since x*z' = y' at (z',y') = (y,z)... x*y=z means x o1 z = y
                    2 => out.set(z, y, x), // z o2 y = x
                    3 => out.set(y, z, x), // y o3 z = x
                    4 => out.set(z, x, y), // z o4 x = y
                    5 => out.set(y, x, z), // transpose
                    _ => unreachable!(),
                }
            }
        }
        debug_assert!(out.validate().is_ok());
        Ok(out)
    }

    /// Number of cells where the two squares differ. Defined only for equal
    /// orders.
    pub fn distance(&self, other: &LatinSquare) -> Result<usize> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        Ok(self
            .cells
            .iter()
            .zip(&other.cells)
            .filter(|(a, b)| a != b)
            .count())
    }

    pub fn is_commutative(&self) -> bool {
        (1..=self.n).all(|x| (x + 1..=self.n).all(|y| self.get(x, y) == self.get(y, x)))
    }

    /// Tests for a two-sided identity and associativity.
    pub fn group_check(&self) -> GroupCheck {
        let n = self.n;
        let identity =
            (1..=n).find(|&e| (1..=n).all(|x| self.get(e, x) == x && self.get(x, e) == x));
        let Some(e) = identity else {
            return GroupCheck::NoIdentity;
        };
        for x in 1..=n {
            for y in 1..=n {
                for z in 1..=n {
                    if self.get(self.get(x, y), z) != self.get(x, self.get(y, z)) {
                        return GroupCheck::NotAssociative { x, y, z };
                    }
                }
            }
        }
        GroupCheck::Group { identity: e }
    }

    pub fn is_group(&self) -> bool {
        self.group_check().is_group()
    }

    /// All elements of order two: `x != e` with `x * x = e`. Errors unless
    /// the table is a group.
    pub fn involutions(&self) -> Result<Vec<usize>> {
        let GroupCheck::Group { identity: e } = self.group_check() else {
            return Err(Error::NotAGroup("involutions need a group table".into()));
        };
        Ok((1..=self.n)
            .filter(|&x| x != e && self.get(x, x) == e)
            .collect())
    }

    /// Cayley table of the cyclic group of order `n`, identity 1,
    /// `x * y = ((x-1) + (y-1) mod n) + 1`.
    pub fn cyclic_group(n: usize) -> LatinSquare {
        let cells = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x + y) % n + 1))
            .collect();
        LatinSquare { n, cells }
    }

    /// Cayley table of the Boolean group of order `2^k`, identity 1,
    /// `x * y = ((x-1) XOR (y-1)) + 1`.
    pub fn boolean_group(k: u32) -> LatinSquare {
        let n = 1usize << k;
        let cells = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x ^ y) + 1))
            .collect();
        LatinSquare { n, cells }
    }

    /// Klein 4-group, the order-4 Boolean group.
    pub fn klein() -> LatinSquare {
        Self::boolean_group(2)
    }
}

impl fmt::Display for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for LatinSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatinSquare(order {})\n{}", self.n, self.to_text())
    }
}
