//! Rectangles (intercalates): four cells at rows `x, z` and columns `y, u`
//! holding only two values `a, b` in the pattern `xy = zu = a`, `xu = zy = b`.
//!
//! Detection walks the products `L_x L_z^-1` for `x < z`; every 2-cycle
//! `(a, b)` of such a product yields one rectangle with rows `{x, z}`. The
//! brute-force definition scan is shipped alongside as a cross-check.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::square::{GroupCheck, LatinSquare};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// A canonical rectangle: `x < z`, `y < u`, with `a = s(x,y)` and
/// `b = s(x,u)`. Equality of canonical rectangles is equality of cell sets.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Rectangle {
    pub x: usize,
    pub y: usize,
    pub z: usize,
    pub u: usize,
    pub a: usize,
    pub b: usize,
}

impl Rectangle {
    /// Canonicalizes and validates a raw quadruple against its square.
    pub fn new(s: &LatinSquare, x: usize, y: usize, z: usize, u: usize) -> Result<Rectangle> {
        for sym in [x, y, z, u] {
            if sym < 1 || sym > s.order() {
                return Err(Error::SymbolOutOfRange {
                    sym,
                    n: s.order(),
                });
            }
        }
        if x == z || y == u {
            return Err(Error::NotARectangle(format!(
                "<{x},{y},{z},{u}>: rows and columns must be distinct"
            )));
        }
        let (x, z) = if x < z { (x, z) } else { (z, x) };
        let (y, u) = if y < u { (y, u) } else { (u, y) };
        let a = s.get(x, y);
        let b = s.get(x, u);
        if s.get(z, u) != a {
            return Err(Error::NotARectangle(format!(
                "<{x},{y},{z},{u}>: {x}*{y} = {a} but {z}*{u} = {}",
                s.get(z, u)
            )));
        }
        if s.get(z, y) != b {
            return Err(Error::NotARectangle(format!(
                "<{x},{y},{z},{u}>: {x}*{u} = {b} but {z}*{y} = {}",
                s.get(z, y)
            )));
        }
        debug_assert_ne!(a, b); // a = b would force two equal cells in a row
        Ok(Rectangle { x, y, z, u, a, b })
    }

    pub fn cells(&self) -> [(usize, usize); 4] {
        [
            (self.x, self.y),
            (self.x, self.u),
            (self.z, self.y),
            (self.z, self.u),
        ]
    }
}

impl std::fmt::Display for Rectangle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "<{},{},{},{}>", self.x, self.y, self.z, self.u)
    }
}

/// All pairs `{a, b}` with `a < b` swapped by `p`; fixed points excluded.
pub fn two_cycles(p: &Permutation) -> Vec<(usize, usize)> {
    (1..=p.order())
        .filter_map(|a| {
            let b = p.apply(a);
            (b > a && p.apply(b) == a).then_some((a, b))
        })
        .collect()
}

/// The rectangle determined by a 2-cycle `(a, b)` of `L_x L_z^-1`: its
/// columns are `x \ a` and `x \ b`.
pub fn rectangle_from_cycle(
    s: &LatinSquare,
    x: usize,
    z: usize,
    a: usize,
    b: usize,
) -> Result<Rectangle> {
    if x == z {
        return Err(Error::NotARectangle("rows must be distinct".into()));
    }
    let p = s
        .left_translation(x)?
        .compose(&s.left_translation(z)?.invert())?;
    if a == b || p.apply(a) != b || p.apply(b) != a {
        return Err(Error::NotARectangle(format!(
            "({a},{b}) is not a 2-cycle of L{x}L{z}^-1 = {p}"
        )));
    }
    let y = s.left_divide(x, a)?;
    let u = s.left_divide(x, b)?;
    Rectangle::new(s, x, y, z, u)
}

fn pair_rectangles(s: &LatinSquare, translations: &[Permutation], x: usize, z: usize) -> Vec<Rectangle> {
    let p = translations[x - 1]
        .compose(&translations[z - 1].invert())
        .expect("translations share the square's order");
    two_cycles(&p)
        .into_iter()
        .map(|(a, b)| {
            let y = s.left_divide(x, a).unwrap();
            let u = s.left_divide(x, b).unwrap();
            Rectangle::new(s, x, y, z, u).expect("2-cycle of L_x L_z^-1 determines a rectangle")
        })
        .collect()
}

fn row_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|x| (x + 1..=n).map(move |z| (x, z)))
        .collect()
}

/// Sequential translation-method scan.
pub fn find_rectangles_seq(s: &LatinSquare) -> Vec<Rectangle> {
    let translations: Vec<Permutation> = (1..=s.order())
        .map(|i| s.left_translation(i).unwrap())
        .collect();
    let mut out: Vec<Rectangle> = row_pairs(s.order())
        .into_iter()
        .flat_map(|(x, z)| pair_rectangles(s, &translations, x, z))
        .collect();
    out.sort();
    out
}

/// Parallel translation-method scan; same output as the sequential one.
#[cfg(feature = "parallel")]
pub fn find_rectangles_par(s: &LatinSquare) -> Vec<Rectangle> {
    let translations: Vec<Permutation> = (1..=s.order())
        .map(|i| s.left_translation(i).unwrap())
        .collect();
    let mut out: Vec<Rectangle> = row_pairs(s.order())
        .into_par_iter()
        .flat_map_iter(|(x, z)| pair_rectangles(s, &translations, x, z))
        .collect();
    out.sort();
    out
}

/// All rectangles of the square via the left-translation method, sorted
/// lexicographically by `(x, y, z, u)`.
pub fn find_rectangles(s: &LatinSquare) -> Vec<Rectangle> {
    #[cfg(feature = "parallel")]
    {
        find_rectangles_par(s)
    }
    #[cfg(not(feature = "parallel"))]
    {
        find_rectangles_seq(s)
    }
}

/// Exhaustive definition scan over `x < z`, `y < u`; independent of the
/// translation method and shipped so any input can be cross-verified.
pub fn find_rectangles_oracle(s: &LatinSquare) -> Vec<Rectangle> {
    let n = s.order();
    let mut out = Vec::new();
    for x in 1..=n {
        for z in x + 1..=n {
            for y in 1..=n {
                for u in y + 1..=n {
                    let a = s.get(x, y);
                    let b = s.get(x, u);
                    if s.get(z, u) == a && s.get(z, y) == b {
                        out.push(Rectangle { x, y, z, u, a, b });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// Group criterion: a group has a rectangle iff it has an element of order
/// two. Errors unless the table is a group.
pub fn group_has_rectangle(s: &LatinSquare) -> Result<bool> {
    Ok(!s.involutions()?.is_empty())
}

/// In a Boolean group any `x` and `y != e` determine the rectangle
/// `<x, y, x*y, e>`.
pub fn boolean_rectangle(s: &LatinSquare, x: usize, y: usize) -> Result<Rectangle> {
    let GroupCheck::Group { identity: e } = s.group_check() else {
        return Err(Error::NotAGroup("not a group table".into()));
    };
    if (1..=s.order()).any(|v| s.get(v, v) != e) {
        return Err(Error::NotAGroup("not a Boolean group".into()));
    }
    for sym in [x, y] {
        if sym < 1 || sym > s.order() {
            return Err(Error::SymbolOutOfRange { sym, n: s.order() });
        }
    }
    if y == e {
        return Err(Error::Degenerate(format!(
            "y = {y} is the identity, <x,y,x*y,e> collapses"
        )));
    }
    let xy = s.get(x, y);
    Rectangle::new(s, x, y, xy, e)
}
