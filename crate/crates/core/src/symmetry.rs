//! Autotopisms, isotopy search and rectangle equivalence classes.
//!
//! The search fixes a candidate image `alpha(1)` and a candidate `beta`,
//! derives `gamma = T_{alpha(1)} beta L_1^-1`, then propagates: for each row
//! `i`, `gamma L_i beta^-1` must itself be a left translation `T_j` of the
//! target square, which pins `alpha(i) = j`. A candidate survives iff every
//! row resolves and `alpha` is a bijection.

use std::collections::HashMap;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::rect::{find_rectangles, two_cycles, Rectangle};
use crate::square::LatinSquare;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Default cap on the order accepted by the exhaustive searches.
pub const DEFAULT_SEARCH_BOUND: usize = 8;

/// Three bijections `(alpha, beta, gamma)` acting as an isotopy:
/// `t(alpha(x), beta(y)) = gamma(s(x, y))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct IsotopyTriple {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
}

impl IsotopyTriple {
    pub fn identity(n: usize) -> Self {
        IsotopyTriple {
            alpha: Permutation::identity(n),
            beta: Permutation::identity(n),
            gamma: Permutation::identity(n),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_identity() && self.beta.is_identity() && self.gamma.is_identity()
    }

    pub fn order(&self) -> usize {
        self.alpha.order()
    }
}

/// Checks `dst(alpha(x), beta(y)) = gamma(src(x, y))` at all `n^2` pairs.
pub fn is_isotopy(src: &LatinSquare, dst: &LatinSquare, t: &IsotopyTriple) -> Result<bool> {
    let n = src.order();
    if dst.order() != n {
        return Err(Error::OrderMismatch(n, dst.order()));
    }
    if t.order() != n {
        return Err(Error::OrderMismatch(n, t.order()));
    }
    Ok((1..=n).all(|x| {
        (1..=n).all(|y| {
            dst.get(t.alpha.apply(x), t.beta.apply(y)) == t.gamma.apply(src.get(x, y))
        })
    }))
}

/// An autotopism is an isotopy of a square onto itself.
pub fn is_autotopism(s: &LatinSquare, t: &IsotopyTriple) -> Result<bool> {
    is_isotopy(s, s, t)
}

/// The image square `o` with `o(alpha(x), beta(y)) = gamma(s(x, y))`.
pub fn apply_isotopy(s: &LatinSquare, t: &IsotopyTriple) -> Result<LatinSquare> {
    let n = s.order();
    if t.order() != n {
        return Err(Error::OrderMismatch(n, t.order()));
    }
    let mut rows = vec![vec![0usize; n]; n];
    for x in 1..=n {
        for y in 1..=n {
            rows[t.alpha.apply(x) - 1][t.beta.apply(y) - 1] = t.gamma.apply(s.get(x, y));
        }
    }
    LatinSquare::from_rows(rows)
}

/// Image of a rectangle under `(alpha, beta)`, values mapped through
/// `gamma`, re-canonicalized. When `t` is an autotopism of the rectangle's
/// square, the image is a rectangle of the same square.
pub fn rectangle_image(r: &Rectangle, t: &IsotopyTriple) -> Rectangle {
    let (mut x, mut z) = (t.alpha.apply(r.x), t.alpha.apply(r.z));
    let (mut y, mut u) = (t.beta.apply(r.y), t.beta.apply(r.u));
    let (mut a, mut b) = (t.gamma.apply(r.a), t.gamma.apply(r.b));
    if x > z {
        std::mem::swap(&mut x, &mut z);
        std::mem::swap(&mut a, &mut b);
    }
    if y > u {
        std::mem::swap(&mut y, &mut u);
        std::mem::swap(&mut a, &mut b);
    }
    Rectangle { x, y, z, u, a, b }
}

struct SearchCtx {
    n: usize,
    src_trans: Vec<Permutation>,
    src_first_inv: Permutation,
    dst_trans: Vec<Permutation>,
    dst_lookup: HashMap<Vec<usize>, usize>,
}

impl SearchCtx {
    fn new(src: &LatinSquare, dst: &LatinSquare) -> SearchCtx {
        let n = src.order();
        let src_trans: Vec<Permutation> =
            (1..=n).map(|i| src.left_translation(i).unwrap()).collect();
        let dst_trans: Vec<Permutation> =
            (1..=n).map(|j| dst.left_translation(j).unwrap()).collect();
        let dst_lookup = dst_trans
            .iter()
            .enumerate()
            .map(|(j, p)| (p.images().to_vec(), j + 1))
            .collect();
        SearchCtx {
            n,
            src_first_inv: src_trans[0].invert(),
            src_trans,
            dst_trans,
            dst_lookup,
        }
    }

    /// Tries one `(alpha(1), beta)` candidate.
    fn propagate(&self, alpha1: usize, beta: &Permutation) -> Option<IsotopyTriple> {
        let beta_inv = beta.invert();
        let gamma = self.dst_trans[alpha1 - 1]
            .compose(beta)
            .unwrap()
            .compose(&self.src_first_inv)
            .unwrap();
        let mut alpha_images = vec![0usize; self.n];
        let mut used = vec![false; self.n];
        for i in 1..=self.n {
            let m = gamma
                .compose(&self.src_trans[i - 1])
                .unwrap()
                .compose(&beta_inv)
                .unwrap();
            let &j = self.dst_lookup.get(m.images())?;
            if used[j - 1] {
                return None;
            }
            used[j - 1] = true;
            alpha_images[i - 1] = j;
        }
        let alpha = Permutation::from_images(alpha_images).expect("images checked distinct");
        Some(IsotopyTriple {
            alpha,
            beta: beta.clone(),
            gamma,
        })
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(|imgs| Permutation::from_images(imgs).unwrap())
        .collect()
}

fn check_bounds(src: &LatinSquare, dst: &LatinSquare, bound: usize) -> Result<usize> {
    let n = src.order();
    if dst.order() != n {
        return Err(Error::OrderMismatch(n, dst.order()));
    }
    if n > bound {
        return Err(Error::ExceedsBound { n, bound });
    }
    Ok(n)
}

/// Sequential enumeration of all isotopies from `src` onto `dst`, sorted by
/// `(alpha, beta, gamma)` images.
pub fn isotopies_seq(src: &LatinSquare, dst: &LatinSquare, bound: usize) -> Result<Vec<IsotopyTriple>> {
    let n = check_bounds(src, dst, bound)?;
    let ctx = SearchCtx::new(src, dst);
    let betas = all_permutations(n);
    let mut found: Vec<IsotopyTriple> = betas
        .iter()
        .flat_map(|beta| (1..=n).filter_map(|a1| ctx.propagate(a1, beta)))
        .collect();
    found.sort();
    Ok(found)
}

/// Parallel enumeration; identical output to [`isotopies_seq`].
#[cfg(feature = "parallel")]
pub fn isotopies_par(src: &LatinSquare, dst: &LatinSquare, bound: usize) -> Result<Vec<IsotopyTriple>> {
    let n = check_bounds(src, dst, bound)?;
    let ctx = SearchCtx::new(src, dst);
    let betas = all_permutations(n);
    let mut found: Vec<IsotopyTriple> = betas
        .par_iter()
        .flat_map_iter(|beta| (1..=n).filter_map(|a1| ctx.propagate(a1, beta)))
        .collect();
    found.sort();
    Ok(found)
}

fn isotopies(src: &LatinSquare, dst: &LatinSquare, bound: usize) -> Result<Vec<IsotopyTriple>> {
    #[cfg(feature = "parallel")]
    {
        isotopies_par(src, dst, bound)
    }
    #[cfg(not(feature = "parallel"))]
    {
        isotopies_seq(src, dst, bound)
    }
}

/// All autotopisms of `s`, sorted canonically; always contains the identity
/// triple.
pub fn autotopisms(s: &LatinSquare) -> Result<Vec<IsotopyTriple>> {
    autotopisms_bounded(s, DEFAULT_SEARCH_BOUND)
}

pub fn autotopisms_bounded(s: &LatinSquare, bound: usize) -> Result<Vec<IsotopyTriple>> {
    isotopies(s, s, bound)
}

/// First isotopy witness from `src` onto `dst` in candidate order, or `None`
/// after the full search. No invariant-based shortcuts.
pub fn isotopy_witness(
    src: &LatinSquare,
    dst: &LatinSquare,
    bound: usize,
) -> Result<Option<IsotopyTriple>> {
    let n = check_bounds(src, dst, bound)?;
    let ctx = SearchCtx::new(src, dst);
    let betas = all_permutations(n);
    for alpha1 in 1..=n {
        #[cfg(feature = "parallel")]
        let hit = betas
            .par_iter()
            .find_map_first(|beta| ctx.propagate(alpha1, beta));
        #[cfg(not(feature = "parallel"))]
        let hit = betas.iter().find_map(|beta| ctx.propagate(alpha1, beta));
        if hit.is_some() {
            return Ok(hit);
        }
    }
    Ok(None)
}

/// Verdict of the isotopy decision, including whether the invariant-based
/// fast reject fired (in which case no search was run).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsotopyVerdict {
    pub witness: Option<IsotopyTriple>,
    pub fast_rejected: bool,
}

impl IsotopyVerdict {
    pub fn isotopic(&self) -> bool {
        self.witness.is_some()
    }
}

/// Sorted per-row-pair counts of 2-cycles of `L_x L_z^-1`; an isotopy
/// invariant (rectangles map to rectangles and row pairs to row pairs), with
/// the total rectangle count as its sum. Equal profiles never imply isotopy.
fn two_cycle_profile(s: &LatinSquare) -> Vec<usize> {
    let n = s.order();
    let trans: Vec<Permutation> = (1..=n).map(|i| s.left_translation(i).unwrap()).collect();
    let mut counts: Vec<usize> = (1..=n)
        .flat_map(|x| {
            let trans = &trans;
            (x + 1..=n).map(move |z| {
                let p = trans[x - 1].compose(&trans[z - 1].invert()).unwrap();
                two_cycles(&p).len()
            })
        })
        .collect();
    counts.sort();
    counts
}

/// Decides isotopy of `src` and `dst`, fast-rejecting on mismatched
/// rectangle profiles before running the full search.
pub fn are_isotopic(src: &LatinSquare, dst: &LatinSquare, bound: usize) -> Result<IsotopyVerdict> {
    check_bounds(src, dst, bound)?;
    if two_cycle_profile(src) != two_cycle_profile(dst) {
        return Ok(IsotopyVerdict {
            witness: None,
            fast_rejected: true,
        });
    }
    Ok(IsotopyVerdict {
        witness: isotopy_witness(src, dst, bound)?,
        fast_rejected: false,
    })
}

/// Orbits of the rectangle set under the autotopism group, each class
/// sorted, classes ordered by their minimal rectangle.
pub fn equivalence_classes(s: &LatinSquare, bound: usize) -> Result<Vec<Vec<Rectangle>>> {
    let rects = find_rectangles(s);
    let autos = autotopisms_bounded(s, bound)?;
    let index: HashMap<Rectangle, usize> =
        rects.iter().enumerate().map(|(i, &r)| (r, i)).collect();

    let mut parent: Vec<usize> = (0..rects.len()).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for t in &autos {
        for (i, r) in rects.iter().enumerate() {
            let img = rectangle_image(r, t);
            let j = *index
                .get(&img)
                .expect("autotopism image of a rectangle is a rectangle");
            let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
            if ri != rj {
                parent[ri] = rj;
            }
        }
    }
    let mut classes: HashMap<usize, Vec<Rectangle>> = HashMap::new();
    for (i, &rect) in rects.iter().enumerate() {
        let r = root(&mut parent, i);
        classes.entry(r).or_default().push(rect);
    }
    let mut out: Vec<Vec<Rectangle>> = classes.into_values().collect();
    for class in &mut out {
        class.sort();
    }
    out.sort();
    Ok(out)
}
