//! Rectangle transformation (intercalate switch): exchanging the two values
//! inside a rectangle yields another latin square at distance exactly 4.

use crate::error::{Error, Result};
use crate::rect::Rectangle;
use crate::square::LatinSquare;

/// Switches the values `a` and `b` at the four cells of `r`. The rectangle
/// is re-validated against `s` first; a rectangle computed from a different
/// square is rejected.
pub fn rectangle_transform(s: &LatinSquare, r: &Rectangle) -> Result<LatinSquare> {
    let checked = Rectangle::new(s, r.x, r.y, r.z, r.u)?;
    if checked != *r {
        return Err(Error::NotARectangle(format!(
            "{r} with values ({},{}) does not belong to this square",
            r.a, r.b
        )));
    }
    let mut out = s.clone();
    out.set(r.x, r.y, r.b);
    out.set(r.z, r.u, r.b);
    out.set(r.x, r.u, r.a);
    out.set(r.z, r.y, r.a);
    Ok(out)
}

/// The same four cells in the transformed square, with `a` and `b` swapped.
/// Transforming by `r` and then by `transformed_rectangle(r)` restores the
/// original square.
pub fn transformed_rectangle(r: &Rectangle) -> Rectangle {
    Rectangle {
        a: r.b,
        b: r.a,
        ..*r
    }
}
