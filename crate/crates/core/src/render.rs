//! Shared term-list rendering: `3/2*z1^2 - z2`, `s(2) + s(1,1)`,
//! `xi[-1] + xi[0,1]`.

use std::fmt;

use num::{BigRational, One, Signed};

/// Writes a coefficient table as a signed sum of terms. `render_key`
/// returns `None` for the basis element that renders as a bare
/// coefficient (the constant / vacuum term). An empty table writes `0`.
pub(crate) fn write_terms<'a, K: 'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a K, &'a BigRational)>,
    render_key: impl Fn(&K) -> Option<String>,
) -> fmt::Result {
    let mut first = true;
    for (key, coeff) in terms {
        let magnitude = coeff.abs();
        if first {
            if coeff.is_negative() {
                write!(f, "-")?;
            }
            first = false;
        } else if coeff.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        match render_key(key) {
            None => write!(f, "{magnitude}")?,
            Some(body) => {
                if magnitude.is_one() {
                    write!(f, "{body}")?;
                } else {
                    write!(f, "{magnitude}*{body}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}
