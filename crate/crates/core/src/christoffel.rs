//! Christoffel words in all four quadrants, their lattice paths, and the
//! bases of F2 they produce.
//!
//! For coprime `p, q ≥ 0` the lower Christoffel word `u(p, q)` spells the
//! highest lattice path from `(0, 0)` to `(p, q)` that stays weakly below
//! the segment between them, with `a` for a step right and `b` for a step up.
//! The other quadrants are reached through the automorphism `T: b ↦ b⁻¹`
//! and inversion:
//!
//! ```text
//! u(p, -q) = T u(p, q)    u(-p, q) = T u(p, q)⁻¹    u(-p, -q) = u(p, q)⁻¹
//! ```

use std::fmt::Write as _;

use crate::autos::AutoName;
use crate::chains;
use crate::error::{Error, Result};
use crate::lattice::LatticeVector;
use crate::words::{FreeWord, Gen, PositiveWord};

fn check_coprime(v: LatticeVector) -> Result<()> {
    if v.is_primitive() {
        Ok(())
    } else {
        Err(Error::NotCoprime(v.p, v.q))
    }
}

/// `u(p, q)` for `p, q ≥ 0` coprime.
fn first_quadrant_word(p: u64, q: u64) -> PositiveWord {
    let n = p + q;
    // Letter i (1-based) is `b` exactly when floor(i·q / n) goes up.
    PositiveWord::from_gens((1..=n).map(|i| if i * q / n == (i - 1) * q / n { Gen::A } else { Gen::B }))
}

/// The Christoffel word lifting `(p, q)`.
pub fn christoffel_word(p: i64, q: i64) -> Result<FreeWord> {
    check_coprime(LatticeVector::new(p, q))?;
    let base = first_quadrant_word(p.unsigned_abs(), q.unsigned_abs()).into_word();
    let t = AutoName::T.morphism();
    Ok(match (p >= 0, q >= 0) {
        (true, true) => base,
        (true, false) => t.apply(&base),
        (false, true) => t.apply(&base.inverse()),
        (false, false) => base.inverse(),
    })
}

pub fn christoffel_word_of(v: LatticeVector) -> Result<FreeWord> {
    christoffel_word(v.p, v.q)
}

/// The upper Christoffel word, the reverse of `u(p, q)`, for `p, q ≥ 0`.
pub fn upper_christoffel_word(p: i64, q: i64) -> Result<FreeWord> {
    if p < 0 || q < 0 {
        return Err(Error::Precondition(format!("upper Christoffel words need p, q >= 0, got ({p}, {q})")));
    }
    Ok(christoffel_word(p, q)?.reverse())
}

/// Lattice points visited when reading a word as unit steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChristoffelPath {
    points: Vec<(i64, i64)>,
}

impl ChristoffelPath {
    /// Replays `a`, `A`, `b`, `B` as right, left, up, down from the origin.
    pub fn from_word(w: &FreeWord) -> ChristoffelPath {
        let mut points = Vec::with_capacity(w.len() + 1);
        let (mut x, mut y) = (0i64, 0i64);
        points.push((x, y));
        for l in w.letters() {
            let s = if l.inverse { -1 } else { 1 };
            match l.gen {
                Gen::A => x += s,
                Gen::B => y += s,
            }
            points.push((x, y));
        }
        ChristoffelPath { points }
    }

    pub fn points(&self) -> &[(i64, i64)] {
        &self.points
    }

    pub fn end(&self) -> (i64, i64) {
        *self.points.last().expect("a path has at least its origin")
    }

    /// One point per line as `x y`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (x, y) in &self.points {
            let _ = writeln!(s, "{x} {y}");
        }
        s
    }

    /// SVG drawing of the path as a polyline together with the segment from
    /// the origin to the endpoint, in unit coordinates with `y` pointing up.
    pub fn to_svg(&self) -> String {
        let xs = self.points.iter().map(|p| p.0);
        let ys = self.points.iter().map(|p| p.1);
        let (x0, x1) = (xs.clone().min().unwrap_or(0), xs.max().unwrap_or(0));
        let (y0, y1) = (ys.clone().min().unwrap_or(0), ys.max().unwrap_or(0));
        let (w, h) = (x1 - x0 + 2, y1 - y0 + 2);
        let pts: Vec<String> = self.points.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let (ex, ey) = self.end();
        format!(
            concat!(
                "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{vx} {vy} {w} {h}\" width=\"{pw}\" height=\"{ph}\">\n",
                "  <g transform=\"scale(1,-1)\" fill=\"none\" stroke-linecap=\"round\">\n",
                "    <line x1=\"0\" y1=\"0\" x2=\"{ex}\" y2=\"{ey}\" stroke=\"gray\" stroke-width=\"0.03\"/>\n",
                "    <polyline points=\"{pts}\" stroke=\"black\" stroke-width=\"0.08\"/>\n",
                "  </g>\n",
                "</svg>\n"
            ),
            vx = x0 - 1,
            vy = -(y1 + 1),
            w = w,
            h = h,
            pw = 40 * w,
            ph = 40 * h,
            ex = ex,
            ey = ey,
            pts = pts.join(" "),
        )
    }
}

pub fn christoffel_path(p: i64, q: i64) -> Result<ChristoffelPath> {
    Ok(ChristoffelPath::from_word(&christoffel_word(p, q)?))
}

/// Checks that `path` is the lower Christoffel path to `(p, q)`, `p, q ≥ 0`:
/// unit steps that never decrease, every point weakly below the segment
/// (`qx ≥ py`), and no lattice point strictly between path and segment.
pub fn path_satisfies_conditions(p: i64, q: i64, path: &ChristoffelPath) -> bool {
    let pts = path.points();
    if pts.first() != Some(&(0, 0)) || path.end() != (p, q) {
        return false;
    }
    let monotone = pts.windows(2).all(|s| {
        let (dx, dy) = (s[1].0 - s[0].0, s[1].1 - s[0].1);
        (dx, dy) == (1, 0) || (dx, dy) == (0, 1)
    });
    let below = pts.iter().all(|&(x, y)| q * x >= p * y);
    // In each column the region between path and segment runs from the top
    // path point up to the segment; no lattice point may sit strictly inside.
    let empty_interior = (0..=p).all(|x| {
        let top = pts.iter().filter(|pt| pt.0 == x).map(|pt| pt.1).max().unwrap_or(0);
        let y = top + 1;
        !(p * y < q * x)
    });
    monotone && below && empty_interior
}

/// `u(p, q) u(r, s) = u(p + r, q + s)` for nonnegative `p, q, r, s` with
/// `ps − qr = 1`.
pub fn verify_factorization(p: i64, q: i64, r: i64, s: i64) -> Result<bool> {
    if [p, q, r, s].iter().any(|&x| x < 0) {
        return Err(Error::Precondition("factorization needs nonnegative entries".into()));
    }
    let det = p * s - q * r;
    if det != 1 {
        return Err(Error::NotUnimodular(det));
    }
    let lhs = christoffel_word(p, q)?.multiply(&christoffel_word(r, s)?);
    Ok(lhs == christoffel_word(p + r, q + s)?)
}

/// The Christoffel basis lifting a basis of Z².
pub fn christoffel_basis(u: LatticeVector, v: LatticeVector) -> Result<(FreeWord, FreeWord)> {
    let det = u.det(v);
    if det.abs() != 1 {
        return Err(Error::NotUnimodular(det));
    }
    Ok((christoffel_word_of(u)?, christoffel_word_of(v)?))
}

/// The unique Christoffel basis conjugate to the basis `(u, v)`.
pub fn christoffel_normal_form(u: &FreeWord, v: &FreeWord) -> Result<(FreeWord, FreeWord)> {
    if !chains::is_basis(u, v).is_basis {
        return Err(Error::NotBasis);
    }
    christoffel_basis(u.abelianize(), v.abelianize())
}

/// Whether `w` belongs to some basis of F2, i.e. is conjugate to a
/// Christoffel word.
pub fn is_primitive(w: &FreeWord) -> bool {
    let (core, _) = w.cyclic_reduce();
    let v = core.abelianize();
    if !v.is_primitive() {
        return false;
    }
    christoffel_word_of(v).map(|c| core.is_rotation_of(&c)).unwrap_or(false)
}
