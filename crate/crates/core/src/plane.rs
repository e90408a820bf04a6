//! Exact smoothness test for curves in `P[1,1,c]`.
//!
//! A quasi-homogeneous `F(x, y, z)` defines a quasi-smooth curve iff its three
//! partial derivatives have no common zero away from the origin (the Euler
//! relation then forces `F = 0` as well). The cone is covered by the chart
//! `x = 1`, the line `x = 0, y = 1` and the point `(0, 0, 1)`. In the chart we
//! eliminate `z` with resultants to get a squarefree `h(y)` containing every
//! candidate `y`, then run Euclid on the partials over `Q[y]/(h)`, splitting
//! `h` whenever a leading coefficient is a zero divisor.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::det;
use crate::poly::{rat, Rational, SparsePoly};
use crate::upoly::UPoly;

/// Polynomial in `z` whose coefficients are polynomials in `y`.
type BiPoly = Vec<UPoly>;

fn trim(mut p: BiPoly) -> BiPoly {
    while p.last().is_some_and(UPoly::is_zero) {
        p.pop();
    }
    p
}

fn chart_x1(g: &SparsePoly) -> BiPoly {
    let zdeg = g.degree_in(2) as usize;
    let mut out: Vec<Vec<Rational>> = vec![Vec::new(); zdeg + 1];
    for (e, c) in g.terms() {
        let slot = &mut out[e[2] as usize];
        let b = e[1] as usize;
        if slot.len() <= b {
            slot.resize(b + 1, Rational::zero());
        }
        slot[b] += c;
    }
    trim(out.into_iter().map(UPoly::new).collect())
}

fn line_x0_y1(g: &SparsePoly) -> UPoly {
    let mut c = vec![Rational::zero(); g.degree_in(2) as usize + 1];
    for (e, a) in g.terms().filter(|(e, _)| e[0] == 0) {
        c[e[2] as usize] += a;
    }
    UPoly::new(c)
}

fn at_z_point(g: &SparsePoly) -> Rational {
    g.terms()
        .filter(|(e, _)| e[0] == 0 && e[1] == 0)
        .map(|(_, c)| c.clone())
        .sum()
}

/// `Res_z(a, b)` as a polynomial in `y`, by evaluation and interpolation.
fn resultant_z(a: &BiPoly, b: &BiPoly) -> UPoly {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let ydeg = a
        .iter()
        .chain(b.iter())
        .filter_map(UPoly::degree)
        .max()
        .unwrap_or(0);
    let npts = (m + n) * ydeg + 1;
    let xs: Vec<Rational> = (0..npts as i64).map(rat).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|y0| {
            let av: Vec<Rational> = a.iter().map(|c| c.eval(y0)).collect();
            let bv: Vec<Rational> = b.iter().map(|c| c.eval(y0)).collect();
            det(sylvester(&av, &bv))
        })
        .collect();
    UPoly::interpolate(&xs, &ys)
}

/// Sylvester matrix of two coefficient lists (constant term first).
fn sylvester(a: &[Rational], b: &[Rational]) -> Vec<Vec<Rational>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![Rational::zero(); size];
        for (k, c) in a.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![Rational::zero(); size];
        for (k, c) in b.iter().rev().enumerate() {
            row[i + k] = c.clone();
        }
        rows.push(row);
    }
    rows
}

fn reduce(p: &[UPoly], h: &UPoly) -> BiPoly {
    trim(p.iter().map(|c| c.rem(h)).collect())
}

/// Splits `h` until the leading coefficient of `p` is either invertible or
/// `p` vanishes, on each factor.
fn split_on_lead(h: &UPoly, p: &[UPoly]) -> Vec<(UPoly, BiPoly)> {
    let p = reduce(p, h);
    let Some(lc) = p.last() else {
        return vec![(h.clone(), p)];
    };
    let g = lc.gcd(h);
    if g.degree() == Some(0) {
        return vec![(h.clone(), p)];
    }
    let rest = h.div_rem(&g).0;
    let mut out = split_on_lead(&g, &p);
    out.extend(split_on_lead(&rest, &p));
    out
}

/// Remainder of `a` by `b` over `Q[y]/(h)`; `lc(b)` must be invertible.
fn rem_mod(mut a: BiPoly, b: &[UPoly], h: &UPoly) -> BiPoly {
    let inv = b
        .last()
        .unwrap()
        .inverse_mod(h)
        .expect("leading coefficient is invertible");
    let db = b.len() - 1;
    while a.len() > db && !a.is_empty() {
        let shift = a.len() - 1 - db;
        let c = a.last().unwrap().mul(&inv).rem(h);
        for (i, bc) in b.iter().enumerate() {
            a[shift + i] = a[shift + i].sub(&c.mul(bc)).rem(h);
        }
        a = trim(a);
    }
    a
}

/// Gcd of `a` and `b` over every factor of `h`, as `(factor, gcd)` pairs.
fn gcd_split(h: &UPoly, a: &[UPoly], b: &[UPoly]) -> Vec<(UPoly, BiPoly)> {
    let mut out = Vec::new();
    for (h1, a1) in split_on_lead(h, a) {
        for (h2, b1) in split_on_lead(&h1, b) {
            let a1 = reduce(&a1, &h2);
            if b1.is_empty() {
                out.push((h2, a1));
            } else if a1.is_empty() {
                out.push((h2, b1));
            } else {
                let (big, small) = if a1.len() >= b1.len() {
                    (a1, b1)
                } else {
                    (b1, a1)
                };
                let r = rem_mod(big, &small, &h2);
                out.extend(gcd_split(&h2, &small, &r));
            }
        }
    }
    out
}

/// True iff the partials `gs` share a zero in the chart `x = 1`.
fn common_zero_in_chart(gs: &[BiPoly]) -> bool {
    // eliminate against a partial that involves z
    let Some(pivot) = gs.iter().position(|g| g.len() > 1) else {
        // all partials are polynomials in y alone
        let g = gs.iter().fold(UPoly::zero(), |acc, p| {
            acc.gcd(p.first().unwrap_or(&UPoly::zero()))
        });
        return g.is_zero() || g.degree().unwrap_or(0) > 0;
    };
    let mut h: Option<UPoly> = None;
    for (i, g) in gs.iter().enumerate() {
        if i == pivot {
            continue;
        }
        let r = resultant_z(&gs[pivot], g);
        if r.is_zero() {
            // a shared curve component meets the remaining partial somewhere
            return true;
        }
        h = Some(match h {
            None => r,
            Some(acc) if acc.coprime_by_reduction(&r) => return false,
            Some(acc) => acc.gcd(&r),
        });
    }
    let h = h.expect("at least two partials").squarefree();
    if h.degree().unwrap_or(0) == 0 {
        return false;
    }
    let mut branches = vec![(h, gs[pivot].clone())];
    for (i, g) in gs.iter().enumerate() {
        if i == pivot {
            continue;
        }
        branches = branches
            .into_iter()
            .flat_map(|(hb, acc)| gcd_split(&hb, &acc, g))
            .collect();
    }
    branches
        .iter()
        .any(|(hb, g)| hb.degree().unwrap_or(0) > 0 && g.len() != 1)
}

/// Decides whether `f` on weights `(1, 1, c)` defines a quasi-smooth curve.
pub fn is_quasi_smooth_plane_curve(f: &SparsePoly) -> Result<bool> {
    let w = f.weights().as_slice();
    if w.len() != 3 || w[0] != 1 || w[1] != 1 {
        return Err(Error::InapplicableModel(format!(
            "expected weights (1,1,c), got {w:?}"
        )));
    }
    if !f.is_homogeneous() || f.is_zero() {
        return Err(Error::Precondition(
            "curve equation must be a nonzero form".into(),
        ));
    }
    let partials: Vec<SparsePoly> = (0..3)
        .map(|i| f.partial_derivative(i))
        .collect::<Result<_>>()?;
    let nonzero: Vec<&SparsePoly> = partials.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.iter().any(|p| p.homogeneous_degree() == Some(0)) {
        return Ok(true);
    }
    if nonzero.len() < 3 {
        // two positive-degree forms in three variables always meet
        return Ok(false);
    }
    if nonzero.iter().all(|p| at_z_point(p).is_zero()) {
        return Ok(false);
    }
    let line = nonzero
        .iter()
        .fold(UPoly::zero(), |acc, p| acc.gcd(&line_x0_y1(p)));
    if line.is_zero() || line.degree().unwrap_or(0) > 0 {
        return Ok(false);
    }
    let chart: Vec<BiPoly> = nonzero.iter().map(|p| chart_x1(p)).collect();
    Ok(!common_zero_in_chart(&chart))
}
