//! Intersection theory on rational scrolls `F(a_1,...,a_r) = P(⊕ O(a_i))`
//! over `P^1`, and on the Calabi-Yau threefolds built from them.
//!
//! The Chow ring is `Z[ξ, f] / (f^2, ξ^r - c ξ^{r-1} f)` with `c = Σ a_i`,
//! `ξ` the tautological class and `f` a fibre, normalized by
//! `∫ ξ^{r-1} f = 1`. Consequently `∫ ξ^r = c`, the degree of the image of
//! the scroll under `|ξ|`.

use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ScrollSpec {
    twists: Vec<u32>,
}

impl ScrollSpec {
    pub fn new(twists: impl Into<Vec<u32>>) -> Result<Self> {
        let twists = twists.into();
        if twists.len() < 2 {
            return Err(Error::Precondition(format!(
                "a scroll needs rank at least 2, got {}",
                twists.len()
            )));
        }
        Ok(Self { twists })
    }

    pub fn twists(&self) -> &[u32] {
        &self.twists
    }

    /// Rank of the bundle, which is also the dimension of the scroll.
    pub fn rank(&self) -> u32 {
        self.twists.len() as u32
    }

    pub fn c1e(&self) -> i64 {
        self.twists.iter().map(|&a| i64::from(a)).sum()
    }

    pub fn one(&self) -> ChowClass {
        ChowClass::monomial(self, 1, 0, 0)
    }

    pub fn xi(&self) -> ChowClass {
        ChowClass::monomial(self, 1, 1, 0)
    }

    pub fn fiber(&self) -> ChowClass {
        ChowClass::monomial(self, 1, 0, 1)
    }

    /// `a ξ + b f`.
    pub fn divisor(&self, a: i64, b: i64) -> ChowClass {
        self.xi().scale(a) + self.fiber().scale(b)
    }
}

/// A class in normal form on the basis `ξ^k, ξ^k f` for `0 <= k < r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChowClass {
    rank: u32,
    c1e: i64,
    /// `coeffs[k] = [coefficient of ξ^k, coefficient of ξ^k f]`.
    coeffs: Vec<[i64; 2]>,
}

impl ChowClass {
    fn zero_like(rank: u32, c1e: i64) -> Self {
        Self {
            rank,
            c1e,
            coeffs: vec![[0, 0]; rank as usize],
        }
    }

    pub fn zero(s: &ScrollSpec) -> Self {
        Self::zero_like(s.rank(), s.c1e())
    }

    /// `coeff · ξ^i f^j`, reduced.
    pub fn monomial(s: &ScrollSpec, coeff: i64, i: u32, j: u32) -> Self {
        let mut out = Self::zero(s);
        out.push_monomial(coeff, i, j);
        out
    }

    fn push_monomial(&mut self, coeff: i64, i: u32, j: u32) {
        let r = self.rank;
        match j {
            0 if i < r => self.coeffs[i as usize][0] += coeff,
            // ξ^r = c ξ^{r-1} f, and anything beyond vanishes
            0 if i == r => self.coeffs[(r - 1) as usize][1] += coeff * self.c1e,
            1 if i < r => self.coeffs[i as usize][1] += coeff,
            _ => {}
        }
    }

    pub fn coefficient(&self, xi_power: u32, f_power: u32) -> i64 {
        match f_power {
            0 | 1 if xi_power < self.rank => self.coeffs[xi_power as usize][f_power as usize],
            _ => 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c == &[0, 0])
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = self.clone();
        out.coeffs.iter_mut().flatten().for_each(|c| *c *= k);
        out
    }

    /// Component of codimension `deg`.
    pub fn part(&self, deg: u32) -> Self {
        let mut out = Self::zero_like(self.rank, self.c1e);
        if deg < self.rank {
            out.coeffs[deg as usize][0] = self.coeffs[deg as usize][0];
        }
        if deg >= 1 && deg - 1 < self.rank {
            out.coeffs[(deg - 1) as usize][1] = self.coeffs[(deg - 1) as usize][1];
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::zero_like(self.rank, self.c1e);
        acc.coeffs[0][0] = 1;
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `1 / (1 + self)` for a class without constant term, truncated at the
    /// top degree.
    pub fn inverse_one_plus(&self) -> Self {
        let neg = -self;
        let mut acc = Self::zero_like(self.rank, self.c1e);
        for k in 0..=self.rank {
            acc = &acc + &neg.pow(k);
        }
        acc
    }

    fn check_ring(&self, other: &Self) {
        assert_eq!(
            (self.rank, self.c1e),
            (other.rank, other.c1e),
            "classes live on different scrolls"
        );
    }
}

impl Add for &ChowClass {
    type Output = ChowClass;
    fn add(self, o: &ChowClass) -> ChowClass {
        self.check_ring(o);
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&o.coeffs) {
            a[0] += b[0];
            a[1] += b[1];
        }
        out
    }
}

impl Add for ChowClass {
    type Output = ChowClass;
    fn add(self, o: ChowClass) -> ChowClass {
        &self + &o
    }
}

impl Neg for &ChowClass {
    type Output = ChowClass;
    fn neg(self) -> ChowClass {
        self.scale(-1)
    }
}

impl Sub for &ChowClass {
    type Output = ChowClass;
    fn sub(self, o: &ChowClass) -> ChowClass {
        self + &(-o)
    }
}

impl Mul for &ChowClass {
    type Output = ChowClass;
    fn mul(self, o: &ChowClass) -> ChowClass {
        self.check_ring(o);
        let mut out = ChowClass::zero_like(self.rank, self.c1e);
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                for (fa, &ca) in a.iter().enumerate() {
                    for (fb, &cb) in b.iter().enumerate() {
                        if ca != 0 && cb != 0 {
                            out.push_monomial(ca * cb, (i + j) as u32, (fa + fb) as u32);
                        }
                    }
                }
            }
        }
        out
    }
}

impl Mul for ChowClass {
    type Output = ChowClass;
    fn mul(self, o: ChowClass) -> ChowClass {
        &self * &o
    }
}

/// Normal form of `Σ coeff · ξ^i f^j`.
pub fn chow_reduce(terms: &[(i64, u32, u32)], s: &ScrollSpec) -> ChowClass {
    let mut out = ChowClass::zero(s);
    for &(c, i, j) in terms {
        out.push_monomial(c, i, j);
    }
    out
}

/// Degree of a top-codimension class: its `ξ^{r-1} f` coefficient.
pub fn integrate(c: &ChowClass) -> Result<i64> {
    let top = c.rank;
    if c != &c.part(top) {
        return Err(Error::DegreeMismatch { expected: top });
    }
    Ok(c.coefficient(top - 1, 1))
}

/// Total Chern class `(1 + 2f) Π (1 + ξ - a_i f)` of the scroll.
///
/// The second factor comes from the relative Euler sequence
/// `0 -> O -> π*E^∨ ⊗ O(1) -> T_rel -> 0`, whose top Chern class is the
/// defining relation of the ring.
pub fn tangent_chern(s: &ScrollSpec) -> ChowClass {
    let mut c = s.one() + s.fiber().scale(2);
    for &a in s.twists() {
        c = &c * &(s.one() + s.divisor(1, -i64::from(a)));
    }
    c
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModelKind {
    CompleteIntersectionInScroll,
    DoubleCoverOfScroll,
}

/// A threefold `Y` modelled on a scroll: either a divisor `Y` in a rank-4
/// scroll, or a double cover of a rank-3 scroll branched along `2L`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreefoldModel {
    pub kind: ModelKind,
    pub ambient: ScrollSpec,
    /// Class of `Y` for a divisor, half-branch class `L` for a double cover.
    pub divisor_class: ChowClass,
}

impl ThreefoldModel {
    pub fn complete_intersection(ambient: ScrollSpec, class: ChowClass) -> Result<Self> {
        if ambient.rank() != 4 {
            return Err(Error::Precondition(
                "a divisor model needs a rank-4 scroll".into(),
            ));
        }
        Ok(Self {
            kind: ModelKind::CompleteIntersectionInScroll,
            ambient,
            divisor_class: class,
        })
    }

    pub fn double_cover(ambient: ScrollSpec, half_branch: ChowClass) -> Result<Self> {
        if ambient.rank() != 3 {
            return Err(Error::Precondition(
                "a double-cover model needs a rank-3 scroll".into(),
            ));
        }
        Ok(Self {
            kind: ModelKind::DoubleCoverOfScroll,
            ambient,
            divisor_class: half_branch,
        })
    }

    /// Resolution of the general `X_8`: anticanonical `Y = 4ξ` in `F(2,0,0,0)`.
    pub fn x8() -> Self {
        let f = ScrollSpec::new(vec![2, 0, 0, 0]).expect("rank 4");
        let y = f.divisor(4, 0);
        Self::complete_intersection(f, y).expect("rank 4")
    }

    /// Resolution of the general `X_12`: double cover of `F(2,0,0)` branched
    /// along a sextic section, `L = 3ξ`.
    pub fn x12() -> Self {
        let w = ScrollSpec::new(vec![2, 0, 0]).expect("rank 3");
        let l = w.divisor(3, 0);
        Self::double_cover(w, l).expect("rank 3")
    }

    /// Integral over `Y` of the restriction/pullback of an ambient class.
    pub fn integrate_on_y(&self, c: &ChowClass) -> Result<i64> {
        match self.kind {
            ModelKind::CompleteIntersectionInScroll => integrate(&(c * &self.divisor_class)),
            ModelKind::DoubleCoverOfScroll => Ok(2 * integrate(c)?),
        }
    }
}

/// `(c_2(Y)·ξ, c_2(Y)·f, ∫ c_3(Y))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChernNumbers {
    pub c2_xi: i64,
    pub c2_f: i64,
    pub euler: i64,
}

fn chern_from(model: &ThreefoldModel, total: &ChowClass) -> Result<ChernNumbers> {
    let s = &model.ambient;
    let c2 = total.part(2);
    let c3 = total.part(3);
    Ok(ChernNumbers {
        c2_xi: model.integrate_on_y(&(&c2 * &s.xi()))?,
        c2_f: model.integrate_on_y(&(&c2 * &s.fiber()))?,
        euler: model.integrate_on_y(&c3)?,
    })
}

/// Adjunction: `c(T_Y) = c(T_F) / (1 + [Y])` restricted to `Y`.
pub fn ci_chern(model: &ThreefoldModel) -> Result<ChernNumbers> {
    if model.kind != ModelKind::CompleteIntersectionInScroll {
        return Err(Error::KindMismatch {
            expected: "complete-intersection",
        });
    }
    let total = &tangent_chern(&model.ambient) * &model.divisor_class.inverse_one_plus();
    chern_from(model, &total)
}

/// Branched double cover `π: Y -> W` along `B = 2L`.
///
/// `Y` sits in the total space of `L` as `t^2 = s`, so
/// `0 -> T_Y -> π*(T_W ⊕ L) -> π*O(2L) -> 0` and
/// `c(T_Y) = π*( c(T_W) (1 + L) / (1 + 2L) )`.
pub fn double_cover_chern(model: &ThreefoldModel) -> Result<ChernNumbers> {
    if model.kind != ModelKind::DoubleCoverOfScroll {
        return Err(Error::KindMismatch {
            expected: "double-cover",
        });
    }
    let s = &model.ambient;
    let l = &model.divisor_class;
    let cw = tangent_chern(s);
    if cw.part(1) != *l {
        return Err(Error::CyViolation);
    }
    let total = &(&cw * &(&s.one() + l)) * &l.scale(2).inverse_one_plus();
    chern_from(model, &total)
}

pub fn chern_numbers(model: &ThreefoldModel) -> Result<ChernNumbers> {
    match model.kind {
        ModelKind::CompleteIntersectionInScroll => ci_chern(model),
        ModelKind::DoubleCoverOfScroll => double_cover_chern(model),
    }
}

/// `(D_1^3, D_1^2 D_2, D_1 D_2^2, D_2^3)` for `D_1 = ξ|_Y`, `D_2 = f|_Y`.
pub fn cubic_form(model: &ThreefoldModel) -> Result<[i64; 4]> {
    let s = &model.ambient;
    let mut out = [0; 4];
    for (k, slot) in out.iter_mut().enumerate() {
        let c = &s.xi().pow(3 - k as u32) * &s.fiber().pow(k as u32);
        *slot = model.integrate_on_y(&c)?;
    }
    Ok(out)
}

pub fn euler_number(model: &ThreefoldModel) -> Result<i64> {
    Ok(chern_numbers(model)?.euler)
}

/// The cubic intersection form and the `c_2` linear form on a rank-two
/// Picard lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicardForms {
    pub cubic: [i64; 4],
    pub c2: [i64; 2],
}

impl PicardForms {
    pub fn of_model(model: &ThreefoldModel) -> Result<Self> {
        let ch = chern_numbers(model)?;
        Ok(Self {
            cubic: cubic_form(model)?,
            c2: [ch.c2_xi, ch.c2_f],
        })
    }

    /// `(x D_1 + y D_2)^3`.
    pub fn cubic_at(&self, x: i64, y: i64) -> i64 {
        let [a, b, c, d] = self.cubic;
        a * x * x * x + 3 * b * x * x * y + 3 * c * x * y * y + d * y * y * y
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NefVerdict {
    /// True iff no nonzero class has `F^3 = c_2·F = 0`.
    pub holds: bool,
    /// Primitive generator of the kernel of `D -> c_2·D`.
    pub kernel: [i64; 2],
    pub cubic_at_kernel: i64,
}

/// On a rank-two lattice the classes with `c_2·F = 0` form a line, so the
/// criterion reduces to evaluating the cubic form on its generator.
pub fn nef_check_forms(forms: &PicardForms) -> Result<NefVerdict> {
    let [a, b] = forms.c2;
    if a == 0 && b == 0 {
        return Err(Error::DegenerateC2);
    }
    let g = a.gcd(&b);
    let mut v = [b / g, -a / g];
    if v[0] < 0 || (v[0] == 0 && v[1] < 0) {
        v = [-v[0], -v[1]];
    }
    let value = forms.cubic_at(v[0], v[1]);
    Ok(NefVerdict {
        holds: value != 0,
        kernel: v,
        cubic_at_kernel: value,
    })
}

pub fn nef_invariance_check(model: &ThreefoldModel) -> Result<NefVerdict> {
    nef_check_forms(&PicardForms::of_model(model)?)
}
