//! Weight systems, graded dimensions and monomial enumeration.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default cap on the number of monomials [`enumerate_monomials`] will emit.
pub const DEFAULT_MONOMIAL_CAP: u64 = 1_000_000;

/// Positive integer weights `(w_0, ..., w_n)` of a weighted projective space.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct WeightSystem(Vec<u32>);

impl WeightSystem {
    /// Builds a weight system with at least two strictly positive weights.
    pub fn new(weights: impl Into<Vec<u32>>) -> Result<Self> {
        let weights = weights.into();
        if weights.len() < 2 {
            return Err(Error::InvalidWeights(format!(
                "need at least two weights, got {}",
                weights.len()
            )));
        }
        Self::unchecked_len(weights)
    }

    /// Like [`WeightSystem::new`] but accepts a single weight. Strata of a
    /// weighted space can have one residual coordinate.
    pub(crate) fn unchecked_len(weights: Vec<u32>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeights("empty weight list".into()));
        }
        if weights.contains(&0) {
            return Err(Error::InvalidWeights(format!(
                "weights must be positive: {weights:?}"
            )));
        }
        Ok(Self(weights))
    }

    /// Parses a comma separated list such as `1,1,2,2,2`.
    pub fn parse(s: &str) -> Result<Self> {
        let weights = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("weight {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(weights)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().map(|&w| u64::from(w)).sum()
    }

    /// Projective dimension of the space, one less than the number of weights.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn gcd(&self) -> u32 {
        gcd_of(self.0.iter().copied())
    }

    /// Gcd of the weights with index `skip` removed.
    pub fn gcd_without(&self, skip: usize) -> u32 {
        gcd_of(
            self.0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &w)| w),
        )
    }

    /// True iff every choice of `n` of the `n + 1` weights is coprime.
    pub fn is_well_formed(&self) -> bool {
        (0..self.len()).all(|i| self.gcd_without(i) == 1)
    }

    /// Degree of the monomial with exponent vector `e`.
    pub fn degree_of(&self, e: &[u32]) -> u64 {
        e.iter()
            .zip(&self.0)
            .map(|(&a, &w)| u64::from(a) * u64::from(w))
            .sum()
    }

    /// Weights restricted to the given indices, in order.
    pub fn select(&self, indices: &[usize]) -> Result<Self> {
        Self::unchecked_len(indices.iter().map(|&i| self.0[i]).collect())
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P[")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{w}")?;
        }
        write!(f, "]")
    }
}

impl TryFrom<Vec<u32>> for WeightSystem {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Self::unchecked_len(v)
    }
}

impl From<WeightSystem> for Vec<u32> {
    fn from(w: WeightSystem) -> Self {
        w.0
    }
}

pub(crate) fn gcd_of(it: impl IntoIterator<Item = u32>) -> u32 {
    it.into_iter().fold(0, |g, w| g.gcd(&w))
}

/// Returns a well-formed weight system defining an isomorphic space.
///
/// Alternates two moves until nothing changes: divide out the common gcd,
/// and for each `i` divide every other weight by the gcd `q` of the weights
/// omitting `w_i`. Each move strictly lowers the weight product.
pub fn normalize_weights(w: &WeightSystem) -> WeightSystem {
    let mut ws = w.0.clone();
    loop {
        let mut changed = false;
        let g = gcd_of(ws.iter().copied());
        if g > 1 {
            ws.iter_mut().for_each(|x| *x /= g);
            changed = true;
        }
        for i in 0..ws.len() {
            let q = gcd_of(
                ws.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &x)| x),
            );
            if q > 1 {
                for (j, x) in ws.iter_mut().enumerate() {
                    if j != i {
                        *x /= q;
                    }
                }
                changed = true;
            }
        }
        if !changed {
            return WeightSystem(ws);
        }
    }
}

/// Number of monomials of weighted degree `d`; zero for negative `d`.
///
/// Dynamic programming over the variables, one row of length `d + 1` per
/// variable (the classic coin-change count).
pub fn graded_dim(w: &WeightSystem, d: i64) -> u64 {
    if d < 0 {
        return 0;
    }
    let d = d as usize;
    let mut table = vec![0u64; d + 1];
    table[0] = 1;
    for &wi in w.as_slice() {
        let wi = wi as usize;
        for k in wi..=d {
            table[k] = table[k]
                .checked_add(table[k - wi])
                .expect("graded dimension overflows u64");
        }
    }
    table[d]
}

/// All exponent vectors of weighted degree `d`, in descending lexicographic
/// order (highest power of `x_0` first). Fails when more than `cap`
/// monomials would be produced.
pub fn enumerate_monomials_capped(w: &WeightSystem, d: i64, cap: u64) -> Result<Vec<Vec<u32>>> {
    if d < 0 {
        return Ok(Vec::new());
    }
    let count = graded_dim(w, d);
    if count > cap {
        return Err(Error::ResourceLimit { count, cap });
    }
    let mut out = Vec::with_capacity(count as usize);
    let mut current = vec![0u32; w.len()];
    fill(w.as_slice(), 0, d as u64, &mut current, &mut out);
    Ok(out)
}

/// [`enumerate_monomials_capped`] with [`DEFAULT_MONOMIAL_CAP`].
pub fn enumerate_monomials(w: &WeightSystem, d: i64) -> Result<Vec<Vec<u32>>> {
    enumerate_monomials_capped(w, d, DEFAULT_MONOMIAL_CAP)
}

fn fill(w: &[u32], i: usize, rest: u64, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let wi = u64::from(w[i]);
    if i + 1 == w.len() {
        if rest.is_multiple_of(wi) {
            current[i] = (rest / wi) as u32;
            out.push(current.clone());
        }
        return;
    }
    for a in (0..=rest / wi).rev() {
        current[i] = a as u32;
        fill(w, i + 1, rest - a * wi, current, out);
    }
    current[i] = 0;
}

/// The generic member `X_d` of degree `d` in a weighted projective space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypersurfaceFamily {
    pub weights: WeightSystem,
    pub degree: u32,
}

impl HypersurfaceFamily {
    pub fn new(weights: WeightSystem, degree: u32) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidWeights("degree must be positive".into()));
        }
        Ok(Self { weights, degree })
    }

    pub fn from_slice(weights: &[u32], degree: u32) -> Result<Self> {
        Self::new(WeightSystem::new(weights.to_vec())?, degree)
    }

    /// Trivial canonical class by adjunction: degree equals the weight sum.
    pub fn cy_flag(&self) -> bool {
        u64::from(self.degree) == self.weights.sum()
    }

    pub fn dim_sd(&self) -> u64 {
        graded_dim(&self.weights, i64::from(self.degree))
    }
}

/// Built-in families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// `X_8` in `P[1,1,2,2,2]`.
    X8,
    /// `X_12` in `P[1,1,2,2,6]`.
    X12,
    /// `X_14` in `P[1,2,2,2,7]`.
    X14,
    /// The quintic in `P^4`.
    Quintic,
}

impl Preset {
    pub const ALL: [Preset; 4] = [Preset::X8, Preset::X12, Preset::X14, Preset::Quintic];

    pub fn family(self) -> HypersurfaceFamily {
        let (w, d): (&[u32], u32) = match self {
            Preset::X8 => (&[1, 1, 2, 2, 2], 8),
            Preset::X12 => (&[1, 1, 2, 2, 6], 12),
            Preset::X14 => (&[1, 2, 2, 2, 7], 14),
            Preset::Quintic => (&[1, 1, 1, 1, 1], 5),
        };
        HypersurfaceFamily::from_slice(w, d).expect("preset weights are valid")
    }

    pub fn name(self) -> &'static str {
        match self {
            Preset::X8 => "x8",
            Preset::X12 => "x12",
            Preset::X14 => "x14",
            Preset::Quintic => "quintic",
        }
    }
}

impl std::str::FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "x8" => Ok(Preset::X8),
            "x12" => Ok(Preset::X12),
            "x14" => Ok(Preset::X14),
            "quintic" => Ok(Preset::Quintic),
            other => Err(Error::Parse(format!("unknown preset {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ws(w: &[u32]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(WeightSystem::new(vec![1]).is_err());
        assert!(WeightSystem::new(vec![1, 0, 2]).is_err());
        assert!(WeightSystem::parse("1,x").is_err());
        assert_eq!(WeightSystem::parse("1, 1,2").unwrap(), ws(&[1, 1, 2]));
    }

    #[test]
    fn well_formedness() {
        assert!(ws(&[1, 1, 2, 2, 2]).is_well_formed());
        assert!(ws(&[1, 2, 2, 2, 7]).is_well_formed());
        assert!(!ws(&[1, 2, 2, 2]).is_well_formed());
        assert!(!ws(&[2, 2, 6]).is_well_formed());
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_weights(&ws(&[2, 2, 2])), ws(&[1, 1, 1]));
        assert_eq!(normalize_weights(&ws(&[1, 2, 2, 2])), ws(&[1, 1, 1, 1]));
        assert_eq!(normalize_weights(&ws(&[2, 2, 6])), ws(&[1, 1, 3]));
        let w = ws(&[1, 1, 2, 2, 6]);
        assert_eq!(normalize_weights(&w), w);
    }

    #[test]
    fn normalize_preserves_dims_under_halving() {
        let w = ws(&[2, 2, 6]);
        let n = normalize_weights(&w);
        for d in 0..=60 {
            let expect = if d % 2 == 0 { graded_dim(&n, d / 2) } else { 0 };
            assert_eq!(graded_dim(&w, d), expect, "d = {d}");
        }
    }

    #[test]
    fn graded_dim_examples() {
        assert_eq!(graded_dim(&ws(&[1, 1, 1]), 2), 6);
        assert_eq!(graded_dim(&ws(&[1, 1, 2, 2, 2]), 2), 6);
        assert_eq!(graded_dim(&ws(&[1, 2, 2, 2, 7]), 14), 141);
        assert_eq!(graded_dim(&ws(&[1, 1, 2, 2, 2]), 8), 105);
        assert_eq!(graded_dim(&ws(&[1, 1, 2, 2, 6]), 12), 171);
        assert_eq!(graded_dim(&ws(&[1, 1, 1]), -3), 0);
        assert_eq!(graded_dim(&ws(&[3, 5]), 0), 1);
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            enumerate_monomials(&ws(&[1, 1]), 2).unwrap(),
            vec![vec![2, 0], vec![1, 1], vec![0, 2]]
        );
        assert_eq!(
            enumerate_monomials(&ws(&[2, 2, 6]), 6).unwrap(),
            vec![
                vec![3, 0, 0],
                vec![2, 1, 0],
                vec![1, 2, 0],
                vec![0, 3, 0],
                vec![0, 0, 1]
            ]
        );
        let single = WeightSystem::unchecked_len(vec![7]).unwrap();
        assert!(enumerate_monomials(&single, 13).unwrap().is_empty());
    }

    #[test]
    fn enumerate_cap() {
        let err = enumerate_monomials_capped(&ws(&[1, 1, 1]), 10, 10).unwrap_err();
        assert_eq!(err, Error::ResourceLimit { count: 66, cap: 10 });
    }

    #[test]
    fn cy_flags() {
        for p in Preset::ALL {
            assert!(p.family().cy_flag(), "{p:?}");
        }
        assert!(!HypersurfaceFamily::from_slice(&[1, 1, 3], 6)
            .unwrap()
            .cy_flag());
    }
}
