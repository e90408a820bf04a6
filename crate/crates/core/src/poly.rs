//! Sparse multivariate polynomials over the rationals on a weighted space.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::{enumerate_monomials, HypersurfaceFamily, WeightSystem};

pub type Rational = BigRational;

pub(crate) fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Renders `p/q` with `q >= 1`, integers included (`3/1`).
pub fn render_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = p
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
    let q: BigInt = q
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
    if q.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(p, q))
}

/// A polynomial `sum c_e x^e` with exact rational coefficients.
///
/// Terms are kept in a sorted map with no zero coefficients. `degree` is the
/// homogeneity flag: when set, every stored exponent has that weighted degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    weights: WeightSystem,
    terms: BTreeMap<Vec<u32>, Rational>,
    degree: Option<u64>,
}

impl SparsePoly {
    pub fn zero(weights: &WeightSystem) -> Self {
        Self {
            weights: weights.clone(),
            terms: BTreeMap::new(),
            degree: None,
        }
    }

    pub fn constant(weights: &WeightSystem, c: Rational) -> Self {
        let mut p = Self::zero(weights);
        if !c.is_zero() {
            p.terms.insert(vec![0; weights.len()], c);
            p.degree = Some(0);
        }
        p
    }

    /// The coordinate `x_i`.
    pub fn var(weights: &WeightSystem, i: usize) -> Result<Self> {
        check_index(weights, i)?;
        let mut e = vec![0; weights.len()];
        e[i] = 1;
        Ok(Self::monomial(weights, e, Rational::one()))
    }

    pub fn monomial(weights: &WeightSystem, exponents: Vec<u32>, c: Rational) -> Self {
        Self::from_terms(weights, [(exponents, c)])
    }

    /// Collects terms, summing repeats and dropping zeros. The homogeneity
    /// flag is set iff all surviving terms share one weighted degree.
    pub fn from_terms(
        weights: &WeightSystem,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Self {
        let mut map: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), weights.len(), "exponent length mismatch");
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut p = Self {
            weights: weights.clone(),
            terms: map,
            degree: None,
        };
        p.degree = p.detect_degree();
        p
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_int_terms(weights: &WeightSystem, terms: &[(&[u32], i64)]) -> Self {
        Self::from_terms(weights, terms.iter().map(|(e, c)| (e.to_vec(), rat(*c))))
    }

    fn detect_degree(&self) -> Option<u64> {
        let mut it = self.terms.keys().map(|e| self.weights.degree_of(e));
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn weights(&self) -> &WeightSystem {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    /// Weighted degree if the polynomial is homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        self.degree
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree.is_some()
    }

    /// Largest exponent of `x_i` that occurs.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.weights != other.weights {
            return Err(Error::WeightMismatch {
                left: self.weights.as_slice().to_vec(),
                right: other.weights.as_slice().to_vec(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(e.clone()).or_insert_with(Rational::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        let mut p = Self {
            weights: self.weights.clone(),
            terms,
            degree: None,
        };
        p.degree = match (self.degree, other.degree) {
            (Some(a), Some(b)) if a == b && !p.terms.is_empty() => Some(a),
            _ => p.detect_degree(),
        };
        Ok(p)
    }

    pub fn neg(&self) -> Self {
        Self {
            weights: self.weights.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            degree: self.degree,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.weights);
        }
        Self {
            weights: self.weights.clone(),
            terms: self.terms.iter().map(|(e, a)| (e.clone(), a * c)).collect(),
            degree: self.degree,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut terms: BTreeMap<Vec<u32>, Rational> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        let degree = match (self.degree, other.degree) {
            (Some(a), Some(b)) if !terms.is_empty() => Some(a + b),
            _ => None,
        };
        let mut p = Self {
            weights: self.weights.clone(),
            terms,
            degree,
        };
        if p.degree.is_none() {
            p.degree = p.detect_degree();
        }
        Ok(p)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(&self.weights, Rational::one());
        for _ in 0..k {
            acc = acc.mul(self).expect("same weights");
        }
        acc
    }

    pub fn partial_derivative(&self, i: usize) -> Result<Self> {
        check_index(&self.weights, i)?;
        let terms = self.terms.iter().filter(|(e, _)| e[i] > 0).map(|(e, c)| {
            let mut e2 = e.clone();
            e2[i] -= 1;
            (e2, c * rat(i64::from(e[i])))
        });
        Ok(Self::from_terms(&self.weights, terms))
    }

    /// Replaces every `x_i` by `images[i]` simultaneously.
    pub fn compose(&self, images: &[SparsePoly]) -> Result<Self> {
        if images.len() != self.nvars() {
            return Err(Error::Precondition(format!(
                "need {} images, got {}",
                self.nvars(),
                images.len()
            )));
        }
        for q in images {
            self.same_space(q)?;
        }
        // cache powers per variable
        let mut powers: Vec<Vec<SparsePoly>> = images
            .iter()
            .map(|q| vec![Self::constant(&self.weights, Rational::one()), q.clone()])
            .collect();
        let mut out = Self::zero(&self.weights);
        for (e, c) in &self.terms {
            let mut term = Self::constant(&self.weights, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[i].len() <= k as usize {
                    let next = powers[i].last().unwrap().mul(&images[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][k as usize])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Replaces `x_i` by `q`. Grading is preserved when `q` is homogeneous of
    /// degree `w_i`; otherwise the homogeneity flag is recomputed.
    pub fn substitute(&self, i: usize, q: &SparsePoly) -> Result<Self> {
        check_index(&self.weights, i)?;
        self.same_space(q)?;
        let images: Vec<SparsePoly> = (0..self.nvars())
            .map(|j| {
                if j == i {
                    Ok(q.clone())
                } else {
                    Self::var(&self.weights, j)
                }
            })
            .collect::<Result<_>>()?;
        self.compose(&images)
    }

    /// Sets `x_i = 0` for every `i` in `vanishing`.
    pub fn restrict_to_zero(&self, vanishing: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| vanishing.iter().all(|&i| e[i] == 0))
            .map(|(e, c)| (e.clone(), c.clone()));
        Self::from_terms(&self.weights, terms)
    }

    /// Keeps only the coordinates in `keep`, moving the polynomial to the
    /// sub-weight-system. Terms involving other variables are dropped.
    pub fn project(&self, keep: &[usize], sub: &WeightSystem) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| (0..e.len()).all(|i| keep.contains(&i) || e[i] == 0))
            .map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone()));
        Self::from_terms(sub, terms)
    }

    /// Serialized form: one entry per term, sorted by exponent vector.
    pub fn to_wire(&self) -> Vec<WireTerm> {
        self.terms
            .iter()
            .map(|(e, c)| WireTerm {
                exponents: e.clone(),
                coeff: render_rational(c),
            })
            .collect()
    }

    pub fn from_wire(weights: &WeightSystem, wire: &[WireTerm]) -> Result<Self> {
        let terms = wire
            .iter()
            .map(|t| {
                if t.exponents.len() != weights.len() {
                    return Err(Error::Parse(format!(
                        "exponent vector {:?} has wrong length",
                        t.exponents
                    )));
                }
                Ok((t.exponents.clone(), parse_rational(&t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_terms(weights, terms))
    }
}

fn check_index(w: &WeightSystem, i: usize) -> Result<()> {
    if i >= w.len() {
        return Err(Error::VariableOutOfRange {
            index: i,
            nvars: w.len(),
        });
    }
    Ok(())
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let is_const = e.iter().all(|&x| x == 0);
            if !a.is_one() || is_const {
                write!(f, "{a}")?;
            }
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => write!(f, "x{i}")?,
                    _ => write!(f, "x{i}^{x}")?,
                }
            }
        }
        Ok(())
    }
}

/// One serialized term: `{ "exponents": [...], "coeff": "p/q" }`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WireTerm {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

/// Dense random member of the family: every monomial of degree `d` with a
/// nonzero integer coefficient drawn uniformly from `[-bound, bound]`.
pub fn random_member(fam: &HypersurfaceFamily, seed: u64, bound: u32) -> Result<SparsePoly> {
    if bound == 0 {
        return Err(Error::Precondition("bound must be positive".into()));
    }
    let monos = enumerate_monomials(&fam.weights, i64::from(fam.degree))?;
    if monos.is_empty() {
        return Err(Error::EmptyDegree {
            weights: fam.weights.as_slice().to_vec(),
            degree: i64::from(fam.degree),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = i64::from(bound);
    let terms = monos.into_iter().map(|e| {
        let mag = rng.gen_range(1..=b);
        let c = if rng.gen_bool(0.5) { mag } else { -mag };
        (e, rat(c))
    });
    Ok(SparsePoly::from_terms(&fam.weights, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ws(w: &[u32]) -> WeightSystem {
        WeightSystem::new(w.to_vec()).unwrap()
    }

    #[test]
    fn derivative_of_x2y() {
        let w = ws(&[1, 1]);
        let p = SparsePoly::from_int_terms(&w, &[(&[2, 1], 1)]);
        let d = p.partial_derivative(0).unwrap();
        assert_eq!(d, SparsePoly::from_int_terms(&w, &[(&[1, 1], 2)]));
        assert_eq!(d.homogeneous_degree(), Some(2));
        assert!(p.partial_derivative(5).is_err());
    }

    #[test]
    fn difference_of_squares() {
        let w = ws(&[1, 1]);
        let a = SparsePoly::from_int_terms(&w, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = SparsePoly::from_int_terms(&w, &[(&[1, 0], 1), (&[0, 1], -1)]);
        let expect = SparsePoly::from_int_terms(&w, &[(&[2, 0], 1), (&[0, 2], -1)]);
        assert_eq!(a.mul(&b).unwrap(), expect);
    }

    #[test]
    fn parity_substitution() {
        // z^2 + y^6 on P[1,3], z the weight-3 variable
        let w = ws(&[1, 3]);
        let f = SparsePoly::from_int_terms(&w, &[(&[0, 2], 1), (&[6, 0], 1)]);
        let minus_z = SparsePoly::var(&w, 1).unwrap().neg();
        assert_eq!(f.substitute(1, &minus_z).unwrap(), f);
    }

    #[test]
    fn heterogeneous_substitution_clears_flag() {
        let w = ws(&[1, 2]);
        let f = SparsePoly::from_int_terms(&w, &[(&[0, 1], 1)]);
        assert_eq!(f.homogeneous_degree(), Some(2));
        let q = SparsePoly::from_int_terms(&w, &[(&[1, 0], 1), (&[0, 1], 1)]);
        let g = f.substitute(1, &q).unwrap();
        assert_eq!(g.homogeneous_degree(), None);
        let q2 = SparsePoly::from_int_terms(&w, &[(&[2, 0], 3), (&[0, 1], 1)]);
        assert_eq!(f.substitute(1, &q2).unwrap().homogeneous_degree(), Some(2));
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = SparsePoly::var(&ws(&[1, 1]), 0).unwrap();
        let b = SparsePoly::var(&ws(&[1, 2]), 0).unwrap();
        assert!(matches!(a.add(&b), Err(Error::WeightMismatch { .. })));
        assert!(a.mul(&b).is_err());
    }

    #[test]
    fn random_member_examples() {
        let fam = HypersurfaceFamily::from_slice(&[1, 1], 2).unwrap();
        let p = random_member(&fam, 0, 9).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert!(p.terms().all(|(_, c)| c.abs() <= rat(9) && !c.is_zero()));

        let x8 = HypersurfaceFamily::from_slice(&[1, 1, 2, 2, 2], 8).unwrap();
        let a = random_member(&x8, 7, 9).unwrap();
        assert_eq!(a.num_terms(), 105);
        assert_eq!(a.homogeneous_degree(), Some(8));
        assert_eq!(a, random_member(&x8, 7, 9).unwrap());
        assert_ne!(a, random_member(&x8, 8, 9).unwrap());
    }

    #[test]
    fn random_member_needs_monomials() {
        let fam = HypersurfaceFamily::from_slice(&[2, 4], 3).unwrap();
        assert!(matches!(
            random_member(&fam, 0, 3),
            Err(Error::EmptyDegree { .. })
        ));
    }

    #[test]
    fn wire_format() {
        let w = ws(&[1, 2]);
        let p = SparsePoly::from_terms(
            &w,
            [
                (vec![2, 0], Rational::new(3.into(), 4.into())),
                (vec![0, 1], rat(-2)),
            ],
        );
        let wire = p.to_wire();
        let json = serde_json::to_string(&wire).unwrap();
        assert_eq!(
            json,
            r#"[{"exponents":[0,1],"coeff":"-2/1"},{"exponents":[2,0],"coeff":"3/4"}]"#
        );
        assert_eq!(SparsePoly::from_wire(&w, &wire).unwrap(), p);
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn display() {
        let w = ws(&[1, 1]);
        let p = SparsePoly::from_int_terms(&w, &[(&[2, 0], 1), (&[0, 2], -3), (&[1, 1], 2)]);
        assert_eq!(p.to_string(), "x0^2 + 2x0x1 - 3x1^2");
    }

    fn arb_member() -> impl Strategy<Value = SparsePoly> {
        (prop::collection::vec(1u32..5, 2..5), 1u32..12, any::<u64>()).prop_filter_map(
            "empty degree",
            |(w, d, seed)| {
                let fam = HypersurfaceFamily::from_slice(&w, d).ok()?;
                random_member(&fam, seed, 5).ok()
            },
        )
    }

    proptest! {
        #[test]
        fn euler_identity(p in arb_member()) {
            let w = p.weights().clone();
            let d = p.homogeneous_degree().unwrap();
            let mut acc = SparsePoly::zero(&w);
            for i in 0..w.len() {
                let xi = SparsePoly::var(&w, i).unwrap();
                let t = xi.mul(&p.partial_derivative(i).unwrap()).unwrap();
                acc = acc.add(&t.scale(&rat(i64::from(w.weight(i))))).unwrap();
            }
            prop_assert_eq!(acc, p.scale(&rat(d as i64)));
        }

        #[test]
        fn wire_roundtrip(p in arb_member()) {
            let back = SparsePoly::from_wire(p.weights(), &p.to_wire()).unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
