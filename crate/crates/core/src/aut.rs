//! Infinitesimal graded automorphisms of a weighted projective space and the
//! stabilizer of a hypersurface; the `z -> -z` involution of double-cover
//! families.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{nullity, rank_mod_p};
use crate::poly::{rat, Rational, SparsePoly};
use crate::weights::{enumerate_monomials, HypersurfaceFamily, WeightSystem};

/// First-order graded substitution `x_i -> x_i + ε p_i`, `deg p_i = w_i`,
/// acting on polynomials as `D(f) = Σ p_i ∂f/∂x_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDerivation {
    entries: Vec<SparsePoly>,
}

impl GradedDerivation {
    pub fn new(weights: &WeightSystem, entries: Vec<SparsePoly>) -> Result<Self> {
        if entries.len() != weights.len() {
            return Err(Error::Precondition(format!(
                "expected {} entries, got {}",
                weights.len(),
                entries.len()
            )));
        }
        for (i, p) in entries.iter().enumerate() {
            if p.weights() != weights {
                return Err(Error::WeightMismatch {
                    left: weights.as_slice().to_vec(),
                    right: p.weights().as_slice().to_vec(),
                });
            }
            if !p.is_zero() && p.homogeneous_degree() != Some(u64::from(weights.weight(i))) {
                return Err(Error::Precondition(format!(
                    "entry {i} is not homogeneous of degree {}",
                    weights.weight(i)
                )));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[SparsePoly] {
        &self.entries
    }

    pub fn apply(&self, f: &SparsePoly) -> Result<SparsePoly> {
        let mut acc = SparsePoly::zero(f.weights());
        for (i, p) in self.entries.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            acc = acc.add(&p.mul(&f.partial_derivative(i)?)?)?;
        }
        Ok(acc)
    }
}

/// One monomial of degree `w_i` placed in slot `i`, for all `i` and all such
/// monomials.
pub fn derivation_basis(w: &WeightSystem) -> Result<Vec<GradedDerivation>> {
    let mut out = Vec::new();
    for i in 0..w.len() {
        for m in enumerate_monomials(w, i64::from(w.weight(i)))? {
            let mut entries = vec![SparsePoly::zero(w); w.len()];
            entries[i] = SparsePoly::monomial(w, m, Rational::one());
            out.push(GradedDerivation { entries });
        }
    }
    Ok(out)
}

/// `Σ w_i x_i ∂/∂x_i`.
pub fn euler_derivation(w: &WeightSystem) -> GradedDerivation {
    let entries = (0..w.len())
        .map(|i| {
            let mut e = vec![0; w.len()];
            e[i] = 1;
            SparsePoly::monomial(w, e, rat(i64::from(w.weight(i))))
        })
        .collect();
    GradedDerivation { entries }
}

/// Dimension of the Lie algebra `{D : D(f) ∈ Q f}`.
///
/// Solves `Σ_j c_j D_j(f) - λ f = 0` over the derivation basis by exact
/// elimination; `λ` is determined by `D` once `f ≠ 0`, so the kernel
/// dimension is the answer. Never below 1 for nonzero homogeneous `f`.
pub fn stabilizer_dim(f: &SparsePoly) -> Result<usize> {
    let w = f.weights();
    let Some(d) = f.homogeneous_degree() else {
        return Err(Error::Precondition(
            "stabilizer needs a homogeneous form".into(),
        ));
    };
    let rows_index: BTreeMap<Vec<u32>, usize> = enumerate_monomials(w, d as i64)?
        .into_iter()
        .enumerate()
        .map(|(k, e)| (e, k))
        .collect();
    let partials: Vec<SparsePoly> = (0..w.len())
        .map(|i| f.partial_derivative(i))
        .collect::<Result<_>>()?;

    let mut columns: Vec<SparsePoly> = Vec::new();
    for (i, df) in partials.iter().enumerate() {
        for m in enumerate_monomials(w, i64::from(w.weight(i)))? {
            columns.push(SparsePoly::monomial(w, m, Rational::one()).mul(df)?);
        }
    }
    columns.push(f.neg());

    let ncols = columns.len();
    let mut rows = vec![vec![Rational::zero(); ncols]; rows_index.len()];
    for (j, col) in columns.iter().enumerate() {
        for (e, c) in col.terms() {
            rows[rows_index[e]][j] = c.clone();
        }
    }
    // a mod-p kernel of dimension 1 pins the rational one, since the Euler
    // derivation always lies in it
    if rank_mod_p(&rows, 2_147_483_647).is_some_and(|r| ncols - r == 1) {
        return Ok(1);
    }
    Ok(nullity(rows, ncols))
}

/// The variable `z` with `2 w_z = d`, if there is exactly one.
pub fn forced_involution(fam: &HypersurfaceFamily) -> Result<Option<usize>> {
    let hits: Vec<usize> = (0..fam.weights.len())
        .filter(|&i| 2 * fam.weights.weight(i) == fam.degree)
        .collect();
    match hits.as_slice() {
        [] => Ok(None),
        [z] => Ok(Some(*z)),
        _ => Err(Error::AmbiguousInvolution {
            half: fam.degree / 2,
            indices: hits,
        }),
    }
}

/// The substitution `z -> z - shift` produced by [`complete_square`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareCompletion {
    pub variable: usize,
    pub shift: SparsePoly,
}

impl SquareCompletion {
    pub fn apply(&self, p: &SparsePoly) -> Result<SparsePoly> {
        let z = SparsePoly::var(p.weights(), self.variable)?;
        p.substitute(self.variable, &z.sub(&self.shift)?)
    }
}

/// Writes `f = c z^2 + z h + r` and substitutes `z -> z - h/(2c)`, removing
/// the part linear in `z`.
pub fn complete_square(f: &SparsePoly, z: usize) -> Result<(SparsePoly, SquareCompletion)> {
    let w = f.weights();
    if z >= w.len() {
        return Err(Error::VariableOutOfRange {
            index: z,
            nvars: w.len(),
        });
    }
    if f.homogeneous_degree() != Some(2 * u64::from(w.weight(z))) || f.degree_in(z) > 2 {
        return Err(Error::Precondition(
            "completing the square needs a form of degree 2 w_z".into(),
        ));
    }
    let mut square = vec![0; w.len()];
    square[z] = 2;
    let c = f.coeff(&square);
    if c.is_zero() {
        return Err(Error::VanishingSquare);
    }
    let h = SparsePoly::from_terms(
        w,
        f.terms().filter(|(e, _)| e[z] == 1).map(|(e, a)| {
            let mut e = e.clone();
            e[z] = 0;
            (e, a.clone())
        }),
    );
    let shift = h.scale(&(Rational::one() / (c * rat(2))));
    let record = SquareCompletion { variable: z, shift };
    Ok((record.apply(f)?, record))
}

/// True iff the family has a forced involution and the member, after
/// completing the square, is even in that variable.
pub fn involution_check(f: &SparsePoly, fam: &HypersurfaceFamily) -> Result<bool> {
    let Some(z) = forced_involution(fam)? else {
        return Ok(false);
    };
    let (g, _) = complete_square(f, z)?;
    let minus_z = SparsePoly::var(g.weights(), z)?.neg();
    Ok(g.substitute(z, &minus_z)? == g)
}

/// Stabilizer dimensions of seeded random members, in seed order.
pub fn stabilizer_survey(
    fam: &HypersurfaceFamily,
    seeds: &[u64],
    bound: u32,
) -> Result<Vec<StabilizerSample>> {
    use rayon::prelude::*;
    seeds
        .par_iter()
        .map(|&seed| {
            let member = crate::poly::random_member(fam, seed, bound)?;
            Ok(StabilizerSample {
                seed,
                dim: stabilizer_dim(&member)?,
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerSample {
    pub seed: u64,
    pub dim: usize,
}

/// Strict majority of samples with the generic dimension 1.
pub fn majority_generic(samples: &[StabilizerSample]) -> bool {
    2 * samples.iter().filter(|s| s.dim == 1).count() > samples.len()
}
