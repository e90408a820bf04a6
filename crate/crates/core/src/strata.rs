//! Coordinate strata with nontrivial stabilizer and the singular curves a
//! general hypersurface picks up along them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plane::is_quasi_smooth_plane_curve;
use crate::poly::SparsePoly;
use crate::weights::{gcd_of, graded_dim, HypersurfaceFamily, WeightSystem};

/// The coordinate subspace `{x_i = 0 : i in vanishing_set}` together with
/// its generic stabilizer `mu_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stratum {
    pub vanishing_set: Vec<usize>,
    pub residual_indices: Vec<usize>,
    pub residual_weights: WeightSystem,
    pub stabilizer_order: u32,
    /// Residues mod `m` of the weights in the vanishing set.
    pub transverse_weights: Vec<u32>,
}

impl Stratum {
    /// Builds the stratum cut out by `vanishing_set` in `w`.
    pub fn new(w: &WeightSystem, vanishing_set: Vec<usize>) -> Result<Self> {
        let residual_indices: Vec<usize> = (0..w.len())
            .filter(|i| !vanishing_set.contains(i))
            .collect();
        if residual_indices.is_empty() || vanishing_set.is_empty() {
            return Err(Error::Precondition(
                "vanishing set must be a nonempty proper subset".into(),
            ));
        }
        if let Some(&bad) = vanishing_set.iter().find(|&&i| i >= w.len()) {
            return Err(Error::VariableOutOfRange {
                index: bad,
                nvars: w.len(),
            });
        }
        let residual_weights = w.select(&residual_indices)?;
        let m = residual_weights.gcd();
        let transverse_weights = vanishing_set.iter().map(|&i| w.weight(i) % m).collect();
        Ok(Self {
            vanishing_set,
            residual_indices,
            residual_weights,
            stabilizer_order: m,
            transverse_weights,
        })
    }

    /// Projective dimension.
    pub fn dim(&self) -> usize {
        self.residual_weights.len() - 1
    }
}

/// Strata of `w` with stabilizer order `> 1`.
///
/// For every `m > 1` dividing some weight, the fixed locus of `mu_m` is the
/// subspace where all coordinates of weight prime to `m` vanish. Each distinct
/// such subspace is reported once with its full generic stabilizer; smaller
/// coordinate subspaces inside it that carry the same stabilizer are part of
/// the same stratum. Sorted by `|I|`, then lexicographically.
pub fn strata(w: &WeightSystem) -> Vec<Stratum> {
    let max = w.as_slice().iter().copied().max().unwrap_or(1);
    let mut out: Vec<Stratum> = Vec::new();
    for m in 2..=max {
        let vanishing: Vec<usize> = (0..w.len())
            .filter(|&i| !w.weight(i).is_multiple_of(m))
            .collect();
        if vanishing.is_empty() || vanishing.len() == w.len() {
            continue;
        }
        if out.iter().any(|s| s.vanishing_set == vanishing) {
            continue;
        }
        out.push(Stratum::new(w, vanishing).expect("proper subset"));
    }
    out.sort_by(|a, b| {
        a.vanishing_set
            .len()
            .cmp(&b.vanishing_set.len())
            .then_with(|| a.vanishing_set.cmp(&b.vanishing_set))
    });
    out
}

/// True iff every member of the family contains the stratum, i.e. no
/// monomial of degree `d` lives on it.
pub fn contains_stratum(fam: &HypersurfaceFamily, s: &Stratum) -> bool {
    graded_dim(&s.residual_weights, i64::from(fam.degree)) == 0
}

/// Transverse quotient singularity label: `A1` or `Z/m(a_1,...)`.
pub fn transverse_type(s: &Stratum) -> Result<String> {
    let m = s.stabilizer_order;
    if m <= 1 {
        return Err(Error::Precondition(
            "transverse type needs a nontrivial stabilizer".into(),
        ));
    }
    if m == 2 && s.transverse_weights.iter().all(|a| a % 2 == 1) {
        return Ok("A1".into());
    }
    let residues: Vec<String> = s.transverse_weights.iter().map(u32::to_string).collect();
    Ok(format!("Z/{m}({})", residues.join(",")))
}

/// Genus of `X_d ∩ Π_I` for a two-dimensional stratum.
///
/// The curve is a quasi-smooth degree `d` curve in `P[residual]`, so its
/// genus is `h^0` of the adjoint degree `k = d - Σ residual`, computed as
/// `dim S_k - dim S_{k-d}`.
pub fn curve_genus(fam: &HypersurfaceFamily, s: &Stratum) -> Result<u64> {
    if s.dim() != 2 {
        return Err(Error::Precondition(format!(
            "genus needs a two-dimensional stratum, got dimension {}",
            s.dim()
        )));
    }
    let d = i64::from(fam.degree);
    let k = d - s.residual_weights.sum() as i64;
    Ok(graded_dim(&s.residual_weights, k) - graded_dim(&s.residual_weights, k - d))
}

/// A curve of quotient singularities on the general member.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularCurve {
    pub stratum: Stratum,
    pub genus: u64,
    pub transverse_type: String,
}

/// Singular curves of the general member: two-dimensional strata with
/// nontrivial stabilizer that the hypersurface meets but does not contain.
pub fn singular_curves(fam: &HypersurfaceFamily) -> Result<Vec<SingularCurve>> {
    strata(&fam.weights)
        .into_iter()
        .filter(|s| s.dim() == 2 && !contains_stratum(fam, s))
        .map(|s| {
            Ok(SingularCurve {
                genus: curve_genus(fam, &s)?,
                transverse_type: transverse_type(&s)?,
                stratum: s,
            })
        })
        .collect()
}

/// Virtual number of flopped curves, `2g - 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlopCount {
    pub count: u64,
    /// Set for `g = 1`, where the construction does not apply.
    pub degenerate: bool,
}

pub fn flop_count(genus: u64) -> Result<FlopCount> {
    match genus {
        0 => Err(Error::GenusZero),
        g => Ok(FlopCount {
            count: 2 * g - 2,
            degenerate: g == 1,
        }),
    }
}

/// Picard rank of the crepant resolution: one exceptional divisor per
/// transverse-A1 curve on top of the hyperplane class.
pub fn resolution_picard_rank(fam: &HypersurfaceFamily) -> Result<u32> {
    let mut curves = 0;
    for s in strata(&fam.weights) {
        let contained = contains_stratum(fam, &s);
        match (s.dim(), contained) {
            (0, false) => continue,
            (2, false) => {
                let t = transverse_type(&s)?;
                if t != "A1" {
                    return Err(Error::UnsupportedSingularity(format!(
                        "curve along {:?} has transverse type {t}",
                        s.vanishing_set
                    )));
                }
                curves += 1;
            }
            (dim, contained) => {
                return Err(Error::UnsupportedSingularity(format!(
                    "stratum {:?} of dimension {dim} ({}) meets the general member",
                    s.vanishing_set,
                    if contained { "contained" } else { "cut" }
                )));
            }
        }
    }
    Ok(1 + curves)
}

/// Checks that the sampled member cuts a smooth curve on the stratum.
///
/// The restriction lives on `P[residual]`; dividing out the common factor of
/// the residual weights must give `(1,1,c)` up to order, which is the model
/// handed to the exact plane-curve test.
pub fn quasi_smooth_probe(member: &SparsePoly, s: &Stratum) -> Result<bool> {
    if s.dim() != 2 {
        return Err(Error::InapplicableModel(format!(
            "stratum has dimension {}",
            s.dim()
        )));
    }
    let res = s.residual_weights.as_slice();
    let g = gcd_of(res.iter().copied());
    let reduced: Vec<u32> = res.iter().map(|w| w / g).collect();
    let mut order: Vec<usize> = (0..3).collect();
    order.sort_by_key(|&i| reduced[i]);
    if reduced[order[0]] != 1 || reduced[order[1]] != 1 {
        return Err(Error::InapplicableModel(format!(
            "residual weights {res:?} do not reduce to (1,1,c)"
        )));
    }
    let keep: Vec<usize> = order.iter().map(|&i| s.residual_indices[i]).collect();
    let model = WeightSystem::new(order.iter().map(|&i| reduced[i]).collect::<Vec<_>>())?;
    let curve = member.project(&keep, &model);
    if curve.is_zero() {
        return Ok(false);
    }
    is_quasi_smooth_plane_curve(&curve)
}
