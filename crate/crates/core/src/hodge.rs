//! Parameter counts and Hodge-number bookkeeping for the resolution `Y -> X`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::strata::{resolution_picard_rank, singular_curves};
use crate::weights::{graded_dim, HypersurfaceFamily, WeightSystem};

/// Dimension of the group of graded substitutions acting on `P[w]`: every
/// `x_i -> p_i` with `deg p_i = w_i`, less the torus acting trivially.
pub fn aut_group_dim(w: &WeightSystem) -> u64 {
    generator_space_dim(w) - 1
}

/// `Σ_i dim S_{w_i}`.
pub(crate) fn generator_space_dim(w: &WeightSystem) -> u64 {
    w.as_slice()
        .iter()
        .map(|&wi| graded_dim(w, i64::from(wi)))
        .sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuliCount {
    pub dim_sd: u64,
    pub aut_dim: u64,
    /// `dim S_d - Σ dim S_{w_i}`; projectivizing `f` and the trivial torus
    /// cancel.
    pub moduli: i64,
    /// Set when a sampled member had a stabilizer larger than the Euler line,
    /// in which case `moduli` overcounts.
    pub stabilizer_warning: bool,
}

impl ModuliCount {
    /// Records the stabilizer dimension observed on a sampled member.
    pub fn with_stabilizer(mut self, stabilizer_dim: usize) -> Self {
        self.stabilizer_warning |= stabilizer_dim > 1;
        self
    }
}

pub fn moduli_count(fam: &HypersurfaceFamily) -> ModuliCount {
    let dim_sd = fam.dim_sd();
    let gens = generator_space_dim(&fam.weights);
    ModuliCount {
        dim_sd,
        aut_dim: gens - 1,
        moduli: dim_sd as i64 - gens as i64,
        stabilizer_warning: false,
    }
}

fn genus_total(fam: &HypersurfaceFamily) -> Result<u64> {
    Ok(singular_curves(fam)?.iter().map(|c| c.genus).sum())
}

/// `h^{2,1}` of the resolution: moduli of `X` plus the genera of the curves
/// blown up.
pub fn h21_resolution(fam: &HypersurfaceFamily) -> Result<i64> {
    Ok(moduli_count(fam).moduli + genus_total(fam)? as i64)
}

/// Rank bookkeeping for `0 -> H^3(X) -> H^3(Y) -> H^1(C)(-1) -> 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeSplit {
    pub h21_y: i64,
    pub h11_y: u32,
    pub g_total: u64,
    /// Rank fixed by the involution.
    pub b3_x: i64,
    /// Rank negated by the involution.
    pub b3_moved: i64,
    pub b3_y: i64,
}

pub fn hodge_split(fam: &HypersurfaceFamily) -> Result<HodgeSplit> {
    let moduli = moduli_count(fam).moduli;
    let g_total = genus_total(fam)?;
    let h21_y = moduli + g_total as i64;
    let b3_x = 2 + 2 * moduli;
    let b3_moved = 2 * g_total as i64;
    Ok(HodgeSplit {
        h21_y,
        h11_y: resolution_picard_rank(fam)?,
        g_total,
        b3_x,
        b3_moved,
        b3_y: b3_x + b3_moved,
    })
}

/// Codimension of the locus where the exceptional family deforms.
pub fn s_e_codim(fam: &HypersurfaceFamily) -> Result<i64> {
    Ok(h21_resolution(fam)? - moduli_count(fam).moduli)
}

/// `2 (h^{1,1} - h^{2,1})` from the counting side.
pub fn euler_expected(fam: &HypersurfaceFamily) -> Result<i64> {
    let h11 = i64::from(resolution_picard_rank(fam)?);
    Ok(2 * (h11 - h21_resolution(fam)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Preset;

    fn w(ws: &[u32]) -> WeightSystem {
        WeightSystem::new(ws.to_vec()).unwrap()
    }

    #[test]
    fn aut_dims() {
        assert_eq!(aut_group_dim(&w(&[1, 1, 1, 1, 1])), 24);
        assert_eq!(aut_group_dim(&w(&[1, 2, 2, 2, 7])), 33);
        assert_eq!(aut_group_dim(&w(&[1, 1, 2, 2, 2])), 21);
    }

    #[test]
    fn moduli_counts() {
        let m = moduli_count(&Preset::X14.family());
        assert_eq!((m.dim_sd, m.moduli), (141, 107));
        assert_eq!(moduli_count(&Preset::X8.family()).moduli, 83);
        assert_eq!(moduli_count(&Preset::X12.family()).moduli, 126);
        assert_eq!(moduli_count(&Preset::Quintic.family()).moduli, 101);
        assert!(!m.with_stabilizer(1).stabilizer_warning);
        assert!(m.with_stabilizer(2).stabilizer_warning);
    }

    #[test]
    fn bookkeeping_identity() {
        for p in Preset::ALL {
            let m = moduli_count(&p.family());
            assert_eq!(m.moduli + 1 + m.aut_dim as i64, m.dim_sd as i64, "{p:?}");
        }
    }

    #[test]
    fn h21_values() {
        assert_eq!(h21_resolution(&Preset::X14.family()).unwrap(), 122);
        assert_eq!(h21_resolution(&Preset::X8.family()).unwrap(), 86);
        assert_eq!(h21_resolution(&Preset::X12.family()).unwrap(), 128);
    }

    #[test]
    fn splits() {
        let cases = [
            (Preset::X8, 168, 6, 174),
            (Preset::X12, 254, 4, 258),
            (Preset::X14, 216, 30, 246),
        ];
        for (p, bx, moved, by) in cases {
            let s = hodge_split(&p.family()).unwrap();
            assert_eq!((s.b3_x, s.b3_moved, s.b3_y), (bx, moved, by), "{p:?}");
            assert_eq!(s.b3_y, 2 + 2 * s.h21_y);
        }
    }

    #[test]
    fn codims_and_euler() {
        assert_eq!(s_e_codim(&Preset::X8.family()).unwrap(), 3);
        assert_eq!(s_e_codim(&Preset::X12.family()).unwrap(), 2);
        assert_eq!(s_e_codim(&Preset::X14.family()).unwrap(), 15);
        assert_eq!(euler_expected(&Preset::X8.family()).unwrap(), -168);
        assert_eq!(euler_expected(&Preset::X12.family()).unwrap(), -252);
        assert_eq!(euler_expected(&Preset::Quintic.family()).unwrap(), -200);
    }
}
