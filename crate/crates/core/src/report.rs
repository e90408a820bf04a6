//! Family reports and the cross-module consistency suite.

use std::fmt::Write as _;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::aut::{
    forced_involution, involution_check, majority_generic, stabilizer_survey, StabilizerSample,
};
use crate::chow::{
    chern_numbers, cubic_form, euler_number, integrate, nef_invariance_check, ModelKind,
    NefVerdict, ScrollSpec, ThreefoldModel,
};
use crate::error::{Error, Result};
use crate::hodge::{euler_expected, hodge_split, moduli_count, s_e_codim, HodgeSplit};
use crate::poly::random_member;
use crate::strata::{
    contains_stratum, flop_count, quasi_smooth_probe, resolution_picard_rank, singular_curves,
    strata, transverse_type,
};
use crate::weights::{enumerate_monomials, graded_dim, HypersurfaceFamily, Preset, WeightSystem};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_COEFFICIENT_BOUND: u32 = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub seeds: Vec<u64>,
    /// Coefficients of sampled members lie in `[-bound, bound] \ {0}`.
    pub coefficient_bound: u32,
    /// Skip the stabilizer survey and the probes, which dominate runtime.
    pub skip_automorphisms: bool,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            seeds: (0..=19).collect(),
            coefficient_bound: DEFAULT_COEFFICIENT_BOUND,
            skip_automorphisms: false,
        }
    }
}

/// Parses `a..b` (inclusive) or a single seed.
pub fn parse_seed_range(s: &str) -> Result<Vec<u64>> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("bad seed {t:?}")))
    };
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(Error::Parse(format!("empty seed range {s:?}")));
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratumEntry {
    pub vanishing_set: Vec<usize>,
    pub residual_weights: Vec<u32>,
    pub stabilizer_order: u32,
    pub dim: usize,
    pub contained: bool,
    pub transverse_type: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveEntry {
    pub vanishing_set: Vec<usize>,
    pub residual_weights: Vec<u32>,
    pub genus: u64,
    pub transverse_type: String,
    /// `2g - 2`; absent for rational curves.
    pub flop_count: Option<u64>,
    pub flop_degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionBlock {
    pub model: ModelKind,
    pub scroll_twists: Vec<u32>,
    pub cubic_form: [i64; 4],
    pub c2_form: [i64; 2],
    pub euler: i64,
    pub nef: NefVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProbeEntry {
    pub seed: u64,
    pub vanishing_set: Vec<usize>,
    pub smooth: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AutomorphismBlock {
    pub coefficient_bound: u32,
    pub stabilizer: Vec<StabilizerSample>,
    pub majority_generic: bool,
    pub forced_involution: Option<usize>,
    /// Evaluated on the member of the first seed.
    pub involution: bool,
    pub quasi_smooth_probe: Vec<ProbeEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Verdict {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub schema_version: u32,
    pub preset: Option<String>,
    pub weights: Vec<u32>,
    pub degree: u32,
    pub cy_flag: bool,
    pub well_formed: bool,
    pub strata: Vec<StratumEntry>,
    pub singular_curves: Vec<CurveEntry>,
    pub dim_sd: u64,
    pub moduli: i64,
    pub aut_dim: u64,
    pub stabilizer_warning: bool,
    pub h21_y: i64,
    pub h11_y: Option<u32>,
    pub hodge_split: Option<HodgeSplit>,
    pub s_e_codim: i64,
    pub euler_expected: Option<i64>,
    pub intersection: Option<IntersectionBlock>,
    pub automorphisms: Option<AutomorphismBlock>,
    pub consistency: Vec<Verdict>,
    /// Set when the singular locus is outside what the resolution model
    /// covers; fields depending on `h11` are then absent.
    pub unsupported_singularity: Option<String>,
}

impl FamilyReport {
    pub fn all_consistent(&self) -> bool {
        self.consistency.iter().all(|v| v.passed)
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let w = WeightSystem::new(self.weights.clone())
            .map_or_else(|_| format!("{:?}", self.weights), |w| w.to_string());
        let _ = writeln!(s, "X_{} in {w}", self.degree);
        if let Some(p) = &self.preset {
            let _ = writeln!(s, "  preset: {p}");
        }
        let _ = writeln!(
            s,
            "  calabi-yau: {}, well-formed: {}",
            self.cy_flag, self.well_formed
        );
        let _ = writeln!(s, "  strata:");
        for st in &self.strata {
            let _ = writeln!(
                s,
                "    {:?} residual {:?} order {} dim {} {} {}",
                st.vanishing_set,
                st.residual_weights,
                st.stabilizer_order,
                st.dim,
                if st.contained { "contained" } else { "cut" },
                st.transverse_type
            );
        }
        if self.singular_curves.is_empty() {
            let _ = writeln!(s, "  singular curves: none");
        }
        for c in &self.singular_curves {
            let flops = c
                .flop_count
                .map_or_else(|| "-".to_string(), |n| n.to_string());
            let _ = writeln!(
                s,
                "  curve {:?}: genus {}, type {}, flops {flops}",
                c.vanishing_set, c.genus, c.transverse_type
            );
        }
        let _ = writeln!(
            s,
            "  dim S_d {}, aut {}, moduli {}, h21(Y) {}, s_E codim {}",
            self.dim_sd, self.aut_dim, self.moduli, self.h21_y, self.s_e_codim
        );
        if let Some(h11) = self.h11_y {
            let _ = writeln!(s, "  h11(Y) {h11}");
        }
        if let Some(h) = &self.hodge_split {
            let _ = writeln!(
                s,
                "  b3: X {} + moved {} = Y {}",
                h.b3_x, h.b3_moved, h.b3_y
            );
        }
        if let Some(e) = self.euler_expected {
            let _ = writeln!(s, "  euler (counting) {e}");
        }
        if let Some(b) = &self.intersection {
            let _ = writeln!(s, "  scroll model F{:?}:", b.scroll_twists);
            let _ = writeln!(
                s,
                "    cubic {:?}, c2 {:?}, euler {}",
                b.cubic_form, b.c2_form, b.euler
            );
            let _ = writeln!(
                s,
                "    nef criterion {} (kernel {:?}, cubic there {})",
                b.nef.holds, b.nef.kernel, b.nef.cubic_at_kernel
            );
        }
        if let Some(a) = &self.automorphisms {
            let dims: Vec<String> = a.stabilizer.iter().map(|x| x.dim.to_string()).collect();
            let _ = writeln!(
                s,
                "  stabilizer dims [{}], majority generic {}",
                dims.join(" "),
                a.majority_generic
            );
            let _ = writeln!(
                s,
                "  forced involution {}, involution {}",
                a.forced_involution
                    .map_or_else(|| "none".to_string(), |i| format!("x{i} -> -x{i}")),
                a.involution
            );
            for p in &a.quasi_smooth_probe {
                let _ = writeln!(
                    s,
                    "  probe seed {} on {:?}: smooth {}",
                    p.seed, p.vanishing_set, p.smooth
                );
            }
        }
        if let Some(u) = &self.unsupported_singularity {
            let _ = writeln!(s, "  unsupported singularity: {u}");
        }
        for v in &self.consistency {
            let _ = writeln!(
                s,
                "  [{}] {}: {}",
                if v.passed { "ok" } else { "FAIL" },
                v.name,
                v.detail
            );
        }
        s
    }
}

fn preset_of(fam: &HypersurfaceFamily) -> Option<Preset> {
    Preset::ALL.into_iter().find(|p| p.family() == *fam)
}

/// Scroll model of a preset family, when one is known.
pub fn scroll_model(fam: &HypersurfaceFamily) -> Option<ThreefoldModel> {
    match preset_of(fam)? {
        Preset::X8 => Some(ThreefoldModel::x8()),
        Preset::X12 => Some(ThreefoldModel::x12()),
        _ => None,
    }
}

/// `Y = 4ξ` in `F(1,1,0,0)`, the deformation of the `X_8` model.
pub fn x8_deformed_model() -> ThreefoldModel {
    let f = ScrollSpec::new(vec![1, 1, 0, 0]).expect("rank 4");
    let y = f.divisor(4, 0);
    ThreefoldModel::complete_intersection(f, y).expect("rank 4")
}

fn intersection_block(model: &ThreefoldModel) -> Result<IntersectionBlock> {
    let ch = chern_numbers(model)?;
    Ok(IntersectionBlock {
        model: model.kind,
        scroll_twists: model.ambient.twists().to_vec(),
        cubic_form: cubic_form(model)?,
        c2_form: [ch.c2_xi, ch.c2_f],
        euler: ch.euler,
        nef: nef_invariance_check(model)?,
    })
}

fn automorphism_block(
    fam: &HypersurfaceFamily,
    opts: &AnalyzeOptions,
) -> Result<AutomorphismBlock> {
    let bound = opts.coefficient_bound;
    let samples = stabilizer_survey(fam, &opts.seeds, bound)?;
    let mut involution = false;
    let mut probes = Vec::new();
    if let Some(&seed) = opts.seeds.first() {
        let member = random_member(fam, seed, bound)?;
        involution = involution_check(&member, fam)?;
        for c in singular_curves(fam)? {
            match quasi_smooth_probe(&member, &c.stratum) {
                Ok(smooth) => probes.push(ProbeEntry {
                    seed,
                    vanishing_set: c.stratum.vanishing_set.clone(),
                    smooth,
                }),
                Err(Error::InapplicableModel(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    Ok(AutomorphismBlock {
        coefficient_bound: bound,
        majority_generic: majority_generic(&samples),
        stabilizer: samples,
        forced_involution: forced_involution(fam)?,
        involution,
        quasi_smooth_probe: probes,
    })
}

/// Full report for `X_d ⊂ P[w]`. Unsupported singularities are recorded in
/// the report rather than returned as errors.
pub fn analyze(weights: &[u32], degree: u32, opts: &AnalyzeOptions) -> Result<FamilyReport> {
    let fam = HypersurfaceFamily::from_slice(weights, degree)?;
    let w = &fam.weights;

    let strata_entries = strata(w)
        .into_iter()
        .map(|s| {
            Ok(StratumEntry {
                contained: contains_stratum(&fam, &s),
                transverse_type: transverse_type(&s)?,
                vanishing_set: s.vanishing_set.clone(),
                residual_weights: s.residual_weights.as_slice().to_vec(),
                stabilizer_order: s.stabilizer_order,
                dim: s.dim(),
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let curves = singular_curves(&fam)?;
    let curve_entries = curves
        .iter()
        .map(|c| {
            let (flop_count, flop_degenerate) = match flop_count(c.genus) {
                Ok(f) => (Some(f.count), f.degenerate),
                Err(Error::GenusZero) => (None, false),
                Err(e) => return Err(e),
            };
            Ok(CurveEntry {
                vanishing_set: c.stratum.vanishing_set.clone(),
                residual_weights: c.stratum.residual_weights.as_slice().to_vec(),
                genus: c.genus,
                transverse_type: c.transverse_type.clone(),
                flop_count,
                flop_degenerate,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let g_total: u64 = curves.iter().map(|c| c.genus).sum();

    let mut moduli = moduli_count(&fam);
    let h21_y = moduli.moduli + g_total as i64;
    let codim = s_e_codim(&fam)?;

    let (h11_y, split, e_expected, unsupported) = match resolution_picard_rank(&fam) {
        Ok(h11) => (
            Some(h11),
            Some(hodge_split(&fam)?),
            Some(euler_expected(&fam)?),
            None,
        ),
        Err(e @ Error::UnsupportedSingularity(_)) => (None, None, None, Some(e.to_string())),
        Err(e) => return Err(e),
    };

    let model = scroll_model(&fam);
    let intersection = model.as_ref().map(intersection_block).transpose()?;

    let automorphisms = if opts.skip_automorphisms || unsupported.is_some() {
        None
    } else {
        Some(automorphism_block(&fam, opts)?)
    };
    if let Some(a) = &automorphisms {
        if let Some(first) = a.stabilizer.first() {
            moduli = moduli.with_stabilizer(first.dim);
        }
    }

    let mut consistency = vec![
        Verdict::new(
            "parameter_bookkeeping",
            moduli.moduli + 1 + moduli.aut_dim as i64 == moduli.dim_sd as i64,
            format!(
                "{} + 1 + {} vs dim S_d {}",
                moduli.moduli, moduli.aut_dim, moduli.dim_sd
            ),
        ),
        Verdict::new(
            "codimension_equals_genus",
            codim == g_total as i64,
            format!("s_E codim {codim}, total genus {g_total}"),
        ),
    ];
    if let Some(h) = &split {
        consistency.push(Verdict::new(
            "betti_additivity",
            h.b3_y - h.b3_x == 2 * h.g_total as i64 && h.b3_y == 2 + 2 * h.h21_y,
            format!(
                "b3(Y) {} - b3(X) {} vs 2g {}",
                h.b3_y,
                h.b3_x,
                2 * h.g_total
            ),
        ));
    }
    if let (Some(b), Some(e)) = (&intersection, e_expected) {
        consistency.push(Verdict::new(
            "euler_contract",
            b.euler == e,
            format!("chern {} vs counting {e}", b.euler),
        ));
    }
    if let Some(a) = &automorphisms {
        let ones = a.stabilizer.iter().filter(|s| s.dim == 1).count();
        consistency.push(Verdict::new(
            "stabilizer_generic",
            a.majority_generic,
            format!("{ones} of {} seeds with dimension 1", a.stabilizer.len()),
        ));
    }

    Ok(FamilyReport {
        schema_version: SCHEMA_VERSION,
        preset: preset_of(&fam).map(|p| p.name().to_string()),
        weights: w.as_slice().to_vec(),
        degree,
        cy_flag: fam.cy_flag(),
        well_formed: w.is_well_formed(),
        strata: strata_entries,
        singular_curves: curve_entries,
        dim_sd: moduli.dim_sd,
        moduli: moduli.moduli,
        aut_dim: moduli.aut_dim,
        stabilizer_warning: moduli.stabilizer_warning,
        h21_y,
        h11_y,
        hodge_split: split,
        s_e_codim: codim,
        euler_expected: e_expected,
        intersection,
        automorphisms,
        consistency,
        unsupported_singularity: unsupported,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteRow {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub millis: u64,
}

fn genera(p: Preset) -> Result<Vec<u64>> {
    Ok(singular_curves(&p.family())?
        .iter()
        .map(|c| c.genus)
        .collect())
}

fn single_genus(p: Preset) -> Result<u64> {
    match genera(p)?.as_slice() {
        [g] => Ok(*g),
        other => Err(Error::Precondition(format!(
            "{} has curves of genera {other:?}",
            p.name()
        ))),
    }
}

const PAPER_PRESETS: [Preset; 3] = [Preset::X8, Preset::X12, Preset::X14];

pub type Check = fn() -> Result<(bool, String)>;

fn check_genera() -> Result<(bool, String)> {
    let g: Vec<u64> = PAPER_PRESETS
        .iter()
        .map(|&p| single_genus(p))
        .collect::<Result<_>>()?;
    Ok((g == [3, 2, 15], format!("genera {g:?}")))
}

fn check_moduli() -> Result<(bool, String)> {
    let fam = Preset::X14.family();
    let m = moduli_count(&fam).moduli;
    let diff = crate::hodge::h21_resolution(&fam)? - single_genus(Preset::X14)? as i64;
    Ok((
        m == 107 && diff == 107,
        format!("moduli {m}, h21 - g {diff}"),
    ))
}

fn check_flops() -> Result<(bool, String)> {
    let n: Vec<u64> = PAPER_PRESETS
        .iter()
        .map(|&p| Ok(flop_count(single_genus(p)?)?.count))
        .collect::<Result<_>>()?;
    Ok((n == [4, 2, 28], format!("flops {n:?}")))
}

fn check_picard() -> Result<(bool, String)> {
    let a = resolution_picard_rank(&Preset::X8.family())?;
    let b = resolution_picard_rank(&Preset::X12.family())?;
    Ok((a == 2 && b == 2, format!("h11 x8 {a}, x12 {b}")))
}

fn check_nef() -> Result<(bool, String)> {
    let a = nef_invariance_check(&ThreefoldModel::x8())?;
    let b = nef_invariance_check(&ThreefoldModel::x12())?;
    Ok((
        a.holds && b.holds,
        format!(
            "x8 kernel {:?} cubic {}, x12 kernel {:?} cubic {}",
            a.kernel, a.cubic_at_kernel, b.kernel, b.cubic_at_kernel
        ),
    ))
}

fn check_euler() -> Result<(bool, String)> {
    let e8 = euler_number(&ThreefoldModel::x8())?;
    let x8 = euler_expected(&Preset::X8.family())?;
    let e12 = euler_number(&ThreefoldModel::x12())?;
    let x12 = euler_expected(&Preset::X12.family())?;
    Ok((
        e8 == x8 && x8 == -168 && e12 == x12 && x12 == -252,
        format!("x8 {e8}/{x8}, x12 {e12}/{x12}"),
    ))
}

fn check_deformation() -> Result<(bool, String)> {
    let a = ThreefoldModel::x8();
    let b = x8_deformed_model();
    let (ca, cb) = (cubic_form(&a)?, cubic_form(&b)?);
    let (na, nb) = (chern_numbers(&a)?, chern_numbers(&b)?);
    // the top self-intersection of ξ on the ambient pins the sign convention
    let anchor = integrate(&a.ambient.xi().pow(4))?;
    Ok((
        ca == cb && na == nb && anchor == 2,
        format!(
            "cubic {ca:?}/{cb:?}, c2 ({}, {}), euler {}, ∫ξ^4 = {anchor}",
            na.c2_xi, na.c2_f, na.euler
        ),
    ))
}

fn check_stabilizers() -> Result<(bool, String)> {
    let seeds: Vec<u64> = (0..20).collect();
    let mut ok = true;
    let mut detail = Vec::new();
    for p in PAPER_PRESETS {
        let s = stabilizer_survey(&p.family(), &seeds, DEFAULT_COEFFICIENT_BOUND)?;
        let ones = s.iter().filter(|x| x.dim == 1).count();
        ok &= majority_generic(&s);
        detail.push(format!("{} {ones}/20", p.name()));
    }
    Ok((ok, detail.join(", ")))
}

fn check_involutions() -> Result<(bool, String)> {
    let v: Vec<bool> = PAPER_PRESETS
        .iter()
        .map(|&p| {
            let fam = p.family();
            involution_check(&random_member(&fam, 0, DEFAULT_COEFFICIENT_BOUND)?, &fam)
        })
        .collect::<Result<_>>()?;
    Ok((v == [false, true, true], format!("involution {v:?}")))
}

fn check_counting() -> Result<(bool, String)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut bad = 0;
    for _ in 0..500 {
        let n = rng.gen_range(2..=5);
        let w: Vec<u32> = (0..n).map(|_| rng.gen_range(1..=9)).collect();
        let d = rng.gen_range(0..=40);
        let w = WeightSystem::new(w)?;
        if graded_dim(&w, d) != enumerate_monomials(&w, d)?.len() as u64 {
            bad += 1;
        }
    }
    Ok((bad == 0, format!("{bad} mismatches in 500")))
}

fn check_quintic() -> Result<(bool, String)> {
    let fam = Preset::Quintic.family();
    let m = moduli_count(&fam).moduli;
    let h11 = resolution_picard_rank(&fam)?;
    let e = euler_expected(&fam)?;
    Ok((
        m == 101 && h11 == 1 && e == -200,
        format!("moduli {m}, h11 {h11}, euler {e}"),
    ))
}

fn check_betti() -> Result<(bool, String)> {
    let mut ok = true;
    let mut d = Vec::new();
    for p in PAPER_PRESETS {
        let h = hodge_split(&p.family())?;
        ok &= h.b3_y - h.b3_x == 2 * h.g_total as i64;
        d.push(format!("{} {}-{}", p.name(), h.b3_y, h.b3_x));
    }
    Ok((ok, d.join(", ")))
}

pub const SUITE: [(u32, &str, Check); 12] = [
    (1, "genus_triple", check_genera),
    (2, "moduli_count", check_moduli),
    (3, "flop_counts", check_flops),
    (4, "picard_rank", check_picard),
    (5, "nef_criterion", check_nef),
    (6, "euler_contract", check_euler),
    (7, "deformation_invariance", check_deformation),
    (8, "stabilizer_genericity", check_stabilizers),
    (9, "involution_dichotomy", check_involutions),
    (10, "counting_oracle", check_counting),
    (11, "classical_control", check_quintic),
    (12, "betti_additivity", check_betti),
];

/// Runs one row; errors count as failures.
pub fn run_check(id: u32) -> Option<SuiteRow> {
    let (id, name, f) = SUITE.into_iter().find(|r| r.0 == id)?;
    let t = Instant::now();
    let (passed, detail) = f().unwrap_or_else(|e| (false, format!("error: {e}")));
    Some(SuiteRow {
        id,
        name: name.to_string(),
        passed,
        detail,
        millis: t.elapsed().as_millis() as u64,
    })
}

pub fn consistency_suite() -> Vec<SuiteRow> {
    SUITE.iter().filter_map(|r| run_check(r.0)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fast() -> AnalyzeOptions {
        AnalyzeOptions {
            skip_automorphisms: true,
            ..AnalyzeOptions::default()
        }
    }

    #[test]
    fn seed_ranges() {
        assert_eq!(parse_seed_range("0..19").unwrap().len(), 20);
        assert_eq!(parse_seed_range("3..=4").unwrap(), vec![3, 4]);
        assert_eq!(parse_seed_range("7").unwrap(), vec![7]);
        assert!(parse_seed_range("4..3").is_err());
        assert!(parse_seed_range("a..3").is_err());
    }

    #[test]
    fn x8_report() {
        let r = analyze(&[1, 1, 2, 2, 2], 8, &fast()).unwrap();
        assert_eq!(r.preset.as_deref(), Some("x8"));
        assert_eq!(r.singular_curves.len(), 1);
        assert_eq!(r.singular_curves[0].genus, 3);
        assert_eq!(r.singular_curves[0].flop_count, Some(4));
        assert_eq!((r.moduli, r.h21_y, r.h11_y), (83, 86, Some(2)));
        let b = r.intersection.as_ref().unwrap();
        assert!(b.nef.holds);
        assert_eq!(b.euler, -168);
        assert!(r.all_consistent());
    }

    #[test]
    fn x14_has_no_intersection_block() {
        let r = analyze(&[1, 2, 2, 2, 7], 14, &fast()).unwrap();
        assert_eq!(r.singular_curves[0].genus, 15);
        assert_eq!((r.moduli, r.h21_y), (107, 122));
        assert!(r.intersection.is_none());
        assert!(r.all_consistent());
    }

    #[test]
    fn quintic_report() {
        let r = analyze(&[1, 1, 1, 1, 1], 5, &fast()).unwrap();
        assert!(r.singular_curves.is_empty());
        assert_eq!(
            (r.moduli, r.h11_y, r.euler_expected),
            (101, Some(1), Some(-200))
        );
    }

    #[test]
    fn unsupported_is_partial() {
        let r = analyze(&[1, 1, 1, 3, 3], 9, &AnalyzeOptions::default()).unwrap();
        assert!(r.unsupported_singularity.is_some());
        assert!(r.h11_y.is_none() && r.automorphisms.is_none());
        assert!(r.singular_curves.is_empty() && !r.strata.is_empty());
    }

    #[test]
    fn json_is_stable() {
        let opts = AnalyzeOptions {
            seeds: vec![0, 1],
            ..AnalyzeOptions::default()
        };
        let a = analyze(&[1, 1, 2, 2, 6], 12, &opts).unwrap().to_json();
        let b = analyze(&[1, 1, 2, 2, 6], 12, &opts).unwrap().to_json();
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["automorphisms"]["involution"], true);
        assert_eq!(v["automorphisms"]["forced_involution"], 4);
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn bad_input() {
        assert!(analyze(&[1], 3, &fast()).is_err());
        assert!(analyze(&[1, 1, 1], 0, &fast()).is_err());
    }
}
