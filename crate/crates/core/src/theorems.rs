//! The torsion-like submodule `T(a, M)`, the annihilator of the top local
//! cohomology module `H_a^{dim M}(M)`, and attached-prime sets, for
//! `M = R/I` with `I` and `a` monomial.
//!
//! Submodules of `R/I` are reported by their lifts to `R`: the ideal `T_I`
//! with `T(a, R/I) = T_I / I`. Since `R/T_I` is cyclic, its annihilator is
//! `T_I` itself.

use serde::Serialize;

use crate::cohdim::{cd_poly, cd_quotient, cd_restricted, lhv_check, CdValue};
use crate::decomposition::{
    associated_primes, intersect_all, krull_dim_height, primary_decomposition, Decomposition,
    MonomialPrime,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialIdeal};

/// `T(a, R/I)` computed two ways from one primary decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TRoutes {
    pub c: usize,
    /// `(I : b^∞)` with `b` the product of the primes of non-top cd.
    pub by_saturation: MonomialIdeal,
    /// Intersection of the primary components whose prime has top cd.
    pub by_components: MonomialIdeal,
}

/// `cd(a, R/p_j)` for every prime of `decomposition`.
pub fn component_cds(a: &MonomialIdeal, decomposition: &Decomposition, field: Field) -> Result<Vec<CdValue>> {
    decomposition
        .components
        .iter()
        .map(|pc| cd_restricted(a, &pc.rad_prime, field))
        .collect()
}

fn top_cd(a: &MonomialIdeal, ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    cd_quotient(a, ideal, field)?
        .finite()
        .ok_or_else(|| Error::Hypothesis("cd(a, M) has no support: all local cohomology vanishes".into()))
}

/// Lift of `H_b^0(R/I)` with `b = Π_{cd(a, R/p_j) ≠ c} p_j`.
pub fn t_lift_by_saturation(
    ideal: &MonomialIdeal,
    decomposition: &Decomposition,
    cds: &[CdValue],
    c: usize,
) -> Result<MonomialIdeal> {
    let mut b = MonomialIdeal::unit(ideal.nvars());
    for (pc, &cd) in decomposition.components.iter().zip(cds) {
        if cd != CdValue::Finite(c) {
            b = b.product(&pc.rad_prime.ideal())?;
        }
    }
    ideal.saturate(&b)
}

/// `∩_{cd(a, R/p_j) = c} q_j`, the unit ideal when no prime attains `c`.
pub fn t_lift_by_components(
    ideal: &MonomialIdeal,
    decomposition: &Decomposition,
    cds: &[CdValue],
    c: usize,
) -> Result<MonomialIdeal> {
    let top = decomposition
        .components
        .iter()
        .zip(cds)
        .filter(|(_, &cd)| cd == CdValue::Finite(c))
        .map(|(pc, _)| &pc.component);
    Ok(intersect_all(top)?.unwrap_or_else(|| MonomialIdeal::unit(ideal.nvars())))
}

/// Both routes to `T(a, R/I)` over a caller-supplied reduced primary
/// decomposition of `I`.
pub fn t_submodule_routes_with(
    a: &MonomialIdeal,
    ideal: &MonomialIdeal,
    decomposition: &Decomposition,
    field: Field,
) -> Result<TRoutes> {
    let c = top_cd(a, ideal, field)?;
    let cds = component_cds(a, decomposition, field)?;
    Ok(TRoutes {
        c,
        by_saturation: t_lift_by_saturation(ideal, decomposition, &cds, c)?,
        by_components: t_lift_by_components(ideal, decomposition, &cds, c)?,
    })
}

pub fn t_submodule_routes(a: &MonomialIdeal, ideal: &MonomialIdeal, field: Field) -> Result<TRoutes> {
    let c = top_cd(a, ideal, field)?;
    let decomposition = primary_decomposition(ideal)?;
    let cds = component_cds(a, &decomposition, field)?;
    Ok(TRoutes {
        c,
        by_saturation: t_lift_by_saturation(ideal, &decomposition, &cds, c)?,
        by_components: t_lift_by_components(ideal, &decomposition, &cds, c)?,
    })
}

/// The ideal `T_I` with `T(a, R/I) = T_I / I`: the largest submodule of
/// `R/I` whose cohomological dimension drops below `cd(a, R/I)`.
pub fn t_submodule(a: &MonomialIdeal, ideal: &MonomialIdeal, field: Field) -> Result<MonomialIdeal> {
    let routes = t_submodule_routes(a, ideal, field)?;
    if routes.by_saturation != routes.by_components {
        return Err(Error::Invariant(format!(
            "T(a, M) routes disagree: saturation {:?} vs components {:?}",
            routes.by_saturation, routes.by_components
        )));
    }
    Ok(routes.by_saturation)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopAnnReport {
    pub c: CdValue,
    pub dim_m: usize,
    /// `T_I` with `T(a, M) = T_I / I`.
    pub t_lift: MonomialIdeal,
    /// `Ann_R H_a^{dim M}(M)`.
    pub ann: MonomialIdeal,
    /// Whether `cd(a, M) = dim M`.
    pub hypothesis_met: bool,
}

/// Annihilator of `H_a^{dim M}(M)` for `M = R/I`.
///
/// When `cd(a, M) = dim M` this is `Ann(M / T(a, M)) = T_I`. Otherwise the
/// top module vanishes and the annihilator is the unit ideal.
pub fn ann_top(a: &MonomialIdeal, ideal: &MonomialIdeal, field: Field) -> Result<TopAnnReport> {
    if ideal.is_unit() {
        return Err(Error::DecompositionUndefined("M = R/I is zero for the unit ideal"));
    }
    let dim_m = krull_dim_height(ideal)?.dim;
    let c = cd_quotient(a, ideal, field)?;
    let unit = MonomialIdeal::unit(ideal.nvars());
    let Some(cv) = c.finite() else {
        return Ok(TopAnnReport { c, dim_m, t_lift: unit.clone(), ann: unit, hypothesis_met: false });
    };
    let t_lift = t_submodule(a, ideal, field)?;
    if cv != dim_m {
        return Ok(TopAnnReport { c, dim_m, t_lift, ann: unit, hypothesis_met: false });
    }
    // some minimal prime attains cd = dim, so T_I is a proper ideal
    if t_lift.is_unit() {
        return Err(Error::Invariant("no primary component attains cd = dim M".into()));
    }
    Ok(TopAnnReport { c, dim_m, ann: t_lift.clone(), t_lift, hypothesis_met: true })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AttMode {
    /// The full attached-prime set, known to be finite.
    Exact,
    /// Only the monomial primes passing a membership test.
    MembershipOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttSet {
    pub primes: Vec<MonomialPrime>,
    pub mode: AttMode,
}

/// `Att H_a^d(M) = {p ∈ mAss M : cd(a, R/p) = d}` with `d = dim M`.
pub fn att_top(a: &MonomialIdeal, ideal: &MonomialIdeal, field: Field) -> Result<AttSet> {
    let d = krull_dim_height(ideal)?.dim;
    let mut primes = Vec::new();
    for p in associated_primes(ideal)?.mass {
        if cd_restricted(a, &p, field)? == CdValue::Finite(d) {
            primes.push(p);
        }
    }
    Ok(AttSet { primes, mode: AttMode::Exact })
}

/// Necessary condition for `p ∈ Att H_a^c(M)`, `c = cd(a, M)`:
/// `p ∈ Supp M` and `cd(a, R/p) = c`. A `false` certifies non-membership.
pub fn att_upper_check(
    a: &MonomialIdeal,
    ideal: &MonomialIdeal,
    p: &MonomialPrime,
    field: Field,
) -> Result<bool> {
    let c = top_cd(a, ideal, field)?;
    Ok(p.contains_ideal(ideal) && cd_restricted(a, p, field)? == CdValue::Finite(c))
}

/// All monomial primes passing [`att_upper_check`].
pub fn att_upper_bound(a: &MonomialIdeal, ideal: &MonomialIdeal, field: Field) -> Result<Vec<MonomialPrime>> {
    let mut out = Vec::new();
    for p in MonomialPrime::all(ideal.nvars()) {
        if att_upper_check(a, ideal, &p, field)? {
            out.push(p);
        }
    }
    Ok(out)
}

/// Monomial primes `p` with `cd(a, R/p) = cd(a, R) = dim R/p`; each of them
/// is attached to `H_a^{cd(a,R)}(R)`.
pub fn att_lower_bound(a: &MonomialIdeal, field: Field) -> Result<Vec<MonomialPrime>> {
    let n = a.nvars();
    let c = top_cd(a, &MonomialIdeal::zero(n), field)?;
    let mut out = Vec::new();
    for p in MonomialPrime::all(n) {
        if p.dim_quotient() == c && cd_restricted(a, &p, field)? == CdValue::Finite(c) {
            out.push(p);
        }
    }
    Ok(out)
}

fn require_top_vanishing(a: &MonomialIdeal, field: Field) -> Result<usize> {
    let n = a.nvars();
    if n == 0 {
        return Err(Error::Hypothesis("the ring has no variables".into()));
    }
    if cd_poly(a, field)? == CdValue::Finite(n) {
        return Err(Error::Hypothesis(format!("H^{n}_a(R) ≠ 0 (cd(a, R) = dim R = {n})")));
    }
    Ok(n)
}

/// Membership of `p` in `Att H_a^{n-1}(R)` when `H_a^n(R) = 0`, decided by
/// `cd(a, R/p) = n - 1`.
pub fn att_codim1_membership(a: &MonomialIdeal, p: &MonomialPrime, field: Field) -> Result<bool> {
    let n = require_top_vanishing(a, field)?;
    Ok(cd_restricted(a, p, field)? == CdValue::Finite(n - 1))
}

/// Monomial primes attached to `H_a^{n-1}(R)` when `dim R/a = 1` and
/// `H_a^n(R) = 0`: the height-one primes `p` with `√(a + p) = m`, together
/// with `(0)`, the unique top-dimensional associated prime of the domain `R`.
pub fn att_codim1_onedim(a: &MonomialIdeal, field: Field) -> Result<AttSet> {
    let dim = krull_dim_height(a)
        .map_err(|_| Error::Hypothesis("dim R/a is undefined for the unit ideal".into()))?
        .dim;
    if dim != 1 {
        return Err(Error::Hypothesis(format!("dim R/a = {dim}, expected 1")));
    }
    let n = require_top_vanishing(a, field)?;
    let mut primes = vec![MonomialPrime::zero(n)];
    for p in MonomialPrime::all(n) {
        if p.height() == 1 && lhv_check(a, &p)? {
            primes.push(p);
        }
    }
    for p in &primes {
        if !att_codim1_membership(a, p, field)? {
            return Err(Error::Invariant(format!(
                "{p:?} passes the radical criterion but cd(a, R/p) ≠ dim R - 1"
            )));
        }
    }
    primes.sort();
    Ok(AttSet { primes, mode: AttMode::MembershipOnly })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MultCriterion {
    /// `x · H_a^c(M) = 0`.
    pub kills: bool,
    /// `cd(a, xM) < c`, with `xM ≅ R/(I : x)`.
    pub cd_drop: bool,
}

/// Evaluates both sides of `H_a^c(xM) = 0 ⟺ x H_a^c(M) = 0` under `cd(a, M) = dim M`.
pub fn mult_criterion(
    a: &MonomialIdeal,
    ideal: &MonomialIdeal,
    x: &Monomial,
    field: Field,
) -> Result<MultCriterion> {
    let report = ann_top(a, ideal, field)?;
    if !report.hypothesis_met {
        return Err(Error::Hypothesis("cd < dim: top cohomology vanishes".into()));
    }
    let kills = report.ann.contains(x);
    let cd_drop = cd_quotient(a, &ideal.colon_monomial(x)?, field)? < report.c;
    Ok(MultCriterion { kills, cd_drop })
}

/// Consistency report relating the annihilator to associated primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnnChecks {
    /// `Ann H_a^c(M) = Ann M`, i.e. `T_I = I`.
    pub ann_equals_ann_m: bool,
    /// Every associated prime of `M` has `cd(a, R/p) = c`.
    pub all_associated_top: bool,
    pub radical_ann: MonomialIdeal,
    /// `∩ {p ∈ Ass M : cd(a, R/p) = c}`.
    pub top_associated_intersection: MonomialIdeal,
    /// `√Ann = ∩ {p ∈ Ass M : cd(a, R/p) = c}`.
    pub radical_identity: bool,
    /// `V(Ann) = Supp(M/T)`, compared as radicals.
    pub support_identity: bool,
}

impl AnnChecks {
    /// The annihilator equals `Ann M` exactly when all associated primes have top cd.
    pub fn equivalence_holds(&self) -> bool {
        self.ann_equals_ann_m == self.all_associated_top
    }

    pub fn all_hold(&self) -> bool {
        self.equivalence_holds() && self.radical_identity && self.support_identity
    }
}

pub fn ann_checks(a: &MonomialIdeal, ideal: &MonomialIdeal, field: Field) -> Result<AnnChecks> {
    let report = ann_top(a, ideal, field)?;
    if !report.hypothesis_met {
        return Err(Error::Hypothesis("cd < dim: top cohomology vanishes".into()));
    }
    let c = report.c;
    let decomposition = primary_decomposition(ideal)?;
    let cds = component_cds(a, &decomposition, field)?;
    let all_associated_top = cds.iter().all(|&cd| cd == c);
    let top_ideals: Vec<MonomialIdeal> = decomposition
        .components
        .iter()
        .zip(&cds)
        .filter(|(_, &cd)| cd == c)
        .map(|(pc, _)| pc.rad_prime.ideal())
        .collect();
    let top_associated_intersection = intersect_all(&top_ideals)?
        .ok_or_else(|| Error::Invariant("no associated prime attains cd = dim M".into()))?;
    let radical_ann = report.ann.radical();
    Ok(AnnChecks {
        ann_equals_ann_m: report.ann == *ideal,
        all_associated_top,
        radical_identity: radical_ann == top_associated_intersection,
        support_identity: radical_ann == report.t_lift.radical(),
        radical_ann,
        top_associated_intersection,
    })
}
