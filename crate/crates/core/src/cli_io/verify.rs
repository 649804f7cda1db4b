//! Randomized cross-checks of the whole pipeline on seeded instances.

use rand::Rng;
use serde::Serialize;

use super::parse::{format_ideal, format_monomial};
use super::random::IdealSampler;
use crate::cohdim::{cd_poly, cd_quotient, cd_restricted, cech_cd_oracle, lhv_check, CdValue, OracleOptions};
use crate::decomposition::{intersect_all, krull_dim_height, MonomialPrime};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::ring::RingSpec;
use crate::theorems::{
    ann_checks, ann_top, att_codim1_membership, att_codim1_onedim, att_top, mult_criterion,
    t_submodule_routes,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub count: usize,
    pub max_vars: usize,
    pub max_gens: usize,
    pub field: Field,
    pub box_depth: u32,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { seed: 1, count: 10, max_vars: 6, max_gens: 8, field: Field::Rational, box_depth: 1 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    pub iteration: usize,
    pub ring: Vec<String>,
    pub a: Vec<String>,
    pub i: Vec<String>,
    pub x: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub count: usize,
    pub field: String,
    pub max_vars: usize,
    pub max_gens: usize,
    pub checks: Vec<CheckTally>,
    pub first_failure: Option<Counterexample>,
    pub ok: bool,
}

impl VerifyReport {
    pub fn summary(&self) -> String {
        let passed: usize = self.checks.iter().map(|c| c.passed).sum();
        let failed: usize = self.checks.iter().map(|c| c.failed).sum();
        let skipped: usize = self.checks.iter().map(|c| c.skipped).sum();
        format!(
            "verify seed {} count {}: {passed} passed, {failed} failed, {skipped} skipped",
            self.seed, self.count
        )
    }
}

/// One random instance: ideals `a`, `I` and a monomial `x` in `n` variables.
#[derive(Clone, Debug)]
struct Instance {
    n: usize,
    a: MonomialIdeal,
    i: MonomialIdeal,
    x: Monomial,
}

enum Verdict {
    Pass,
    Skip,
    Fail(String),
}

struct Env {
    field: Field,
    oracle: OracleOptions,
}

type CheckFn = fn(&Instance, &Env) -> Result<Verdict>;

fn expect(cond: bool, detail: impl FnOnce() -> String) -> Verdict {
    if cond {
        Verdict::Pass
    } else {
        Verdict::Fail(detail())
    }
}

/// `cd(a, R) = pd(R/√a)` agrees with the Čech oracle over `QQ`, `GF(2)` and
/// the configured field.
fn check_cd_oracle(inst: &Instance, env: &Env) -> Result<Verdict> {
    let zero = MonomialIdeal::zero(inst.n);
    let a = inst.a.radical();
    let mut fields = vec![Field::Rational, Field::Prime(2)];
    if !fields.contains(&env.field) {
        fields.push(env.field);
    }
    for field in fields {
        let hochster = cd_poly(&a, field)?;
        let oracle = cech_cd_oracle(&a, &zero, field, &env.oracle)?;
        if hochster != oracle {
            return Ok(Verdict::Fail(format!("over {field}: cd_poly {hochster} vs oracle {oracle}")));
        }
    }
    Ok(Verdict::Pass)
}

fn check_cd_quotient_oracle(inst: &Instance, env: &Env) -> Result<Verdict> {
    let c = cd_quotient(&inst.a, &inst.i, env.field)?;
    let oracle = cech_cd_oracle(&inst.a.radical(), &inst.i.radical(), env.field, &env.oracle)?;
    Ok(expect(c == oracle, || format!("cd_quotient {c} vs oracle {oracle}")))
}

fn check_t_routes(inst: &Instance, env: &Env) -> Result<Verdict> {
    let r = t_submodule_routes(&inst.a, &inst.i, env.field)?;
    Ok(expect(r.by_saturation == r.by_components, || {
        format!("saturation {:?} vs components {:?}", r.by_saturation, r.by_components)
    }))
}

fn radical_ann_vs_att(a: &MonomialIdeal, i: &MonomialIdeal, field: Field) -> Result<Verdict> {
    let report = ann_top(a, i, field)?;
    if !report.hypothesis_met {
        return Ok(Verdict::Skip);
    }
    let att = att_top(a, i, field)?;
    let ideals: Vec<MonomialIdeal> = att.primes.iter().map(MonomialPrime::ideal).collect();
    let Some(meet) = intersect_all(&ideals)? else {
        return Ok(Verdict::Fail("attached set is empty although cd = dim".into()));
    };
    let rad = report.ann.radical();
    Ok(expect(rad == meet, || format!("rad(ann) {rad:?} vs ∩ att {meet:?}")))
}

/// `√Ann H^d = ∩ Att H^d`, for `(a, I)` and for `(m, I)`.
fn check_radical_ann(inst: &Instance, env: &Env) -> Result<Verdict> {
    let first = radical_ann_vs_att(&inst.a, &inst.i, env.field)?;
    if let Verdict::Fail(_) = first {
        return Ok(first);
    }
    radical_ann_vs_att(&MonomialIdeal::maximal(inst.n), &inst.i, env.field)
}

fn check_ann_checks(inst: &Instance, env: &Env) -> Result<Verdict> {
    for a in [&inst.a, &MonomialIdeal::maximal(inst.n)] {
        if !ann_top(a, &inst.i, env.field)?.hypothesis_met {
            continue;
        }
        let checks = ann_checks(a, &inst.i, env.field)?;
        if !checks.all_hold() {
            return Ok(Verdict::Fail(format!("{checks:?}")));
        }
    }
    Ok(Verdict::Pass)
}

/// `√(a + p) = m ⟺ cd(a, R/p) = dim R/p` for every monomial prime.
fn check_lhv(inst: &Instance, env: &Env) -> Result<Verdict> {
    for p in MonomialPrime::all(inst.n) {
        let lhv = lhv_check(&inst.a, &p)?;
        let cd = cd_restricted(&inst.a, &p, env.field)?;
        if lhv != (cd == CdValue::Finite(p.dim_quotient())) {
            return Ok(Verdict::Fail(format!("prime {p:?}: lhv {lhv}, cd {cd}")));
        }
    }
    Ok(Verdict::Pass)
}

/// Membership by `cd(a, R/p) = n - 1` agrees with the radical-criterion
/// enumeration on every monomial prime. Uses `a` itself when it is
/// one-dimensional and the companion ideal stored in `i` otherwise.
fn check_codim1(inst: &Instance, env: &Env) -> Result<Verdict> {
    let a = &inst.a;
    if krull_dim_height(a)?.dim != 1 || cd_poly(a, env.field)? == CdValue::Finite(inst.n) {
        return Ok(Verdict::Skip);
    }
    let set = att_codim1_onedim(a, env.field)?;
    for p in MonomialPrime::all(inst.n) {
        let member = att_codim1_membership(a, &p, env.field)?;
        if member != set.primes.contains(&p) {
            return Ok(Verdict::Fail(format!("prime {p:?}: membership {member}")));
        }
    }
    Ok(Verdict::Pass)
}

/// `x H^c(M) = 0 ⟺ cd(a, xM) < c` under `cd(a, M) = dim M`, for `(a, I)` and `(m, I)`.
fn check_mult(inst: &Instance, env: &Env) -> Result<Verdict> {
    let mut ran = false;
    for a in [&inst.a, &MonomialIdeal::maximal(inst.n)] {
        if !ann_top(a, &inst.i, env.field)?.hypothesis_met {
            continue;
        }
        ran = true;
        let mc = mult_criterion(a, &inst.i, &inst.x, env.field)?;
        if mc.kills != mc.cd_drop {
            return Ok(Verdict::Fail(format!("a = {a:?}: kills {} but cd_drop {}", mc.kills, mc.cd_drop)));
        }
    }
    Ok(if ran { Verdict::Pass } else { Verdict::Skip })
}

const CHECKS: [(&str, CheckFn); 8] = [
    ("cd-oracle", check_cd_oracle),
    ("cd-quotient-oracle", check_cd_quotient_oracle),
    ("t-routes", check_t_routes),
    ("radical-ann-att", check_radical_ann),
    ("ann-checks", check_ann_checks),
    ("lhv", check_lhv),
    ("codim1-consistency", check_codim1),
    ("mult-criterion", check_mult),
];

fn evaluate(check: CheckFn, inst: &Instance, env: &Env) -> Verdict {
    match check(inst, env) {
        Ok(v) => v,
        Err(e) => Verdict::Fail(format!("error: {e}")),
    }
}

/// Greedily drops generators of `a`, then of `I`, while the check still fails.
fn minimize(check: CheckFn, inst: &Instance, env: &Env) -> (Instance, String) {
    let fails = |cand: &Instance| match evaluate(check, cand, env) {
        Verdict::Fail(d) => Some(d),
        _ => None,
    };
    let mut best = inst.clone();
    let mut detail = fails(&best).unwrap_or_default();
    loop {
        let mut improved = false;
        for which in 0..2 {
            let gens = if which == 0 { best.a.gens().to_vec() } else { best.i.gens().to_vec() };
            for k in 0..gens.len() {
                let rest: Vec<Monomial> = gens.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, g)| g.clone()).collect();
                let Ok(smaller) = MonomialIdeal::new(best.n, rest) else { continue };
                let mut cand = best.clone();
                if which == 0 {
                    cand.a = smaller;
                } else {
                    cand.i = smaller;
                }
                if let Some(d) = fails(&cand) {
                    best = cand;
                    detail = d;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            return (best, detail);
        }
    }
}

fn ring_names(n: usize) -> Vec<String> {
    const LETTERS: [&str; 6] = ["x", "y", "z", "u", "v", "w"];
    if n <= LETTERS.len() {
        LETTERS[..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|k| format!("x{k}")).collect()
    }
}

pub fn verify(config: &VerifyConfig) -> Result<VerifyReport> {
    if config.count == 0 {
        return Err(Error::Usage("verify needs count >= 1".into()));
    }
    if config.max_vars < 3 || config.max_gens < 2 {
        return Err(Error::Usage("verify needs max_vars >= 3 and max_gens >= 2".into()));
    }
    if config.max_vars > 10 {
        return Err(Error::SizeLimit(format!("verify max_vars {} (limit 10)", config.max_vars)));
    }
    let env = Env {
        field: config.field,
        oracle: OracleOptions { box_depth: config.box_depth, max_generators: config.max_gens.max(12) },
    };
    let mut sampler = IdealSampler::new(config.seed);
    let mut tallies: Vec<CheckTally> = CHECKS
        .iter()
        .map(|&(name, _)| CheckTally { name, passed: 0, failed: 0, skipped: 0 })
        .collect();
    let mut first_failure = None;

    for iteration in 0..config.count {
        let n = sampler.rng().gen_range(3..=config.max_vars);
        let a = sampler.squarefree(n, config.max_gens);
        let i = if iteration % 2 == 0 {
            sampler.squarefree(n, config.max_gens)
        } else {
            sampler.irreducible_intersection(n, 3, 2)
        };
        let x = sampler.monomial(n, 2);
        let main = Instance { n, a, i, x };
        let onedim = Instance {
            n,
            a: sampler.one_dimensional(n),
            i: MonomialIdeal::zero(n),
            x: Monomial::one(n),
        };

        for (tally, &(name, check)) in tallies.iter_mut().zip(CHECKS.iter()) {
            let instances: Vec<&Instance> = if name == "codim1-consistency" { vec![&main, &onedim] } else { vec![&main] };
            for inst in instances {
                match evaluate(check, inst, &env) {
                    Verdict::Pass => tally.passed += 1,
                    Verdict::Skip => tally.skipped += 1,
                    Verdict::Fail(_) => {
                        tally.failed += 1;
                        if first_failure.is_none() {
                            let (small, detail) = minimize(check, inst, &env);
                            let ring = RingSpec::new(ring_names(small.n), config.field)?;
                            first_failure = Some(Counterexample {
                                check: name,
                                iteration,
                                a: format_ideal(&small.a, &ring),
                                i: format_ideal(&small.i, &ring),
                                x: format_monomial(&small.x, &ring),
                                ring: ring.vars().to_vec(),
                                detail,
                            });
                        }
                    }
                }
            }
        }
    }

    Ok(VerifyReport {
        seed: config.seed,
        count: config.count,
        field: config.field.to_string(),
        max_vars: config.max_vars,
        max_gens: config.max_gens,
        ok: first_failure.is_none(),
        checks: tallies,
        first_failure,
    })
}
