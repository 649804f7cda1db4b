//! JSON request/report schema and command dispatch.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::parse::{
    format_ideal, format_monomial, format_prime, format_varset, parse_ideal, parse_monomial, parse_prime,
};
use super::verify::{verify, VerifyConfig};
use crate::cohdim::{
    betti_table, cd_poly, cd_quotient, cd_restricted, cech_cd_oracle, lhv_check, OracleOptions,
};
use crate::decomposition::{
    associated_primes, irreducible_decomposition, krull_dim_height, primary_decomposition,
    MonomialPrime,
};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::MonomialIdeal;
use crate::ring::RingSpec;
use crate::theorems::{
    ann_checks, ann_top, att_codim1_membership, att_codim1_onedim, att_top, att_upper_check,
    mult_criterion, t_submodule_routes, AttSet,
};

/// Version of the request and report schemas.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Decompose,
    Cd,
    Dim,
    AnnTop,
    TSubmodule,
    AttTop,
    AttTest,
    AttOnedim,
    Lhv,
    Betti,
    Verify,
}

impl Command {
    pub const ALL: [Command; 11] = [
        Command::Decompose,
        Command::Cd,
        Command::Dim,
        Command::AnnTop,
        Command::TSubmodule,
        Command::AttTop,
        Command::AttTest,
        Command::AttOnedim,
        Command::Lhv,
        Command::Betti,
        Command::Verify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Decompose => "decompose",
            Command::Cd => "cd",
            Command::Dim => "dim",
            Command::AnnTop => "ann-top",
            Command::TSubmodule => "t-submodule",
            Command::AttTop => "att-top",
            Command::AttTest => "att-test",
            Command::AttOnedim => "att-onedim",
            Command::Lhv => "lhv",
            Command::Betti => "betti",
            Command::Verify => "verify",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown command {s:?}")))
    }
}

/// Size limits. Unset fields take command-dependent defaults: 16 variables
/// and 12 oracle generators for ordinary commands, 6 variables and 8
/// generators for the ideals `verify` generates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Limits {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_vars: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_gens: Option<usize>,
}

fn default_box_depth() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Request {
    pub command: Command,
    /// Variable names, in order. Ignored by `verify`.
    #[serde(default)]
    pub ring: Vec<String>,
    #[serde(default, rename = "char")]
    pub characteristic: u64,
    #[serde(default, alias = "a")]
    pub ideal_a: Vec<String>,
    #[serde(default, alias = "i")]
    pub ideal_i: Vec<String>,
    #[serde(default)]
    pub prime: Option<Vec<String>>,
    #[serde(default, alias = "x")]
    pub monomial_x: Option<String>,
    #[serde(default = "default_box_depth")]
    pub box_depth: u32,
    #[serde(default)]
    pub limits: Limits,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub count: Option<usize>,
    /// Also run the Čech oracle where it applies (`cd`).
    #[serde(default)]
    pub oracle: bool,
    /// Add wall-clock timing to the report; this makes output non-reproducible.
    #[serde(default)]
    pub timing: bool,
}

impl Request {
    pub fn new(command: Command, ring: &[&str]) -> Self {
        Request {
            command,
            ring: ring.iter().map(|s| s.to_string()).collect(),
            characteristic: 0,
            ideal_a: Vec::new(),
            ideal_i: Vec::new(),
            prime: None,
            monomial_x: None,
            box_depth: 1,
            limits: Limits::default(),
            seed: 0,
            count: None,
            oracle: false,
            timing: false,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: format!("invalid request JSON: {e}"),
        })
    }
}

/// Outcome of [`run`]: a JSON document, a one-line summary and an exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub value: Value,
    pub summary: String,
    pub exit_code: i32,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.value).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn result(&self) -> Option<&Value> {
        self.value.get("result")
    }
}

/// Executes a request. Failures become error reports with a nonzero exit code.
pub fn run(request: &Request) -> Report {
    let started = Instant::now();
    let outcome = dispatch(request);
    let mut value = json!({
        "version": SCHEMA_VERSION,
        "tool": concat!("topann ", env!("CARGO_PKG_VERSION")),
        "command": request.command.name(),
        "ring": request.ring,
        "char": request.characteristic,
    });
    let (summary, exit_code) = match outcome {
        Ok(out) => {
            value["ok"] = json!(out.exit_code == 0);
            value["result"] = out.result;
            (out.summary, out.exit_code)
        }
        Err(e) => {
            value["ok"] = json!(false);
            value["error"] = json!({ "kind": e.kind(), "message": e.to_string() });
            (format!("error: {e}"), e.exit_code())
        }
    };
    if request.timing {
        value["timing_ms"] = json!(started.elapsed().as_millis() as u64);
    }
    Report { value, summary, exit_code }
}

struct Outcome {
    result: Value,
    summary: String,
    exit_code: i32,
}

impl Outcome {
    fn ok(result: Value, summary: String) -> Self {
        Outcome { result, summary, exit_code: 0 }
    }
}

struct Ctx<'r> {
    req: &'r Request,
    ring: RingSpec,
    field: Field,
    oracle: OracleOptions,
}

impl Ctx<'_> {
    fn ideal_a(&self) -> Result<MonomialIdeal> {
        if self.req.ideal_a.is_empty() {
            return Err(Error::Usage(format!("command {} requires the ideal a", self.req.command)));
        }
        parse_ideal(&self.req.ideal_a, &self.ring)
    }

    fn ideal_i(&self) -> Result<MonomialIdeal> {
        parse_ideal(&self.req.ideal_i, &self.ring)
    }

    fn prime(&self) -> Result<MonomialPrime> {
        let names = self
            .req
            .prime
            .as_ref()
            .ok_or_else(|| Error::Usage(format!("command {} requires a prime", self.req.command)))?;
        parse_prime(names, &self.ring)
    }

    fn ideal(&self, i: &MonomialIdeal) -> Value {
        json!(format_ideal(i, &self.ring))
    }

    fn prime_json(&self, p: &MonomialPrime) -> Value {
        json!(format_prime(p, &self.ring))
    }

    fn primes(&self, ps: &[MonomialPrime]) -> Value {
        Value::Array(ps.iter().map(|p| self.prime_json(p)).collect())
    }

    fn att_set(&self, s: &AttSet) -> Value {
        json!({ "primes": self.primes(&s.primes), "mode": s.mode })
    }
}

fn dispatch(req: &Request) -> Result<Outcome> {
    let field = Field::from_char(req.characteristic)?;
    // verify samples its own rings
    if req.command == Command::Verify {
        return run_verify(req, field);
    }
    let ring = RingSpec::new(req.ring.iter().cloned(), field)?;
    let max_vars = req.limits.max_vars.unwrap_or(16);
    if ring.nvars() > max_vars {
        return Err(Error::SizeLimit(format!("{} variables (limit {max_vars})", ring.nvars())));
    }
    let oracle = OracleOptions {
        box_depth: req.box_depth,
        max_generators: req.limits.max_gens.unwrap_or(OracleOptions::default().max_generators),
    };
    let cx = Ctx { req, ring, field, oracle };
    match req.command {
        Command::Decompose => decompose(&cx),
        Command::Cd => cd(&cx),
        Command::Dim => dim(&cx),
        Command::AnnTop => ann_top_cmd(&cx),
        Command::TSubmodule => t_submodule_cmd(&cx),
        Command::AttTop => att_top_cmd(&cx),
        Command::AttTest => att_test(&cx),
        Command::AttOnedim => att_onedim(&cx),
        Command::Lhv => lhv(&cx),
        Command::Betti => betti(&cx),
        Command::Verify => unreachable!(),
    }
}

fn decompose(cx: &Ctx) -> Result<Outcome> {
    let i = cx.ideal_i()?;
    let decomposition = primary_decomposition(&i)?;
    let irreducible = if i.is_zero() { vec![i.clone()] } else { irreducible_decomposition(&i)? };
    let ap = associated_primes(&i)?;
    let dh = krull_dim_height(&i)?;
    let components: Vec<Value> = decomposition
        .components
        .iter()
        .map(|c| json!({ "component": cx.ideal(&c.component), "prime": cx.prime_json(&c.rad_prime) }))
        .collect();
    let summary = format!("{} primary components, dim {}", components.len(), dh.dim);
    Ok(Outcome::ok(
        json!({
            "components": components,
            "irreducible": irreducible.iter().map(|c| cx.ideal(c)).collect::<Vec<_>>(),
            "ass": cx.primes(&ap.ass),
            "mass": cx.primes(&ap.mass),
            "assh": cx.primes(&ap.assh),
            "dim": dh.dim,
            "height": dh.height,
        }),
        summary,
    ))
}

fn cd(cx: &Ctx) -> Result<Outcome> {
    let a = cx.ideal_a()?;
    let i = cx.ideal_i()?;
    let c = cd_quotient(&a, &i, cx.field)?;
    let mut result = json!({ "cd": c });
    if !i.is_unit() {
        result["dim"] = json!(krull_dim_height(&i)?.dim);
    }
    if cx.req.oracle {
        let o = cech_cd_oracle(&a.radical(), &i.radical(), cx.field, &cx.oracle)?;
        result["oracle"] = json!(o);
        if o != c {
            return Err(Error::Invariant(format!("cd {c} disagrees with the Čech oracle {o}")));
        }
    }
    Ok(Outcome::ok(result, format!("cd(a, R/I) = {c}")))
}

fn dim(cx: &Ctx) -> Result<Outcome> {
    let i = cx.ideal_i()?;
    let dh = krull_dim_height(&i)?;
    Ok(Outcome::ok(
        json!({ "dim": dh.dim, "height": dh.height }),
        format!("dim R/I = {}, height I = {}", dh.dim, dh.height),
    ))
}

fn ann_top_cmd(cx: &Ctx) -> Result<Outcome> {
    let a = cx.ideal_a()?;
    let i = cx.ideal_i()?;
    let report = ann_top(&a, &i, cx.field)?;
    let mut result = json!({
        "c": report.c,
        "dim": report.dim_m,
        "hypothesis_met": report.hypothesis_met,
        "t_lift": cx.ideal(&report.t_lift),
        "ann": cx.ideal(&report.ann),
    });
    if !report.hypothesis_met {
        result["note"] = json!("cd < dim: top cohomology vanishes");
        return Ok(Outcome::ok(result, "cd < dim: top cohomology vanishes, Ann = (1)".into()));
    }
    let checks = ann_checks(&a, &i, cx.field)?;
    result["checks"] = json!({
        "ann_equals_ann_m": checks.ann_equals_ann_m,
        "all_associated_top": checks.all_associated_top,
        "equivalence": checks.equivalence_holds(),
        "radical_ann": cx.ideal(&checks.radical_ann),
        "top_associated_intersection": cx.ideal(&checks.top_associated_intersection),
        "radical_identity": checks.radical_identity,
        "support_identity": checks.support_identity,
    });
    if let Some(x) = &cx.req.monomial_x {
        let x = parse_monomial(x, &cx.ring)?;
        let mc = mult_criterion(&a, &i, &x, cx.field)?;
        result["mult"] = json!({
            "x": format_monomial(&x, &cx.ring),
            "kills": mc.kills,
            "cd_drop": mc.cd_drop,
            "consistent": mc.kills == mc.cd_drop,
        });
    }
    let summary = format!("Ann H^{}(M) = ({})", report.dim_m, format_ideal(&report.ann, &cx.ring).join(", "));
    if !checks.all_hold() {
        return Err(Error::Invariant("annihilator consistency checks failed".into()));
    }
    Ok(Outcome::ok(result, summary))
}

fn t_submodule_cmd(cx: &Ctx) -> Result<Outcome> {
    let a = cx.ideal_a()?;
    let i = cx.ideal_i()?;
    let routes = t_submodule_routes(&a, &i, cx.field)?;
    let agree = routes.by_saturation == routes.by_components;
    let result = json!({
        "c": routes.c,
        "t_lift": cx.ideal(&routes.by_saturation),
        "route_saturation": cx.ideal(&routes.by_saturation),
        "route_components": cx.ideal(&routes.by_components),
        "routes_agree": agree,
    });
    if !agree {
        return Err(Error::Invariant("T(a, M) routes disagree".into()));
    }
    let summary = format!("T_I = ({})", format_ideal(&routes.by_saturation, &cx.ring).join(", "));
    Ok(Outcome::ok(result, summary))
}

fn att_top_cmd(cx: &Ctx) -> Result<Outcome> {
    let a = cx.ideal_a()?;
    let i = cx.ideal_i()?;
    let set = att_top(&a, &i, cx.field)?;
    let mut result = cx.att_set(&set);
    result["dim"] = json!(krull_dim_height(&i)?.dim);
    Ok(Outcome::ok(result, format!("{} attached primes (exact)", set.primes.len())))
}

fn att_test(cx: &Ctx) -> Result<Outcome> {
    let a = cx.ideal_a()?;
    let i = cx.ideal_i()?;
    let p = cx.prime()?;
    let c = cd_quotient(&a, &i, cx.field)?;
    let dim = krull_dim_height(&i)?.dim;
    let upper = att_upper_check(&a, &i, &p, cx.field)?;
    let mut result = json!({
        "prime": cx.prime_json(&p),
        "c": c,
        "dim": dim,
        "in_support": p.contains_ideal(&i),
        "cd_restricted": cd_restricted(&a, &p, cx.field)?,
        "upper_bound": upper,
    });
    if c == crate::cohdim::CdValue::Finite(dim) {
        result["top_member"] = json!(att_top(&a, &i, cx.field)?.primes.contains(&p));
    }
    let n = cx.ring.nvars();
    if i.is_zero() && cd_poly(&a, cx.field)? < crate::cohdim::CdValue::Finite(n) {
        result["codim1_member"] = json!(att_codim1_membership(&a, &p, cx.field)?);
    }
    Ok(Outcome::ok(result, format!("upper-bound test: {upper}")))
}

fn att_onedim(cx: &Ctx) -> Result<Outcome> {
    let a = cx.ideal_a()?;
    let set = att_codim1_onedim(&a, cx.field)?;
    Ok(Outcome::ok(cx.att_set(&set), format!("{} attached monomial primes", set.primes.len())))
}

fn lhv(cx: &Ctx) -> Result<Outcome> {
    let a = cx.ideal_a()?;
    let p = cx.prime()?;
    let holds = lhv_check(&a, &p)?;
    let cd = cd_restricted(&a, &p, cx.field)?;
    let dim = p.dim_quotient();
    Ok(Outcome::ok(
        json!({
            "prime": cx.prime_json(&p),
            "lhv": holds,
            "cd_restricted": cd,
            "dim_quotient": dim,
            "cd_equals_dim": cd == crate::cohdim::CdValue::Finite(dim),
        }),
        format!("rad(a + p) = m: {holds}"),
    ))
}

fn betti(cx: &Ctx) -> Result<Outcome> {
    let i = cx.ideal_i()?;
    let table = betti_table(&i, cx.field)?;
    let entries: Vec<Value> = table
        .entries()
        .map(|(i, s, b)| json!({ "i": i, "multidegree": format_varset(s, &cx.ring), "value": b }))
        .collect();
    let pd = table.projective_dimension();
    Ok(Outcome::ok(
        json!({ "entries": entries, "totals": table.totals(), "pd": pd }),
        format!("pd R/I = {pd}"),
    ))
}

fn run_verify(req: &Request, field: Field) -> Result<Outcome> {
    let count = req.count.unwrap_or(10);
    if count == 0 {
        return Err(Error::Usage("verify needs count >= 1".into()));
    }
    let config = VerifyConfig {
        seed: req.seed,
        count,
        max_vars: req.limits.max_vars.unwrap_or(6),
        max_gens: req.limits.max_gens.unwrap_or(8),
        field,
        box_depth: req.box_depth,
    };
    let report = verify(&config)?;
    let summary = report.summary();
    let exit_code = if report.ok { 0 } else { 3 };
    Ok(Outcome {
        result: serde_json::to_value(&report).expect("verify report serializes"),
        summary,
        exit_code,
    })
}
