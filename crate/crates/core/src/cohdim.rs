//! Cohomological dimension `cd(a, R/I)` for monomial data.
//!
//! The main route goes through projective dimension: for squarefree `a`,
//! `cd(a, R) = pd(R/a)`, and `pd` is read off the multigraded Betti numbers
//! given by Hochster's formula `β_{i,σ}(R/I) = dim H̃_{|σ|-i-1}(Δ|_σ)`.
//! [`cech_cd_oracle`] is an independent brute-force check that evaluates the
//! graded pieces of the Čech complex directly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::decomposition::{minimal_primes, MonomialPrime};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::homology::{reduced_homology, sr_complex};
use crate::linalg::IntMatrix;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::varset::VarSet;

/// Largest ring for which Betti tables are computed (2^n restrictions).
pub const MAX_BETTI_VARS: usize = 16;

/// Largest number of degrees the oracle will visit.
pub const MAX_ORACLE_DEGREES: usize = 1 << 20;

/// A cohomological dimension: the largest `i` with `H^i_a(M) ≠ 0`.
///
/// `NoSupport` is the supremum of the empty set (no local cohomology at
/// all, i.e. `V(a) ∩ Supp M = ∅`). It orders below every finite value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CdValue {
    NoSupport,
    Finite(usize),
}

impl CdValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            CdValue::Finite(c) => Some(c),
            CdValue::NoSupport => None,
        }
    }
}

impl fmt::Display for CdValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CdValue::Finite(c) => write!(f, "{c}"),
            CdValue::NoSupport => write!(f, "no-support"),
        }
    }
}

impl Serialize for CdValue {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            CdValue::Finite(c) => s.serialize_u64(*c as u64),
            CdValue::NoSupport => s.serialize_str("no-support"),
        }
    }
}

/// Multigraded Betti numbers `β_{i,σ}` of `R/I` for squarefree `I`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, VarSet), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize, sigma: VarSet) -> usize {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    /// Nonzero entries ordered by homological degree, then multidegree.
    pub fn entries(&self) -> impl Iterator<Item = (usize, VarSet, usize)> + '_ {
        self.entries.iter().map(|(&(i, s), &b)| (i, s, b))
    }

    /// Total Betti numbers `β_i = Σ_σ β_{i,σ}` for `i = 0..=pd`.
    pub fn totals(&self) -> Vec<usize> {
        let mut totals = vec![0; self.projective_dimension() + 1];
        for (&(i, _), &b) in &self.entries {
            totals[i] += b;
        }
        totals
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }
}

fn require_squarefree(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_squarefree() {
        Ok(())
    } else {
        Err(Error::SquarefreeRequired)
    }
}

/// Betti table of `R/I` via Hochster's formula.
pub fn betti_table(ideal: &MonomialIdeal, field: Field) -> Result<BettiTable> {
    require_squarefree(ideal)?;
    let n = ideal.nvars();
    if n > MAX_BETTI_VARS {
        return Err(Error::SizeLimit(format!("{n} variables (max {MAX_BETTI_VARS} for Betti tables)")));
    }
    let delta = sr_complex(ideal)?;
    let mut entries = BTreeMap::new();
    for sigma in VarSet::full(n).subsets() {
        let h = reduced_homology(&delta.restrict(sigma), field);
        for (deg, dim) in h.iter() {
            let i = sigma.len() as i32 - deg - 1;
            debug_assert!(i >= 0);
            entries.insert((i as usize, sigma), dim);
        }
    }
    Ok(BettiTable { entries })
}

pub fn proj_dim(ideal: &MonomialIdeal, field: Field) -> Result<usize> {
    Ok(betti_table(ideal, field)?.projective_dimension())
}

/// `cd(a, R)` as `pd(R/√a)`.
pub fn cd_poly(a: &MonomialIdeal, field: Field) -> Result<CdValue> {
    if a.is_unit() {
        return Ok(CdValue::NoSupport);
    }
    Ok(CdValue::Finite(proj_dim(&a.radical(), field)?))
}

/// Image of `a` in `R/p ≅ k[x_j : j ∉ p]`, reindexed to the remaining variables.
pub fn image_mod_prime(a: &MonomialIdeal, p: &MonomialPrime) -> Result<MonomialIdeal> {
    if a.nvars() != p.nvars() {
        return Err(Error::RingMismatch(a.nvars(), p.nvars()));
    }
    let keep: Vec<usize> = VarSet::full(a.nvars()).difference(p.vars()).to_vec();
    let gens = a
        .gens()
        .iter()
        .filter(|g| g.support().intersection(p.vars()).is_empty())
        .map(|g| Monomial::new(keep.iter().map(|&j| g.exps()[j]).collect()))
        .collect();
    MonomialIdeal::new(keep.len(), gens)
}

/// `cd(a, R/p)`, computed as `cd` of the image of `a` in the polynomial ring `R/p`.
pub fn cd_restricted(a: &MonomialIdeal, p: &MonomialPrime, field: Field) -> Result<CdValue> {
    cd_poly(&image_mod_prime(a, p)?, field)
}

/// `cd(a, R/I)`: the maximum of `cd(a, R/p)` over the minimal primes `p` of `I`.
pub fn cd_quotient(a: &MonomialIdeal, ideal: &MonomialIdeal, field: Field) -> Result<CdValue> {
    if a.nvars() != ideal.nvars() {
        return Err(Error::RingMismatch(a.nvars(), ideal.nvars()));
    }
    if ideal.is_unit() {
        return Ok(CdValue::NoSupport);
    }
    let mut best = CdValue::NoSupport;
    for p in minimal_primes(ideal)? {
        best = best.max(cd_restricted(a, &p, field)?);
    }
    Ok(best)
}

/// Lichtenbaum–Hartshorne test: `√(a + p)` is the maximal ideal.
pub fn lhv_check(a: &MonomialIdeal, p: &MonomialPrime) -> Result<bool> {
    let sum = a.sum(&p.ideal())?;
    Ok(sum.radical() == MonomialIdeal::maximal(a.nvars()))
}

/// Options for [`cech_cd_oracle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    /// Degrees range over `{-box_depth, .., 0}^n`.
    pub box_depth: u32,
    pub max_generators: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { box_depth: 1, max_generators: 12 }
    }
}

/// Graded pieces of the Čech complex of `M = R/I` on the minimal generators
/// `m_1, .., m_r` of a squarefree ideal `a`.
///
/// The summand for `σ ⊆ {1..r}` is `M` localized at `m_σ = Π_{i∈σ} m_i`.
/// In a degree `d ≤ 0` it is one-dimensional exactly when `supp(m_σ)` is a
/// face of the Stanley–Reisner complex of `I` and the negative support of
/// `d` lies inside `supp(m_σ)`, and zero otherwise.
#[derive(Clone, Debug)]
pub struct GradedCechComplex {
    nvars: usize,
    generators: Vec<Monomial>,
    /// `supp(m_σ)`, indexed by the bitmask of `σ`.
    supports: Vec<VarSet>,
    /// Whether `supp(m_σ)` is a face of the Stanley–Reisner complex.
    is_face: Vec<bool>,
}

impl GradedCechComplex {
    pub fn new(a: &MonomialIdeal, ideal: &MonomialIdeal) -> Result<Self> {
        if a.nvars() != ideal.nvars() {
            return Err(Error::RingMismatch(a.nvars(), ideal.nvars()));
        }
        require_squarefree(a)?;
        require_squarefree(ideal)?;
        let generators = a.gens().to_vec();
        let r = generators.len();
        if r >= usize::BITS as usize - 1 {
            return Err(Error::SizeLimit(format!("{r} generators")));
        }
        let gen_supports: Vec<VarSet> = generators.iter().map(Monomial::support).collect();
        let non_faces: Vec<VarSet> = ideal.gens().iter().map(Monomial::support).collect();
        let mut supports = vec![VarSet::EMPTY; 1 << r];
        for mask in 1usize..1 << r {
            let low = mask.trailing_zeros() as usize;
            supports[mask] = supports[mask & (mask - 1)].union(gen_supports[low]);
        }
        let is_face = supports
            .iter()
            .map(|&tau| !non_faces.iter().any(|g| g.is_subset(tau)))
            .collect();
        Ok(GradedCechComplex { nvars: a.nvars(), generators, supports, is_face })
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    /// Whether the `σ`-summand is nonzero in `degree` (`degree ≤ 0` componentwise).
    pub fn flag(&self, sigma: usize, degree: &[i64]) -> bool {
        debug_assert_eq!(degree.len(), self.nvars);
        let neg = VarSet::from_indices(degree.iter().enumerate().filter(|(_, &d)| d < 0).map(|(i, _)| i));
        self.is_face[sigma] && neg.is_subset(self.supports[sigma])
    }

    pub fn flags(&self, degree: &[i64]) -> Vec<bool> {
        (0..self.supports.len()).map(|s| self.flag(s, degree)).collect()
    }

    /// Matrix of `C^i → C^{i+1}` restricted to the flagged summands. Rows are
    /// flagged subsets of size `i + 1`, columns flagged subsets of size `i`.
    pub fn differential(&self, i: usize, flags: &[bool]) -> IntMatrix {
        let layer = |k: usize| -> Vec<usize> {
            (0..flags.len()).filter(|&s| flags[s] && s.count_ones() as usize == k).collect()
        };
        let src = layer(i);
        let dst = layer(i + 1);
        let col: HashMap<usize, usize> = src.iter().enumerate().map(|(c, &s)| (s, c)).collect();
        let mut m = IntMatrix::zeros(dst.len(), src.len());
        for (row, &t) in dst.iter().enumerate() {
            let mut bits = t;
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                let s = t & !(1 << j);
                if let Some(&c) = col.get(&s) {
                    let below = (s & ((1 << j) - 1)).count_ones();
                    m.set(row, c, if below.is_multiple_of(2) { 1 } else { -1 });
                }
            }
        }
        m
    }

    /// `dim H^i` for `i = 0..=r` of the complex with the given flags.
    pub fn cohomology_for_flags(&self, flags: &[bool], field: Field) -> Vec<usize> {
        let r = self.ngens();
        let mut sizes = vec![0usize; r + 1];
        for (s, &f) in flags.iter().enumerate() {
            if f {
                sizes[s.count_ones() as usize] += 1;
            }
        }
        // ranks[i] = rank of C^i → C^{i+1}
        let ranks: Vec<usize> = (0..=r)
            .map(|i| {
                if i == r || sizes[i] == 0 || sizes[i + 1] == 0 {
                    0
                } else {
                    self.differential(i, flags).rank(field)
                }
            })
            .collect();
        (0..=r)
            .map(|i| sizes[i] - ranks[i] - if i > 0 { ranks[i - 1] } else { 0 })
            .collect()
    }

    pub fn cohomology(&self, degree: &[i64], field: Field) -> Vec<usize> {
        self.cohomology_for_flags(&self.flags(degree), field)
    }
}

/// `cd(a, R/I)` by brute force over the graded Čech complex, scanning every
/// degree in the box `{-box_depth, .., 0}^n`.
pub fn cech_cd_oracle(
    a: &MonomialIdeal,
    ideal: &MonomialIdeal,
    field: Field,
    opts: &OracleOptions,
) -> Result<CdValue> {
    if a.gens().len() > opts.max_generators {
        return Err(Error::SizeLimit(format!(
            "{} generators (oracle limit {})",
            a.gens().len(),
            opts.max_generators
        )));
    }
    let n = a.nvars();
    let side = opts.box_depth as usize + 1;
    let too_many = side
        .checked_pow(n as u32)
        .is_none_or(|count| count > MAX_ORACLE_DEGREES);
    if too_many {
        return Err(Error::SizeLimit(format!("degree box {side}^{n} too large")));
    }
    let complex = GradedCechComplex::new(a, ideal)?;

    let mut cache: HashMap<Vec<bool>, Vec<usize>> = HashMap::new();
    let mut best = CdValue::NoSupport;
    let mut degree = vec![0i64; n];
    loop {
        let flags = complex.flags(&degree);
        let h = cache
            .entry(flags)
            .or_insert_with_key(|flags| complex.cohomology_for_flags(flags, field));
        if let Some(top) = h.iter().rposition(|&d| d > 0) {
            best = best.max(CdValue::Finite(top));
        }
        // odometer step through {-depth..0}^n
        let mut k = 0;
        loop {
            if k == n {
                return Ok(best);
            }
            if degree[k] > -(opts.box_depth as i64) {
                degree[k] -= 1;
                break;
            }
            degree[k] = 0;
            k += 1;
        }
    }
}
