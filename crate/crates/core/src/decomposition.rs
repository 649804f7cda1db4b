//! Irreducible and primary decomposition of monomial ideals.
//!
//! Every monomial ideal has a unique irredundant decomposition into
//! irreducible ideals generated by pure variable powers. Grouping those by
//! radical yields the canonical reduced primary decomposition used
//! throughout the crate.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::varset::VarSet;

/// A prime generated by a subset of the variables; the empty subset is `(0)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPrime {
    vars: VarSet,
    nvars: usize,
}

impl MonomialPrime {
    pub fn new(nvars: usize, vars: VarSet) -> Result<Self> {
        if !vars.is_subset(VarSet::full(nvars)) {
            return Err(Error::Dimension { expected: nvars, found: vars.iter().last().unwrap_or(0) + 1 });
        }
        Ok(MonomialPrime { vars, nvars })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialPrime { vars: VarSet::EMPTY, nvars }
    }

    pub fn maximal(nvars: usize) -> Self {
        MonomialPrime { vars: VarSet::full(nvars), nvars }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Height of the prime, i.e. the number of its variables.
    pub fn height(&self) -> usize {
        self.vars.len()
    }

    /// Krull dimension of `R/p`.
    pub fn dim_quotient(&self) -> usize {
        self.nvars - self.vars.len()
    }

    pub fn ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_vars(self.nvars, self.vars)
    }

    /// `p ⊇ I`, i.e. `p ∈ V(I)`.
    pub fn contains_ideal(&self, ideal: &MonomialIdeal) -> bool {
        ideal.gens().iter().all(|g| !g.support().intersection(self.vars).is_empty())
    }

    /// Every monomial prime of the ring, in canonical order.
    pub fn all(nvars: usize) -> Vec<MonomialPrime> {
        let mut v: Vec<_> = VarSet::full(nvars)
            .subsets()
            .map(|vars| MonomialPrime { vars, nvars })
            .collect();
        v.sort();
        v
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{:?}", self.vars)
    }
}

/// A primary ideal together with its radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub component: MonomialIdeal,
    pub rad_prime: MonomialPrime,
}

/// A reduced primary decomposition: irredundant, with distinct radicals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub components: Vec<PrimaryComponent>,
}

impl Decomposition {
    pub fn primes(&self) -> Vec<MonomialPrime> {
        self.components.iter().map(|c| c.rad_prime).collect()
    }

    /// Intersection of all components; `None` for an empty decomposition.
    pub fn intersection(&self) -> Result<Option<MonomialIdeal>> {
        intersect_all(self.components.iter().map(|c| &c.component))
    }

    /// True if dropping any single component enlarges the intersection.
    pub fn is_irredundant(&self) -> Result<bool> {
        let Some(full) = self.intersection()? else {
            return Ok(true);
        };
        for skip in 0..self.components.len() {
            let rest = intersect_all(
                self.components.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, c)| &c.component),
            )?;
            if rest.as_ref() == Some(&full) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Intersection of a family of ideals; `None` for the empty family.
pub fn intersect_all<'a>(ideals: impl IntoIterator<Item = &'a MonomialIdeal>) -> Result<Option<MonomialIdeal>> {
    let mut acc: Option<MonomialIdeal> = None;
    for i in ideals {
        acc = Some(match acc {
            None => i.clone(),
            Some(a) => a.intersect(i)?,
        });
    }
    Ok(acc)
}

fn require_nonzero_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_unit() {
        return Err(Error::DecompositionUndefined("the unit ideal has no decomposition"));
    }
    if ideal.is_zero() {
        return Err(Error::DecompositionUndefined("the zero ideal has no irreducible monomial components"));
    }
    Ok(())
}

/// Irredundant irreducible decomposition, splitting in natural variable order.
pub fn irreducible_decomposition(ideal: &MonomialIdeal) -> Result<Vec<MonomialIdeal>> {
    let order: Vec<usize> = (0..ideal.nvars()).collect();
    irreducible_decomposition_with_order(ideal, &order)
}

/// Irredundant irreducible decomposition by recursive generator splitting.
///
/// The first generator (canonical order) that is not a pure power is written
/// as `v * w` where `v` is the power of its first variable according to
/// `var_order`; then `I = (I + (v)) ∩ (I + (w))`. Leaves are generated by pure
/// powers. The final list is pruned of components containing another one and
/// sorted, so it does not depend on `var_order`.
pub fn irreducible_decomposition_with_order(
    ideal: &MonomialIdeal,
    var_order: &[usize],
) -> Result<Vec<MonomialIdeal>> {
    require_nonzero_proper(ideal)?;
    let n = ideal.nvars();
    let mut rank = vec![usize::MAX; n];
    for (pos, &v) in var_order.iter().enumerate() {
        if v < n {
            rank[v] = pos;
        }
    }
    if rank.contains(&usize::MAX) {
        return Err(Error::Usage("variable order must be a permutation of the ring variables".into()));
    }

    let mut leaves = Vec::new();
    let mut stack = vec![ideal.clone()];
    while let Some(cur) = stack.pop() {
        let Some(u) = cur.gens().iter().find(|g| g.support().len() >= 2) else {
            leaves.push(cur);
            continue;
        };
        let first = u.support().iter().min_by_key(|&i| rank[i]).expect("support has two variables");
        let v = Monomial::var_power(n, first, u.exps()[first]);
        let w = u.strip_common(&v);
        let with = |m: Monomial| -> Result<MonomialIdeal> {
            cur.sum(&MonomialIdeal::new(n, vec![m])?)
        };
        stack.push(with(w)?);
        stack.push(with(v)?);
    }

    leaves.sort();
    leaves.dedup();
    let pruned = leaves
        .iter()
        .filter(|c| !leaves.iter().any(|d| d != *c && d.is_subset(c)))
        .cloned()
        .collect();
    Ok(pruned)
}

/// Canonical reduced primary decomposition.
///
/// Irreducible components are grouped by radical and each group intersected.
/// The zero ideal decomposes as the single component `(0)` at the prime `(0)`.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    if ideal.is_zero() {
        return Ok(Decomposition {
            components: vec![PrimaryComponent {
                component: ideal.clone(),
                rad_prime: MonomialPrime::zero(ideal.nvars()),
            }],
        });
    }
    let irreducibles = irreducible_decomposition(ideal)?;
    Ok(group_by_radical(ideal.nvars(), &irreducibles))
}

/// Groups irreducible components by their radical prime.
pub fn group_by_radical(nvars: usize, irreducibles: &[MonomialIdeal]) -> Decomposition {
    let mut groups: BTreeMap<VarSet, MonomialIdeal> = BTreeMap::new();
    for c in irreducibles {
        let prime = c.support();
        let merged = match groups.remove(&prime) {
            Some(prev) => prev.intersect(c).expect("components share the ring"),
            None => c.clone(),
        };
        groups.insert(prime, merged);
    }
    Decomposition {
        components: groups
            .into_iter()
            .map(|(vars, component)| PrimaryComponent {
                component,
                rad_prime: MonomialPrime { vars, nvars },
            })
            .collect(),
    }
}

/// Associated, minimal and top-dimensional associated primes of `R/I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssociatedPrimes {
    pub ass: Vec<MonomialPrime>,
    pub mass: Vec<MonomialPrime>,
    pub assh: Vec<MonomialPrime>,
}

pub fn associated_primes(ideal: &MonomialIdeal) -> Result<AssociatedPrimes> {
    let ass = primary_decomposition(ideal)?.primes();
    let mass: Vec<_> = ass
        .iter()
        .filter(|p| !ass.iter().any(|q| q != *p && q.vars().is_subset(p.vars())))
        .copied()
        .collect();
    let height = mass.iter().map(MonomialPrime::height).min().expect("a proper ideal has a minimal prime");
    let assh = mass.iter().filter(|p| p.height() == height).copied().collect();
    Ok(AssociatedPrimes { ass, mass, assh })
}

/// Minimal primes of `I`, from the prime decomposition of its radical.
pub fn minimal_primes(ideal: &MonomialIdeal) -> Result<Vec<MonomialPrime>> {
    Ok(primary_decomposition(&ideal.radical())?.primes())
}

/// Krull dimension of `R/I` and height of `I`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimHeight {
    pub dim: usize,
    pub height: usize,
}

pub fn krull_dim_height(ideal: &MonomialIdeal) -> Result<DimHeight> {
    if ideal.is_unit() {
        return Err(Error::DimensionUndefined);
    }
    let height = minimal_primes(ideal)?.iter().map(MonomialPrime::height).min().unwrap_or(0);
    Ok(DimHeight { dim: ideal.nvars() - height, height })
}
