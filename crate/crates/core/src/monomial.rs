//! Monomials and monomial ideals in `k[x_1, .., x_n]`.
//!
//! A [`MonomialIdeal`] is always stored by its minimal generators in
//! canonical graded-lex order, so structural equality is ideal equality.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_VARSET};

/// An exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// The variable `x_i`.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps }
    }

    /// `x_i^e`.
    pub fn var_power(nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Monomial { exps }
    }

    /// Squarefree monomial `prod_{i in s} x_i`.
    pub fn from_support(nvars: usize, s: VarSet) -> Self {
        let mut exps = vec![0; nvars];
        for i in s.iter() {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.len() == other.exps.len()
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect() }
    }

    /// `self / gcd(self, other)`.
    pub fn strip_common(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        check_len(self.nvars(), other.nvars())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    /// Variables with a nonzero exponent.
    pub fn support(&self) -> VarSet {
        VarSet::from_indices(self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i))
    }

    pub fn squarefree_part(&self) -> Monomial {
        Monomial { exps: self.exps.iter().map(|&e| e.min(1)).collect() }
    }
}

/// Graded-lex: lower total degree first; within a degree the larger exponent
/// of the earliest variable comes first, so `x < y < z` and `xy < xz < yz`.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{i}")?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension { expected, found })
    }
}

/// A monomial ideal, held as its minimal generators in canonical order.
///
/// The zero ideal has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimal generating set of the ideal generated by `gens`.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Result<Self> {
        if nvars > MAX_VARSET {
            return Err(Error::SizeLimit(format!("{nvars} variables (max {MAX_VARSET})")));
        }
        for g in &gens {
            check_len(nvars, g.nvars())?;
        }
        Ok(Self::from_checked(nvars, gens))
    }

    fn from_checked(nvars: usize, mut gens: Vec<Monomial>) -> Self {
        gens.sort();
        gens.dedup();
        // Sorted by degree, so a divisor always precedes its multiples.
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|m| m.divides(&g)) {
                minimal.push(g);
            }
        }
        MonomialIdeal { nvars, gens: minimal }
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::one(nvars)] }
    }

    /// The ideal generated by the variables in `vars`.
    pub fn from_vars(nvars: usize, vars: VarSet) -> Self {
        MonomialIdeal { nvars, gens: vars.iter().map(|i| Monomial::var(nvars, i)).collect() }
    }

    /// The homogeneous maximal ideal `(x_1, .., x_n)`.
    pub fn maximal(nvars: usize) -> Self {
        Self::from_vars(nvars, VarSet::full(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// True when some generator divides `u`.
    pub fn contains(&self, u: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(u))
    }

    /// Ideal containment `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> bool {
        self.nvars == other.nvars && self.gens.iter().all(|g| other.contains(g))
    }

    fn check_ring(&self, other: &MonomialIdeal) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::RingMismatch(self.nvars, other.nvars))
        }
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_checked(self.nvars, gens))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.checked_mul(v)?);
            }
        }
        Ok(Self::from_checked(self.nvars, gens))
    }

    /// `I ∩ J`, generated by pairwise lcms.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for u in &self.gens {
            for v in &other.gens {
                gens.push(u.lcm(v));
            }
        }
        Ok(Self::from_checked(self.nvars, gens))
    }

    /// `(I : v)`, generated by `u / gcd(u, v)`.
    pub fn colon_monomial(&self, v: &Monomial) -> Result<MonomialIdeal> {
        check_len(self.nvars, v.nvars())?;
        let gens = self.gens.iter().map(|u| u.strip_common(v)).collect();
        Ok(Self::from_checked(self.nvars, gens))
    }

    /// `(I : J) = ∩_{v ∈ gens(J)} (I : v)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ring(other)?;
        let mut it = other.gens.iter();
        let first = it.next().ok_or(Error::ZeroColon)?;
        let mut acc = self.colon_monomial(first)?;
        for v in it {
            acc = acc.intersect(&self.colon_monomial(v)?)?;
        }
        Ok(acc)
    }

    /// `(I : J^∞)`, the stable value of iterated colons.
    pub fn saturate(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let mut cur = self.colon(other)?;
        loop {
            let next = cur.colon(other)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    pub fn radical(&self) -> MonomialIdeal {
        Self::from_checked(self.nvars, self.gens.iter().map(Monomial::squarefree_part).collect())
    }

    /// Union of the supports of the generators.
    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(VarSet::EMPTY, |s, g| s.union(g.support()))
    }
}

/// Canonical order on ideals of the same ring: lexicographic on the sorted
/// generator lists.
impl Ord for MonomialIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.nvars.cmp(&other.nvars).then_with(|| self.gens.cmp(&other.gens))
    }
}

impl PartialOrd for MonomialIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g:?}")?;
        }
        write!(f, ")")
    }
}
