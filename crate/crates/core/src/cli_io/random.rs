//! Seeded random monomial ideals for the verifier and the test suites.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::monomial::{Monomial, MonomialIdeal};
use crate::varset::VarSet;

/// Reproducible sampler; the stream depends only on the seed.
pub struct IdealSampler {
    rng: ChaCha8Rng,
}

impl IdealSampler {
    pub fn new(seed: u64) -> Self {
        IdealSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Random squarefree ideal with `2..=max_gens` minimal generators, each
    /// of degree `2..=n-1`. Every candidate monomial is included
    /// independently with a probability aimed at a random generator count.
    pub fn squarefree(&mut self, n: usize, max_gens: usize) -> MonomialIdeal {
        assert!(n >= 3 && max_gens >= 2, "need n >= 3 and room for two generators");
        let candidates: Vec<VarSet> = VarSet::full(n)
            .subsets()
            .filter(|s| (2..n).contains(&s.len()))
            .collect();
        loop {
            let target = self.rng.gen_range(2..=max_gens) as f64;
            let prob = (target / candidates.len() as f64).min(1.0);
            let gens: Vec<Monomial> = candidates
                .iter()
                .filter(|_| self.rng.gen_bool(prob))
                .map(|&s| Monomial::from_support(n, s))
                .collect();
            let ideal = MonomialIdeal::new(n, gens).expect("generators live in the ring");
            if (2..=max_gens).contains(&ideal.gens().len()) {
                return ideal;
            }
        }
    }

    /// Random irreducible ideal `(x_i^{e_i} : i ∈ S)` with `S` nonempty.
    pub fn irreducible(&mut self, n: usize, max_exp: u32) -> MonomialIdeal {
        loop {
            let mut gens = Vec::new();
            for i in 0..n {
                if self.rng.gen_bool(0.4) {
                    gens.push(Monomial::var_power(n, i, self.rng.gen_range(1..=max_exp)));
                }
            }
            if !gens.is_empty() {
                return MonomialIdeal::new(n, gens).expect("generators live in the ring");
            }
        }
    }

    /// Intersection of `1..=max_parts` random irreducible ideals; usually
    /// not squarefree and often with embedded primes.
    pub fn irreducible_intersection(&mut self, n: usize, max_parts: usize, max_exp: u32) -> MonomialIdeal {
        let parts = self.rng.gen_range(1..=max_parts);
        let mut acc = self.irreducible(n, max_exp);
        for _ in 1..parts {
            acc = acc.intersect(&self.irreducible(n, max_exp)).expect("same ring");
        }
        acc
    }

    /// Squarefree ideal with `dim R/a = 1`: an intersection of one to three
    /// distinct primes of height `n - 1`.
    pub fn one_dimensional(&mut self, n: usize) -> MonomialIdeal {
        let mut missing: Vec<usize> = (0..n).collect();
        missing.shuffle(&mut self.rng);
        let k = self.rng.gen_range(1..=3.min(n));
        let mut acc: Option<MonomialIdeal> = None;
        for &j in &missing[..k] {
            let p = MonomialIdeal::from_vars(n, VarSet::full(n).without(j));
            acc = Some(match acc {
                None => p,
                Some(a) => a.intersect(&p).expect("same ring"),
            });
        }
        acc.expect("k >= 1")
    }

    /// `m`-primary ideal: a power of every variable plus a few random monomials.
    pub fn m_primary(&mut self, n: usize) -> MonomialIdeal {
        let mut gens: Vec<Monomial> = (0..n)
            .map(|i| Monomial::var_power(n, i, self.rng.gen_range(1..=3)))
            .collect();
        let extra = self.rng.gen_range(0..=3);
        for _ in 0..extra {
            let g = self.monomial(n, 3);
            if !g.is_one() {
                gens.push(g);
            }
        }
        MonomialIdeal::new(n, gens).expect("generators live in the ring")
    }

    /// Random monomial of total degree at most `max_deg`.
    pub fn monomial(&mut self, n: usize, max_deg: u32) -> Monomial {
        let deg = self.rng.gen_range(0..=max_deg);
        let mut exps = vec![0u32; n];
        for _ in 0..deg {
            exps[self.rng.gen_range(0..n)] += 1;
        }
        Monomial::new(exps)
    }
}
