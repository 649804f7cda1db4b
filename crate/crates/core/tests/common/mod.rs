//! Shared strategies and independent brute-force oracles.
#![allow(dead_code)]

use proptest::prelude::*;
use topann_core::{Monomial, MonomialIdeal, VarSet};

pub fn mono(e: &[u32]) -> Monomial {
    Monomial::new(e.to_vec())
}

pub fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
    MonomialIdeal::new(n, gens.iter().map(|e| mono(e)).collect()).unwrap()
}

/// Nonconstant monomial with exponents below `max_exp + 1`.
pub fn monomial_strategy(n: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n)
        .prop_filter("nonconstant", |e| e.iter().any(|&x| x > 0))
        .prop_map(Monomial::new)
}

/// Nonzero proper ideal in `n` variables.
pub fn ideal_strategy(n: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial_strategy(n, max_exp), 1..=max_gens)
        .prop_map(move |g| MonomialIdeal::new(n, g).unwrap())
}

pub fn squarefree_strategy(n: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    ideal_strategy(n, 1, max_gens)
}

/// Every exponent vector in `{0..=bound}^n`.
pub fn box_monomials(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|e: Vec<u32>| {
                (0..=bound).map(move |k| {
                    let mut f = e.clone();
                    f.push(k);
                    f
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

pub fn max_exp(ideals: &[&MonomialIdeal]) -> u32 {
    ideals
        .iter()
        .flat_map(|i| i.gens())
        .flat_map(|g| g.exps().iter().copied())
        .max()
        .unwrap_or(0)
}

/// Membership by divisibility against an arbitrary (not necessarily
/// minimal) generator list.
pub fn divisible_by_any(gens: &[Monomial], u: &Monomial) -> bool {
    gens.iter().any(|g| g.exps().iter().zip(u.exps()).all(|(a, b)| a <= b))
}

pub fn mul(u: &Monomial, v: &Monomial) -> Monomial {
    Monomial::new(u.exps().iter().zip(v.exps()).map(|(a, b)| a + b).collect())
}

pub fn pow(u: &Monomial, k: u32) -> Monomial {
    Monomial::new(u.exps().iter().map(|a| a * k).collect())
}

/// Rank over GF(2) of rows packed as bitmasks.
pub fn gf2_rank(mut rows: Vec<u128>) -> usize {
    let mut rank = 0;
    for bit in 0..128 {
        let mask = 1u128 << bit;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & mask != 0) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & mask != 0 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// All faces of the complex generated by `facets`, by subset enumeration.
pub fn faces_of(facets: &[VarSet]) -> Vec<VarSet> {
    let mut faces: Vec<VarSet> = facets.iter().flat_map(|f| f.subsets()).collect();
    faces.sort();
    faces.dedup();
    faces
}

/// Reduced Betti numbers over GF(2), computed from scratch: `b̃_k` for
/// `k = -1 ..= top`, returned with index `k + 1`.
pub fn gf2_reduced_betti(facets: &[VarSet]) -> Vec<usize> {
    let faces = faces_of(facets);
    if faces.is_empty() {
        return vec![];
    }
    let top = faces.iter().map(|f| f.len()).max().unwrap();
    let by_size: Vec<Vec<VarSet>> = (0..=top).map(|s| faces.iter().copied().filter(|f| f.len() == s).collect()).collect();
    // rank of the map from size-s faces to size-(s-1) faces
    let rank = |s: usize| -> usize {
        if s == 0 || s > top {
            return 0;
        }
        let lower = &by_size[s - 1];
        let rows = by_size[s]
            .iter()
            .map(|f| {
                f.iter().fold(0u128, |acc, v| {
                    let g = f.without(v);
                    acc | 1u128 << lower.iter().position(|h| *h == g).unwrap()
                })
            })
            .collect();
        gf2_rank(rows)
    };
    (0..=top).map(|s| by_size[s].len() - rank(s) - rank(s + 1)).collect()
}
