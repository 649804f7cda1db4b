//! Stanley–Reisner complexes and exact reduced simplicial homology.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::IntMatrix;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::varset::VarSet;

/// Largest vertex count for which faces are enumerated.
pub const MAX_COMPLEX_VERTICES: usize = 20;

/// A simplicial complex on a ground set of vertices, stored by facets.
///
/// The void complex has no faces at all; the irrelevant complex has the
/// single face `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: VarSet,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Complex generated by `faces`, which must lie inside `vertices`.
    pub fn from_faces(vertices: VarSet, faces: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        let mut faces: Vec<VarSet> = faces.into_iter().collect();
        if let Some(f) = faces.iter().find(|f| !f.is_subset(vertices)) {
            return Err(Error::Usage(format!("face {f:?} outside the vertex set {vertices:?}")));
        }
        faces.sort();
        faces.dedup();
        let facets = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g != *f && f.is_subset(*g)))
            .copied()
            .collect();
        Ok(SimplicialComplex { vertices, facets })
    }

    pub fn void(vertices: VarSet) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    pub fn irrelevant(vertices: VarSet) -> Self {
        SimplicialComplex { vertices, facets: vec![VarSet::EMPTY] }
    }

    pub fn simplex(vertices: VarSet) -> Self {
        SimplicialComplex { vertices, facets: vec![vertices] }
    }

    pub fn vertices(&self) -> VarSet {
        self.vertices
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// All faces, grouped by cardinality (index `k` holds the faces with `k` vertices).
    pub fn faces_by_size(&self) -> Vec<Vec<VarSet>> {
        let top = self.facets.iter().map(|f| f.len()).max();
        let Some(top) = top else {
            return Vec::new();
        };
        let mut seen = std::collections::HashSet::new();
        let mut by_size = vec![Vec::new(); top + 1];
        for f in &self.facets {
            for s in f.subsets() {
                if seen.insert(s) {
                    by_size[s.len()].push(s);
                }
            }
        }
        for layer in &mut by_size {
            layer.sort();
        }
        by_size
    }

    /// `f_i` = number of `i`-dimensional faces, starting at `i = -1`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_size().iter().map(Vec::len).collect()
    }

    /// Faces of `self` contained in `sigma`, on the ground set `sigma`.
    pub fn restrict(&self, sigma: VarSet) -> SimplicialComplex {
        if self.is_void() {
            return SimplicialComplex::void(sigma);
        }
        let faces = self.facets.iter().map(|f| f.intersection(sigma));
        SimplicialComplex::from_faces(sigma, faces).expect("restricted faces lie in sigma")
    }
}

/// Stanley–Reisner complex of a squarefree proper ideal: faces are the
/// squarefree monomials outside the ideal.
pub fn sr_complex(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::SquarefreeRequired);
    }
    if ideal.is_unit() {
        return Err(Error::Usage("the unit ideal has no Stanley-Reisner complex".into()));
    }
    let n = ideal.nvars();
    if n > MAX_COMPLEX_VERTICES {
        return Err(Error::SizeLimit(format!("{n} vertices (max {MAX_COMPLEX_VERTICES})")));
    }
    let gens: Vec<VarSet> = ideal.gens().iter().map(Monomial::support).collect();
    let faces = VarSet::full(n).subsets().filter(|s| !gens.iter().any(|g| g.is_subset(*s)));
    SimplicialComplex::from_faces(VarSet::full(n), faces)
}

/// Ideal of non-faces of `complex` inside `k[x_1, .., x_nvars]`.
pub fn sr_ideal(complex: &SimplicialComplex, nvars: usize) -> Result<MonomialIdeal> {
    if nvars > MAX_COMPLEX_VERTICES {
        return Err(Error::SizeLimit(format!("{nvars} vertices (max {MAX_COMPLEX_VERTICES})")));
    }
    let gens = VarSet::full(nvars)
        .subsets()
        .filter(|s| !complex.contains_face(*s))
        .map(|s| Monomial::from_support(nvars, s))
        .collect();
    MonomialIdeal::new(nvars, gens)
}

/// Dimensions of reduced homology, indexed by degree `i ≥ -1`; only nonzero
/// entries are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HomologyProfile {
    dims: BTreeMap<i32, usize>,
}

impl HomologyProfile {
    pub fn get(&self, degree: i32) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, usize)> + '_ {
        self.dims.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.is_empty()
    }
}

/// Boundary matrix from faces of size `k` to faces of size `k - 1`, with
/// sign `(-1)^j` for dropping the `j`-th vertex. Rows are indexed by the
/// larger faces.
fn boundary_matrix(upper: &[VarSet], lower: &[VarSet]) -> IntMatrix {
    let index: HashMap<VarSet, usize> = lower.iter().enumerate().map(|(k, &f)| (f, k)).collect();
    let mut m = IntMatrix::zeros(upper.len(), lower.len());
    for (r, face) in upper.iter().enumerate() {
        for (j, v) in face.iter().enumerate() {
            let c = index[&face.without(v)];
            m.set(r, c, if j % 2 == 0 { 1 } else { -1 });
        }
    }
    m
}

/// Ranks of the boundary maps `∂_k : C_{k-1} → C_{k-2}` for faces of size `k ≥ 1`,
/// together with the chain group sizes.
pub(crate) fn boundary_ranks(complex: &SimplicialComplex, field: Field) -> (Vec<usize>, Vec<usize>) {
    let faces = complex.faces_by_size();
    let sizes: Vec<usize> = faces.iter().map(Vec::len).collect();
    let mut ranks = vec![0; sizes.len() + 1];
    for k in 1..faces.len() {
        ranks[k] = boundary_matrix(&faces[k], &faces[k - 1]).rank(field);
    }
    (sizes, ranks)
}

/// Reduced homology `dim_k H̃_i(K)` for all `i`.
pub fn reduced_homology(complex: &SimplicialComplex, field: Field) -> HomologyProfile {
    let (sizes, ranks) = boundary_ranks(complex, field);
    let mut dims = BTreeMap::new();
    for (k, &size) in sizes.iter().enumerate() {
        // faces of size k sit in degree k - 1
        let h = size - ranks[k] - ranks[k + 1];
        if h > 0 {
            dims.insert(k as i32 - 1, h);
        }
    }
    HomologyProfile { dims }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VarSet {
        VarSet::from_indices(v.iter().copied())
    }

    fn ideal3(gens: &[[u32; 3]]) -> MonomialIdeal {
        MonomialIdeal::new(3, gens.iter().map(|e| Monomial::new(e.to_vec())).collect()).unwrap()
    }

    #[test]
    fn sr_complex_examples() {
        let k = sr_complex(&ideal3(&[[1, 1, 0], [1, 0, 1]])).unwrap();
        assert_eq!(k.facets(), &[vs(&[0]), vs(&[1, 2])]);
        assert_eq!(sr_complex(&MonomialIdeal::zero(3)).unwrap(), SimplicialComplex::simplex(vs(&[0, 1, 2])));
        assert_eq!(
            sr_complex(&MonomialIdeal::maximal(3)).unwrap(),
            SimplicialComplex::irrelevant(vs(&[0, 1, 2]))
        );
        assert_eq!(sr_complex(&ideal3(&[[2, 0, 0]])), Err(Error::SquarefreeRequired));
    }

    #[test]
    fn sr_ideal_round_trip() {
        let i = ideal3(&[[1, 1, 0], [1, 0, 1]]);
        assert_eq!(sr_ideal(&sr_complex(&i).unwrap(), 3).unwrap(), i);
        assert_eq!(sr_ideal(&SimplicialComplex::irrelevant(vs(&[0, 1, 2])), 3).unwrap(), MonomialIdeal::maximal(3));
    }

    #[test]
    fn circle_and_simplex() {
        let circle = SimplicialComplex::from_faces(vs(&[0, 1, 2]), [vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 2])]).unwrap();
        let h = reduced_homology(&circle, Field::Rational);
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(1, 1)]);
        let simplex = SimplicialComplex::simplex(vs(&[0, 1, 2, 3]));
        assert!(reduced_homology(&simplex, Field::Rational).is_acyclic());
        assert!(reduced_homology(&simplex, Field::Prime(2)).is_acyclic());
    }

    #[test]
    fn void_and_irrelevant_conventions() {
        let void = SimplicialComplex::void(vs(&[0, 1]));
        assert!(reduced_homology(&void, Field::Rational).is_acyclic());
        let irr = SimplicialComplex::irrelevant(vs(&[0, 1]));
        let h = reduced_homology(&irr, Field::Prime(3));
        assert_eq!(h.iter().collect::<Vec<_>>(), vec![(-1, 1)]);
        assert_ne!(void, SimplicialComplex::irrelevant(vs(&[0, 1])));
    }

    #[test]
    fn two_points_have_h0() {
        let k = SimplicialComplex::from_faces(vs(&[0, 1]), [vs(&[0]), vs(&[1])]).unwrap();
        assert_eq!(reduced_homology(&k, Field::Rational).iter().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn restrict_examples() {
        let simplex = SimplicialComplex::simplex(vs(&[0, 1, 2]));
        assert_eq!(simplex.restrict(vs(&[0, 2])), SimplicialComplex::simplex(vs(&[0, 2])));
        assert_eq!(simplex.restrict(VarSet::EMPTY), SimplicialComplex::irrelevant(VarSet::EMPTY));
        let k = SimplicialComplex::from_faces(vs(&[0, 1, 2]), [vs(&[0]), vs(&[1, 2])]).unwrap();
        assert_eq!(k.restrict(vs(&[0, 1])).facets(), &[vs(&[0]), vs(&[1])]);
    }
}
