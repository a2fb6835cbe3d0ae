//! Random states, unitaries and channels shared by the integration tests.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use unruh_core::linalg::{kron, ComplexMatrix};
use unruh_core::{herm_eigen, validate_density, DensityMatrix, KrausSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn ginibre(rng: &mut impl Rng, dim: usize) -> ComplexMatrix {
    let entries: Vec<Complex64> = (0..dim * dim).map(|_| gaussian(rng)).collect();
    ComplexMatrix::from_row_major(dim, &entries).unwrap()
}

/// Full-rank two-qubit state `GG†/tr(GG†)` with Ginibre `G`.
pub fn random_state(rng: &mut impl Rng) -> DensityMatrix {
    let g = ginibre(rng, 4);
    let m = g * g.adjoint();
    let t = m.trace().re;
    validate_density(&m.scale(1.0 / t).hermitian_part()).unwrap()
}

/// Random pure state with probability `pure_weight`, else a Ginibre state.
/// Pure states exercise the rank-deficient paths.
pub fn random_state_mixed_ranks(rng: &mut impl Rng, pure_weight: f64) -> DensityMatrix {
    if rng.gen_bool(pure_weight) {
        let v: Vec<Complex64> = (0..4).map(|_| gaussian(rng)).collect();
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        let v: Vec<Complex64> = v.iter().map(|z| z / n).collect();
        validate_density(&ComplexMatrix::outer(&v)).unwrap()
    } else {
        random_state(rng)
    }
}

/// Haar-random SU(2) element from a uniformly random unit quaternion.
pub fn random_su2(rng: &mut impl Rng) -> ComplexMatrix {
    let q: [f64; 4] = [
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    ];
    let n = q.iter().map(|x| x * x).sum::<f64>().sqrt();
    let a = Complex64::new(q[0] / n, q[1] / n);
    let b = Complex64::new(q[2] / n, q[3] / n);
    ComplexMatrix::from_row_major(2, &[a, -b.conj(), b, a.conj()]).unwrap()
}

pub fn random_local_unitary(rng: &mut impl Rng) -> ComplexMatrix {
    kron(&random_su2(rng), &random_su2(rng)).unwrap()
}

pub fn conjugate(rho: &DensityMatrix, u: &ComplexMatrix) -> DensityMatrix {
    validate_density(&rho.matrix().sandwich(u).hermitian_part()).unwrap()
}

/// Random qubit channel with `n` Kraus operators `G_k S^{-1/2}`, where
/// `S = Σ G_k†G_k`.
pub fn random_channel(rng: &mut impl Rng, n: usize) -> KrausSet {
    let gs: Vec<ComplexMatrix> = (0..n).map(|_| ginibre(rng, 2)).collect();
    let mut s = ComplexMatrix::zeros(2);
    for g in &gs {
        s = s + g.adjoint() * *g;
    }
    let inv_root = herm_eigen(&s.hermitian_part())
        .unwrap()
        .reconstruct_with(|x| 1.0 / x.sqrt());
    let ops = gs.iter().map(|g| g * inv_root).collect();
    KrausSet::new(ops, "random").unwrap()
}
