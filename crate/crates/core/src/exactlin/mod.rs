//! Exact field arithmetic and dense linear algebra: rank, kernel, solve
//! and subspace lattice operations. Everything downstream (homology,
//! colon ideals, orthogonals) reduces to these kernels.

mod matrix;
mod scalar;
mod subspace;

pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar};
pub use subspace::Subspace;

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn small_qmatrix() -> impl Strategy<Value = Matrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-4i64..=4, r * c).prop_map(move |vals| {
                let f = FieldSpec::Rationals;
                Matrix::new(f, r, c, vals.iter().map(|&v| f.scalar_from_i64(v)).collect()).unwrap()
            })
        })
    }

    fn small_subspace(ambient: usize) -> impl Strategy<Value = Subspace> {
        proptest::collection::vec(proptest::collection::vec(-3i64..=3, ambient), 0..4).prop_map(
            move |gens| {
                let f = FieldSpec::Rationals;
                let vs: Vec<Vec<Scalar>> = gens
                    .iter()
                    .map(|g| g.iter().map(|&v| f.scalar_from_i64(v)).collect())
                    .collect();
                Subspace::from_spanning(f, ambient, &vs)
            },
        )
    }

    proptest! {
        #[test]
        fn rank_invariant_under_transpose(m in small_qmatrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_nullity(m in small_qmatrix()) {
            prop_assert_eq!(Subspace::kernel(&m).dim() + m.rank(), m.cols());
        }

        #[test]
        fn modular_law(u in small_subspace(5), v in small_subspace(5)) {
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        }

        #[test]
        fn canonical_form_stable_under_extra_generators(u in small_subspace(4)) {
            // re-spanning with redundant combinations gives the same value
            let mut gens = u.basis_vectors();
            let doubled: Vec<Vec<Scalar>> = gens.iter().map(|g| {
                g.iter().map(|x| x.add(x)).collect()
            }).collect();
            gens.extend(doubled);
            let w = Subspace::from_spanning(u.field(), u.ambient_dim(), &gens);
            prop_assert_eq!(u, w);
        }
    }
}

#[cfg(test)]
mod agreement_tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Rank over Q agrees with rank over F_p for moderate primes on random
    /// integer matrices (fixed seed keeps the check reproducible).
    #[test]
    fn rational_and_prime_field_ranks_agree() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..4 {
            let vals: Vec<i64> = (0..400).map(|_| rng.gen_range(-9..=9)).collect();
            let q = FieldSpec::Rationals;
            let mq = Matrix::new(q, 20, 20, vals.iter().map(|&v| q.scalar_from_i64(v)).collect())
                .unwrap();
            for p in [32749u32, 65521] {
                let fp = FieldSpec::Prime(p);
                let mp =
                    Matrix::new(fp, 20, 20, vals.iter().map(|&v| fp.scalar_from_i64(v)).collect())
                        .unwrap();
                assert_eq!(mq.rank(), mp.rank(), "rank mismatch over F{p}");
            }
        }
    }
}
