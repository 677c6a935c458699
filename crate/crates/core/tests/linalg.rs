use cuntz_core::linalg::{null_space_with_width, rank};
use cuntz_core::scalar::int;
use cuntz_core::Scalar;
use num_traits::Zero;
use proptest::prelude::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec((-2i64..=2).prop_map(int), cols), rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn kernel_vectors_solve_and_count(m in (1usize..6, 1usize..7).prop_flat_map(|(r, c)| matrix(r, c))) {
        let width = m[0].len();
        let kernel = null_space_with_width(&m, width);
        for v in &kernel {
            for row in &m {
                let dot = row.iter().zip(v).fold(Scalar::zero(), |acc, (a, b)| acc + a * b);
                prop_assert!(dot.is_zero());
            }
        }
        let sparse: Vec<_> = m.iter()
            .map(|row| row.iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        prop_assert_eq!(rank(&sparse, width) + kernel.len(), width);
        let kernel_sparse: Vec<_> = kernel.iter()
            .map(|row| row.iter().cloned().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        prop_assert_eq!(rank(&kernel_sparse, width), kernel.len());
    }
}
