//! Small named semigroups used throughout the tests and the CLI.

use super::FiniteSemigroup;

impl FiniteSemigroup {
    pub fn trivial() -> Self {
        FiniteSemigroup::from_parts(1, vec![0], Some(0))
    }

    /// `xy = x` on `n` elements.
    pub fn left_zero(n: usize) -> Self {
        let table = (0..n).flat_map(|i| std::iter::repeat_n(i as u32, n)).collect();
        FiniteSemigroup::from_parts(n, table, None).detect_identity()
    }

    /// `xy = y` on `n` elements.
    pub fn right_zero(n: usize) -> Self {
        let table = (0..n).flat_map(|_| 0..n as u32).collect();
        FiniteSemigroup::from_parts(n, table, None).detect_identity()
    }

    /// `{1, 0}` under meet; element 0 is the identity, element 1 the zero.
    pub fn semilattice2() -> Self {
        FiniteSemigroup::from_parts(2, vec![0, 1, 1, 1], Some(0))
    }

    /// `Z_n` with 0 as identity and 1 as generator.
    pub fn cyclic_group(n: usize) -> Self {
        let table = (0..n).flat_map(|i| (0..n).map(move |j| ((i + j) % n) as u32)).collect();
        FiniteSemigroup::from_parts(n, table, Some(0)).with_generators(vec![1 % n])
    }

    /// `n` elements, every product is 0.
    pub fn null(n: usize) -> Self {
        FiniteSemigroup::from_parts(n, vec![0; n * n], None).detect_identity()
    }

    /// The five-element Brandt semigroup on `a, b, ab, ba, 0` (indices 0..5),
    /// with `aba = a`, `bab = b` and `a² = b² = 0`.
    pub fn brandt_b2() -> Self {
        #[rustfmt::skip]
        let table = vec![
            // a  b  ab ba 0
            4, 2, 4, 0, 4, // a
            3, 4, 1, 4, 4, // b
            0, 4, 2, 4, 4, // ab
            4, 1, 4, 3, 4, // ba
            4, 4, 4, 4, 4, // 0
        ];
        FiniteSemigroup::from_parts(5, table, None).with_generators(vec![0, 1])
    }

    /// Adjoins a fresh identity (as the last element) when there is none.
    pub fn monoid_closure(&self) -> Self {
        if self.identity.is_some() {
            return self.clone();
        }
        let n = self.order;
        let m = n + 1;
        let mut table = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                let v = if i == n { j } else if j == n { i } else { self.mul(i, j) };
                table.push(v as u32);
            }
        }
        FiniteSemigroup::from_parts(m, table, Some(n))
    }
}
