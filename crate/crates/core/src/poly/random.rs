//! Seeded random polynomials for property checks.

use alloc::sync::Arc;
use alloc::vec;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Monomial, Polynomial};
use crate::algebra::HypercomplexBasis;
use crate::rational::{ratio, Rational};

/// Shape of a random polynomial: terms have total degree at most
/// `max_degree`, coefficients are single algebra basis elements with small
/// rational weights.
#[derive(Clone, Copy, Debug)]
pub struct RandomPolySpec {
    pub max_degree: u32,
    pub max_terms: usize,
    /// Skip `x0` when `false`.
    pub use_x0: bool,
}

impl Default for RandomPolySpec {
    fn default() -> Self {
        RandomPolySpec { max_degree: 4, max_terms: 4, use_x0: true }
    }
}

pub(crate) fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut num = rng.gen_range(-5i64..=5);
    if num == 0 {
        num = 1;
    }
    ratio(num, rng.gen_range(1i64..=3))
}

impl Polynomial {
    pub fn random(basis: &Arc<HypercomplexBasis>, shape: RandomPolySpec, seed: u64) -> Polynomial {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::random_with(basis, shape, &mut rng)
    }

    pub(crate) fn random_with(basis: &Arc<HypercomplexBasis>, shape: RandomPolySpec, rng: &mut ChaCha8Rng) -> Polynomial {
        let vars = basis.n() + 1;
        let dim = basis.spec().dim();
        let first_var = if shape.use_x0 { 0 } else { 1 };
        let count = rng.gen_range(1..=shape.max_terms.max(1));
        let mut out = Polynomial::zero(basis);
        for _ in 0..count {
            let degree = rng.gen_range(0..=shape.max_degree);
            let mut exps = vec![0u32; vars];
            for _ in 0..degree {
                exps[rng.gen_range(first_var..vars)] += 1;
            }
            let mut coords = vec![Rational::from_integer(0.into()); dim];
            coords[rng.gen_range(0..dim)] = small_rational(rng);
            out.add_term(Monomial::from_exponents(exps), coords);
        }
        out
    }
}
