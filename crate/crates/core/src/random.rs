//! Seeded generators for random polynomial forms, algebra-valued forms and
//! generalized forms. Identical seeds give identical sequences on every
//! platform.

use std::sync::Arc;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraValuedForm, HigherAlgebra, LieAlgebra};
use crate::error::Result;
use crate::exterior::OrdinaryForm;
use crate::genform::{slot_offsets, GeneralizedForm, Profile};
use crate::poly::{Monomial, Polynomial};
use crate::rational::Q;

/// Size bounds for generated data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub dim: usize,
    pub max_degree: u32,
    pub max_terms: usize,
    /// Nonzero basis monomials `dx^I` per ordinary form, at most.
    #[serde(default = "default_components")]
    pub max_components: usize,
}

fn default_components() -> usize {
    2
}

impl Bounds {
    pub fn new(dim: usize, max_degree: u32, max_terms: usize) -> Self {
        Bounds {
            dim,
            max_degree,
            max_terms,
            max_components: default_components(),
        }
    }
}

pub struct Sampler {
    rng: ChaCha8Rng,
    pub bounds: Bounds,
}

impl Sampler {
    pub fn new(seed: u64, bounds: Bounds) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bounds,
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// A small rational `a/b` with `|a| ≤ 3`, `b ∈ {1, 2, 3}`.
    pub fn rational(&mut self) -> Q {
        let a = self.rng.gen_range(-3i64..=3);
        let b = self.rng.gen_range(1i64..=3);
        Q::new(a, b)
    }

    pub fn nonzero_rational(&mut self) -> Q {
        loop {
            let q = self.rational();
            if !q.is_zero() {
                return q;
            }
        }
    }

    pub fn polynomial(&mut self) -> Polynomial {
        let n = self.bounds.dim;
        let terms = self.rng.gen_range(1..=self.bounds.max_terms.max(1));
        let mut p = Polynomial::zero(n);
        for _ in 0..terms {
            let total = self.rng.gen_range(0..=self.bounds.max_degree);
            let mut exps = vec![0u32; n];
            for _ in 0..total {
                if n > 0 {
                    exps[self.rng.gen_range(0..n)] += 1;
                }
            }
            let m = Monomial::from_exps(&exps).expect("bounded exponents");
            p.add_term(m, &self.nonzero_rational());
        }
        p
    }

    /// A random `degree`-form with a few nonzero basis components; zero
    /// when the degree is out of range.
    pub fn form(&mut self, degree: i32) -> OrdinaryForm {
        let n = self.bounds.dim;
        let mut out = OrdinaryForm::zero(n, degree);
        if OrdinaryForm::is_degenerate_degree(n, degree) {
            return out;
        }
        let count = self.rng.gen_range(1..=self.bounds.max_components.max(1));
        for _ in 0..count {
            let mut idx: Vec<usize> = sample(&mut self.rng, n, degree as usize)
                .into_iter()
                .map(|i| i + 1)
                .collect();
            idx.sort_unstable();
            let f = self.polynomial();
            let term = OrdinaryForm::monomial(f, &idx).expect("indices in range");
            out = out.add(&term).expect("same shape");
        }
        out
    }

    /// A random algebra-valued form; each component is nonzero with
    /// probability ½ (at least one is).
    pub fn algebra_form(&mut self, alg: &Arc<LieAlgebra>, degree: i32) -> AlgebraValuedForm {
        let n = self.bounds.dim;
        let m = alg.dim();
        let forced = self.rng.gen_range(0..m);
        let comps = (0..m)
            .map(|a| {
                if a == forced || self.rng.gen_bool(0.5) {
                    self.form(degree)
                } else {
                    OrdinaryForm::zero(n, degree)
                }
            })
            .collect();
        AlgebraValuedForm::from_components(alg.clone(), comps).expect("consistent components")
    }

    pub fn real_form(&mut self, degree: i32) -> AlgebraValuedForm {
        AlgebraValuedForm::real(self.form(degree))
    }

    /// A random generalized form with slot algebras taken from `alg` for
    /// the requested profile.
    pub fn generalized(
        &mut self,
        alg: Option<&HigherAlgebra>,
        profile: Profile,
        n_type: u8,
        degree: i32,
    ) -> Result<GeneralizedForm> {
        let template = GeneralizedForm::zero(alg, profile, n_type, self.bounds.dim, degree)?;
        let slots = template
            .slots()
            .iter()
            .zip(slot_offsets(n_type))
            .map(|(s, off)| self.algebra_form(s.algebra(), degree + off))
            .collect();
        GeneralizedForm::new(n_type, degree, slots)
    }
}
