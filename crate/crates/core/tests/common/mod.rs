//! An independent Grassmann-algebra model of generalized forms.
//!
//! `dx¹..dxⁿ, ξ¹..ξᴺ` are treated as n+N odd generators of one Grassmann
//! algebra, ordered with the ξ's last, so "coefficients to the left of ξ" is
//! the canonical monomial order. Products and derivatives use nothing but
//! permutation signs.

#![allow(dead_code)]

use std::collections::BTreeMap;

use hgauge::exterior::OrdinaryForm;
use hgauge::poly::Polynomial;
use hgauge::Q;

#[derive(Clone, Debug, PartialEq)]
pub struct Grassmann {
    pub n: usize,
    pub terms: BTreeMap<Vec<usize>, Polynomial>,
}

impl Grassmann {
    pub fn zero(n: usize) -> Self {
        Grassmann { n, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, gens: Vec<usize>, f: &Polynomial, c: &Q) {
        let e = self.terms.entry(gens.clone()).or_insert_with(|| Polynomial::zero(self.n));
        e.add_scaled(f, c);
        if e.is_zero() {
            self.terms.remove(&gens);
        }
    }

    pub fn add(&self, other: &Grassmann) -> Grassmann {
        let mut r = self.clone();
        for (g, f) in &other.terms {
            r.add_term(g.clone(), f, &Q::one());
        }
        r
    }

    pub fn mul(&self, other: &Grassmann) -> Grassmann {
        let mut r = Grassmann::zero(self.n);
        for (i, f) in &self.terms {
            for (j, g) in &other.terms {
                if let Some((gens, odd)) = sort_generators(i.iter().chain(j).copied().collect()) {
                    let c = if odd { Q::from_int(-1) } else { Q::one() };
                    r.add_term(gens, &f.mul(g), &c);
                }
            }
        }
        r
    }

    /// `d` with `dxⁱ` closed and `dξʲ = ks[j]`, every generator odd.
    pub fn d(&self, ks: &[Q]) -> Grassmann {
        let mut r = Grassmann::zero(self.n);
        for (gens, f) in &self.terms {
            for i in 0..self.n {
                let mut g = vec![i + 1];
                g.extend(gens);
                if let Some((sorted, odd)) = sort_generators(g) {
                    let c = if odd { Q::from_int(-1) } else { Q::one() };
                    r.add_term(sorted, &f.diff(i), &c);
                }
            }
            for (pos, &x) in gens.iter().enumerate() {
                if x > self.n {
                    let mut rest = gens.clone();
                    rest.remove(pos);
                    let c = &Q::sign(pos as i64) * &ks[x - self.n - 1];
                    r.add_term(rest, f, &c);
                }
            }
        }
        r
    }
}

/// Sorts a generator word, returning `None` on a repeat and the parity of
/// the permutation otherwise.
pub fn sort_generators(mut w: Vec<usize>) -> Option<(Vec<usize>, bool)> {
    let mut odd = false;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] == w[j + 1] {
                return None;
            }
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    if w.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    Some((w, odd))
}

/// `form ∧ ξ^{xi}` as a Grassmann element.
pub fn ordinary(n: usize, form: &OrdinaryForm, xi: &[usize]) -> Grassmann {
    let mut r = Grassmann::zero(n);
    for (set, f) in form.components() {
        let mut g: Vec<usize> = (0..n).filter(|i| set & (1 << i) != 0).map(|i| i + 1).collect();
        g.extend(xi.iter().map(|j| n + j));
        r.add_term(g, f, &Q::one());
    }
    r
}

/// The ξ word attached to each slot.
pub fn slot_words(n_type: u8) -> Vec<Vec<usize>> {
    match n_type {
        0 => vec![vec![]],
        1 => vec![vec![], vec![1]],
        _ => vec![vec![], vec![1], vec![2], vec![1, 2]],
    }
}

pub fn xi(n: usize, j: usize) -> Grassmann {
    let mut r = Grassmann::zero(n);
    r.add_term(vec![n + j], &Polynomial::one(n), &Q::one());
    r
}
