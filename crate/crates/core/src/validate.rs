//! Executable axiom checks for Lie algebras, differential crossed modules,
//! differential 2-crossed modules and their invariant pairings.
//!
//! Every identity is tested on all basis tuples, so an empty report is a
//! proof of validity for the given structure constants.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{HigherAlgebra, LieAlgebra, PairingKind};
use crate::linalg::{basis_vector, vec_add, vec_is_zero, vec_scale, vec_sub, Bilinear, Matrix};
use crate::rational::Q;

/// One violated identity: its name, the first failing basis tuple, and how
/// many tuples fail.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub check: String,
    pub witness: Vec<usize>,
    pub count: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub subject: String,
    pub checked: Vec<String>,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn new(subject: impl Into<String>) -> Self {
        ValidationReport {
            subject: subject.into(),
            ..Default::default()
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self) -> BTreeSet<&str> {
        self.violations.iter().map(|v| v.check.as_str()).collect()
    }

    pub fn has_violation(&self, check: &str) -> bool {
        self.violations.iter().any(|v| v.check == check)
    }

    pub(crate) fn begin(&mut self, check: &str) {
        if !self.checked.iter().any(|c| c == check) {
            self.checked.push(check.to_string());
        }
    }

    pub(crate) fn fail(&mut self, check: &str, witness: &[usize]) {
        if let Some(v) = self.violations.iter_mut().find(|v| v.check == check) {
            v.count += 1;
        } else {
            self.violations.push(Violation {
                check: check.to_string(),
                witness: witness.to_vec(),
                count: 1,
            });
        }
    }

    pub(crate) fn expect(&mut self, check: &str, witness: &[usize], holds: bool) {
        if !holds {
            self.fail(check, witness);
        }
    }

    /// Folds another report in, prefixing its check names.
    pub fn absorb(&mut self, prefix: &str, other: ValidationReport) {
        for c in other.checked {
            self.begin(&format!("{prefix}{c}"));
        }
        for mut v in other.violations {
            v.check = format!("{prefix}{}", v.check);
            self.violations.push(v);
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "{}: valid ({} checks)", self.subject, self.checked.len());
        }
        write!(f, "{}: {} violated", self.subject, self.violations.len())?;
        for v in &self.violations {
            write!(f, "; {} at {:?} (x{})", v.check, v.witness, v.count)?;
        }
        Ok(())
    }
}

pub fn validate_lie_algebra(alg: &LieAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new(alg.name());
    let f = alg.structure();
    let m = alg.dim();
    r.begin("antisymmetry");
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                r.expect("antisymmetry", &[a, b, c], (f.get(a, b, c) + f.get(b, a, c)).is_zero());
            }
        }
    }
    r.begin("jacobi");
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                for e in 0..m {
                    let s: Q = (0..m)
                        .map(|d| {
                            f.get(b, c, d) * f.get(a, d, e)
                                + f.get(c, a, d) * f.get(b, d, e)
                                + f.get(a, b, d) * f.get(c, d, e)
                        })
                        .sum();
                    r.expect("jacobi", &[a, b, c, e], s.is_zero());
                }
            }
        }
    }
    if let Some(basis) = alg.realization() {
        r.begin("realization");
        for a in 0..m {
            for b in 0..m {
                let comm = basis[a]
                    .mul(&basis[b])
                    .and_then(|x| x.sub(&basis[b].mul(&basis[a])?));
                let mut rhs = Matrix::zeros(basis[0].rows(), basis[0].cols());
                for (c, e) in basis.iter().enumerate() {
                    rhs = rhs.add(&e.scale(f.get(a, b, c))).expect("same shape");
                }
                r.expect("realization", &[a, b], comm.map(|x| x == rhs).unwrap_or(false));
            }
        }
    }
    r
}

/// Coordinate-level operations shared by the crossed-module checks.
struct Ops<'a> {
    g: &'a LieAlgebra,
    h: &'a LieAlgebra,
    alpha: &'a Matrix,
    act: &'a Bilinear,
}

impl Ops<'_> {
    fn gb(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.g.bracket_vec(x, y)
    }
    fn hb(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.h.bracket_vec(x, y)
    }
    fn a(&self, y: &[Q]) -> Vec<Q> {
        self.alpha.apply(y)
    }
    fn act(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.act.apply(x, y)
    }
}

/// The crossed-module identities for `(h → g; alpha, act)`, named after the
/// role they play. Used both for the given data and for the induced
/// `(𝔩, 𝔥; β, ▷′)`.
fn crossed_identities(r: &mut ValidationReport, prefix: &str, o: &Ops<'_>, with_peiffer: bool) {
    let (dg, dh) = (o.g.dim(), o.h.dim());
    let e = |n: usize, i: usize| basis_vector(n, i);
    let name = |s: &str| format!("{prefix}{s}");

    let hom = name("alpha-homomorphism");
    r.begin(&hom);
    for i in 0..dh {
        for j in 0..dh {
            let (y1, y2) = (e(dh, i), e(dh, j));
            let lhs = o.a(&o.hb(&y1, &y2));
            let rhs = o.gb(&o.a(&y1), &o.a(&y2));
            r.expect(&hom, &[i, j], lhs == rhs);
        }
    }
    let eqv = name("alpha-equivariance");
    r.begin(&eqv);
    for x in 0..dg {
        for j in 0..dh {
            let (xv, y) = (e(dg, x), e(dh, j));
            let lhs = o.a(&o.act(&xv, &y));
            let rhs = o.gb(&xv, &o.a(&y));
            r.expect(&eqv, &[x, j], lhs == rhs);
        }
    }
    if with_peiffer {
        let pf = name("peiffer");
        r.begin(&pf);
        for i in 0..dh {
            for j in 0..dh {
                let (y1, y2) = (e(dh, i), e(dh, j));
                r.expect(&pf, &[i, j], o.act(&o.a(&y1), &y2) == o.hb(&y1, &y2));
            }
        }
    }
    action_identities(r, prefix, o.g, o.h, o.act);
}

/// `▷` acts by derivations and is a representation.
fn action_identities(r: &mut ValidationReport, prefix: &str, g: &LieAlgebra, h: &LieAlgebra, act: &Bilinear) {
    let (dg, dh) = (g.dim(), h.dim());
    let e = |n: usize, i: usize| basis_vector(n, i);
    let der = format!("{prefix}action-derivation");
    r.begin(&der);
    for x in 0..dg {
        for i in 0..dh {
            for j in 0..dh {
                let (xv, y1, y2) = (e(dg, x), e(dh, i), e(dh, j));
                let lhs = act.apply(&xv, &h.bracket_vec(&y1, &y2));
                let rhs = vec_add(
                    &h.bracket_vec(&act.apply(&xv, &y1), &y2),
                    &h.bracket_vec(&y1, &act.apply(&xv, &y2)),
                );
                r.expect(&der, &[x, i, j], lhs == rhs);
            }
        }
    }
    let rep = format!("{prefix}action-representation");
    r.begin(&rep);
    for a in 0..dg {
        for b in 0..dg {
            for j in 0..dh {
                let (x1, x2, y) = (e(dg, a), e(dg, b), e(dh, j));
                let lhs = act.apply(&g.bracket_vec(&x1, &x2), &y);
                let rhs = vec_sub(
                    &act.apply(&x1, &act.apply(&x2, &y)),
                    &act.apply(&x2, &act.apply(&x1, &y)),
                );
                r.expect(&rep, &[a, b, j], lhs == rhs);
            }
        }
    }
}

fn missing(r: &mut ValidationReport, what: &str) {
    r.begin(what);
    r.fail(what, &[]);
}

pub fn validate_crossed_module(d: &HigherAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new(&d.name);
    let (Some(h), Some(alpha), Some(act)) = (&d.h, &d.alpha, &d.act_h) else {
        missing(&mut r, "crossed-module-data");
        return r;
    };
    r.absorb("g:", validate_lie_algebra(&d.g));
    r.absorb("h:", validate_lie_algebra(h));
    let ops = Ops {
        g: &d.g,
        h,
        alpha,
        act,
    };
    crossed_identities(&mut r, "", &ops, true);
    r
}

pub fn validate_two_crossed_module(d: &HigherAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new(&d.name);
    let (Some(h), Some(l), Some(alpha), Some(beta), Some(act_h), Some(act_l), Some(pf)) =
        (&d.h, &d.l, &d.alpha, &d.beta, &d.act_h, &d.act_l, &d.peiffer)
    else {
        missing(&mut r, "two-crossed-module-data");
        return r;
    };
    let g = &*d.g;
    let (dg, dh, dl) = (g.dim(), h.dim(), l.dim());
    r.absorb("g:", validate_lie_algebra(g));
    r.absorb("h:", validate_lie_algebra(h));
    r.absorb("l:", validate_lie_algebra(l));

    let e = |n: usize, i: usize| basis_vector(n, i);
    let gb = |x: &[Q], y: &[Q]| g.bracket_vec(x, y);
    let hb = |x: &[Q], y: &[Q]| h.bracket_vec(x, y);
    let lb = |x: &[Q], y: &[Q]| l.bracket_vec(x, y);
    let al = |y: &[Q]| alpha.apply(y);
    let be = |z: &[Q]| beta.apply(z);
    let ah = |x: &[Q], y: &[Q]| act_h.apply(x, y);
    let alx = |x: &[Q], z: &[Q]| act_l.apply(x, z);
    let br = |y1: &[Q], y2: &[Q]| pf.apply(y1, y2);

    // g acts on h and l by derivations, as representations
    action_identities(&mut r, "h-", g, h, act_h);
    action_identities(&mut r, "l-", g, l, act_l);

    r.begin("alpha-homomorphism");
    r.begin("beta-homomorphism");
    for i in 0..dh {
        for j in 0..dh {
            let (y1, y2) = (e(dh, i), e(dh, j));
            r.expect("alpha-homomorphism", &[i, j], al(&hb(&y1, &y2)) == gb(&al(&y1), &al(&y2)));
        }
    }
    for i in 0..dl {
        for j in 0..dl {
            let (z1, z2) = (e(dl, i), e(dl, j));
            r.expect("beta-homomorphism", &[i, j], be(&lb(&z1, &z2)) == hb(&be(&z1), &be(&z2)));
        }
    }

    // axiom 1: a complex of g-modules with αβ = 0
    r.begin("axiom-1-alpha-equivariance");
    r.begin("axiom-1-beta-equivariance");
    r.begin("axiom-1-complex");
    for x in 0..dg {
        let xv = e(dg, x);
        for j in 0..dh {
            let y = e(dh, j);
            r.expect("axiom-1-alpha-equivariance", &[x, j], al(&ah(&xv, &y)) == gb(&xv, &al(&y)));
        }
        for k in 0..dl {
            let z = e(dl, k);
            r.expect("axiom-1-beta-equivariance", &[x, k], be(&alx(&xv, &z)) == ah(&xv, &be(&z)));
        }
    }
    for k in 0..dl {
        r.expect("axiom-1-complex", &[k], vec_is_zero(&al(&be(&e(dl, k)))));
    }

    r.begin("axiom-2");
    r.begin("peiffer-equivariance");
    for i in 0..dh {
        for j in 0..dh {
            let (y1, y2) = (e(dh, i), e(dh, j));
            let rhs = vec_sub(&hb(&y1, &y2), &ah(&al(&y1), &y2));
            r.expect("axiom-2", &[i, j], be(&br(&y1, &y2)) == rhs);
            for x in 0..dg {
                let xv = e(dg, x);
                let lhs = alx(&xv, &br(&y1, &y2));
                let rhs = vec_add(&br(&ah(&xv, &y1), &y2), &br(&y1, &ah(&xv, &y2)));
                r.expect("peiffer-equivariance", &[x, i, j], lhs == rhs);
            }
        }
    }

    r.begin("axiom-3");
    for i in 0..dl {
        for j in 0..dl {
            let (z1, z2) = (e(dl, i), e(dl, j));
            r.expect("axiom-3", &[i, j], lb(&z1, &z2) == br(&be(&z1), &be(&z2)));
        }
    }

    r.begin("axiom-4");
    r.begin("axiom-4-second-form");
    r.begin("axiom-5");
    for i in 0..dh {
        for j in 0..dh {
            for k in 0..dh {
                let (y1, y2, y3) = (e(dh, i), e(dh, j), e(dh, k));
                let lhs = br(&hb(&y1, &y2), &y3);
                let rhs = vec_sub(
                    &vec_add(&alx(&al(&y1), &br(&y2, &y3)), &br(&y1, &hb(&y2, &y3))),
                    &vec_add(&alx(&al(&y2), &br(&y1, &y3)), &br(&y2, &hb(&y1, &y3))),
                );
                r.expect("axiom-4", &[i, j, k], lhs == rhs);
                let rhs2 = vec_add(
                    &vec_sub(&br(&ah(&al(&y1), &y2), &y3), &br(&ah(&al(&y2), &y1), &y3)),
                    &vec_sub(&br(&y1, &be(&br(&y2, &y3))), &br(&y2, &be(&br(&y1, &y3)))),
                );
                r.expect("axiom-4-second-form", &[i, j, k], lhs == rhs2);
                let lhs5 = br(&y1, &hb(&y2, &y3));
                let rhs5 = vec_sub(&br(&be(&br(&y1, &y2)), &y3), &br(&be(&br(&y1, &y3)), &y2));
                r.expect("axiom-5", &[i, j, k], lhs5 == rhs5);
            }
        }
    }

    r.begin("axiom-6");
    for k in 0..dl {
        for j in 0..dh {
            let (z, y) = (e(dl, k), e(dh, j));
            let lhs = vec_add(&br(&be(&z), &y), &br(&y, &be(&z)));
            let rhs = vec_scale(&alx(&al(&y), &z), &Q::from_int(-1));
            r.expect("axiom-6", &[k, j], lhs == rhs);
        }
    }

    // (𝔩, 𝔥; β, ▷′) is a crossed module
    match d.act_prime_tensor() {
        Ok(prime) => {
            let ops = Ops {
                g: h,
                h: l,
                alpha: beta,
                act: &prime,
            };
            crossed_identities(&mut r, "induced-", &ops, true);
            if d.fine {
                r.begin("fine");
                for j in 0..dh {
                    for k in 0..dl {
                        let (y, z) = (e(dh, j), e(dl, k));
                        r.expect("fine", &[j, k], alx(&al(&y), &z) == prime.apply(&y, &z));
                    }
                }
            }
        }
        Err(_) => missing(&mut r, "induced-action"),
    }

    if d.abelian_h {
        r.begin("abelian-h");
        r.expect("abelian-h", &[], h.is_abelian() && alpha.is_zero());
        r.begin("abelian-h-beta-peiffer");
        r.begin("abelian-h-l-bracket");
        r.begin("abelian-h-antisymmetric-lift");
        for i in 0..dh {
            for j in 0..dh {
                r.expect("abelian-h-beta-peiffer", &[i, j], vec_is_zero(&be(&br(&e(dh, i), &e(dh, j)))));
            }
        }
        for i in 0..dl {
            for j in 0..dl {
                let (z1, z2) = (e(dl, i), e(dl, j));
                r.expect("abelian-h-l-bracket", &[i, j], lb(&z1, &z2) == br(&be(&z1), &be(&z2)));
            }
        }
        for k in 0..dl {
            for j in 0..dh {
                let (z, y) = (e(dl, k), e(dh, j));
                let s = vec_add(&br(&be(&z), &y), &br(&y, &be(&z)));
                r.expect("abelian-h-antisymmetric-lift", &[k, j], vec_is_zero(&s));
            }
        }
    }
    r
}

fn check_symmetric_nondegenerate(r: &mut ValidationReport, name: &str, m: &Matrix) {
    let sym = format!("{name}-symmetric");
    r.begin(&sym);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            r.expect(&sym, &[i, j], m.get(i, j) == m.get(j, i));
        }
    }
    let nd = format!("{name}-nondegenerate");
    r.begin(&nd);
    r.expect(&nd, &[], m.rows() == m.cols() && m.rank() == m.rows());
}

pub fn validate_pairings(d: &HigherAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new(format!("{} pairings", d.name));
    let p = &d.pairings;
    let dg = d.g.dim();
    let e = |n: usize, i: usize| basis_vector(n, i);

    if let Some(m) = &p.sym_g {
        check_symmetric_nondegenerate(&mut r, "sym-g", m);
    }
    if let Some(m) = &p.sym_h {
        check_symmetric_nondegenerate(&mut r, "sym-h", m);
    }
    if let Some(m) = &p.sym_l {
        check_symmetric_nondegenerate(&mut r, "sym-l", m);
    }

    if let (Some(m), Some(h), Some(alpha), Some(act)) = (&p.gh, &d.h, &d.alpha, &d.act_h) {
        let dh = h.dim();
        r.begin("gh-nondegenerate");
        r.expect("gh-nondegenerate", &[], m.rows() == m.cols() && m.rank() == m.rows());
        r.begin("symp");
        for i in 0..dh {
            for j in 0..dh {
                let (y1, y2) = (e(dh, i), e(dh, j));
                let lhs = m.bilinear(&alpha.apply(&y1), &y2);
                let rhs = m.bilinear(&alpha.apply(&y2), &y1);
                r.expect("symp", &[i, j], lhs == rhs);
            }
        }
        r.begin("XXY");
        for a in 0..dg {
            for b in 0..dg {
                for j in 0..dh {
                    let (x1, x2, y) = (e(dg, a), e(dg, b), e(dh, j));
                    let lhs = m.bilinear(&d.g.bracket_vec(&x1, &x2), &y);
                    let rhs = -m.bilinear(&x2, &act.apply(&x1, &y));
                    r.expect("XXY", &[a, b, j], lhs == rhs);
                }
            }
        }
    }

    if d.level() == 3 {
        let (Some(h), Some(l)) = (&d.h, &d.l) else {
            return r;
        };
        let (dh, dl) = (h.dim(), l.dim());
        if let Some(w) = &p.h_anti {
            r.begin("h-antisymmetric");
            for i in 0..dh {
                for j in 0..dh {
                    r.expect("h-antisymmetric", &[i, j], (w.get(i, j) + w.get(j, i)).is_zero());
                }
            }
            r.begin("h-nondegenerate");
            r.expect("h-nondegenerate", &[], w.rank() == dh);
            r.begin("h-bracket-invariance");
            for a in 0..dh {
                for i in 0..dh {
                    for j in 0..dh {
                        let (y, y1, y2) = (e(dh, a), e(dh, i), e(dh, j));
                        let lhs = w.bilinear(&h.bracket_vec(&y, &y1), &y2);
                        let rhs = -w.bilinear(&y1, &h.bracket_vec(&y, &y2));
                        r.expect("h-bracket-invariance", &[a, i, j], lhs == rhs);
                    }
                }
            }
            if let Some(act) = &d.act_h {
                r.begin("YX");
                for x in 0..dg {
                    for i in 0..dh {
                        for j in 0..dh {
                            let (xv, y, y1) = (e(dg, x), e(dh, i), e(dh, j));
                            let lhs = w.bilinear(&y, &act.apply(&xv, &y1));
                            let rhs = w.bilinear(&y1, &act.apply(&xv, &y));
                            r.expect("YX", &[x, i, j], lhs == rhs);
                        }
                    }
                }
            }
        }
        if let Some(m) = &p.gl {
            r.begin("balanced");
            r.expect("balanced", &[dg, dl], dg == dl);
            r.begin("gl-nondegenerate");
            r.expect("gl-nondegenerate", &[], m.rows() == m.cols() && m.rank() == m.rows());
            if let Some(act_l) = &d.act_l {
                r.begin("XZ");
                for a in 0..dg {
                    for b in 0..dg {
                        for k in 0..dl {
                            let (x1, x2, z) = (e(dg, a), e(dg, b), e(dl, k));
                            let lhs = m.bilinear(&d.g.bracket_vec(&x1, &x2), &z);
                            let rhs = -m.bilinear(&x2, &act_l.apply(&x1, &z));
                            r.expect("XZ", &[a, b, k], lhs == rhs);
                        }
                    }
                }
            }
            if let (Some(w), Some(alpha), Some(beta)) = (&p.h_anti, &d.alpha, &d.beta) {
                r.begin("YZ");
                for j in 0..dh {
                    for k in 0..dl {
                        let (y, z) = (e(dh, j), e(dl, k));
                        let lhs = m.bilinear(&alpha.apply(&y), &z);
                        let rhs = -w.bilinear(&beta.apply(&z), &y);
                        r.expect("YZ", &[j, k], lhs == rhs);
                    }
                }
            }
            if let (Some(w), Some(act), Some(pf)) = (&p.h_anti, &d.act_h, &d.peiffer) {
                r.begin("XYY");
                for x in 0..dg {
                    for i in 0..dh {
                        for j in 0..dh {
                            let (xv, y1, y2) = (e(dg, x), e(dh, i), e(dh, j));
                            let lhs = m.bilinear(&xv, &pf.apply(&y1, &y2));
                            let rhs = &Q::half() * &w.bilinear(&y2, &act.apply(&xv, &y1));
                            r.expect("XYY", &[x, i, j], lhs == rhs);
                        }
                    }
                }
            }
        }
    }
    r
}

/// Every applicable validator, merged into one report.
pub fn validate_all(d: &HigherAlgebra) -> ValidationReport {
    let mut r = ValidationReport::new(&d.name);
    match d.level() {
        1 => r.absorb("g:", validate_lie_algebra(&d.g)),
        2 => r.absorb("", validate_crossed_module(d)),
        _ => r.absorb("", validate_two_crossed_module(d)),
    }
    r.absorb("", validate_pairings(d));
    if let Err(e) = d.check_shapes() {
        missing(&mut r, &format!("shape: {e}"));
    }
    r
}

/// Pairing kinds that are present and usable with this algebra.
pub fn available_pairings(d: &HigherAlgebra) -> Vec<PairingKind> {
    crate::algebra::ALL_PAIRINGS
        .into_iter()
        .filter(|k| d.pairings.get(*k).is_some() && d.pairing_algebras(*k).is_ok())
        .collect()
}
