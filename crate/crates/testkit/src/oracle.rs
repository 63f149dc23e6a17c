//! Brute-force evaluation of every axiom on dense coordinates, using only the
//! public API: brackets through `TernaryBracket::eval`, rho through
//! `TwoCycle::value` on summed degrees, non-degeneracy through determinants.

use colorlie::prelie::PreLieRepBundle;
use colorlie::representations::RepresentationBundle;
use colorlie::{Algebra3Rho, AlgebraKind, GroupElement, Matrix, Scalar, TernaryBracket};

type V = Vec<Scalar>;

fn add(a: &[Scalar], b: &[Scalar]) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Scalar], b: &[Scalar]) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(c: &Scalar, a: &[Scalar]) -> V {
    a.iter().map(|x| c * x).collect()
}

fn zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

fn dot(a: &[Scalar], m: &Matrix, b: &[Scalar]) -> Scalar {
    let mb = m.mul_vec(b);
    a.iter()
        .zip(&mb)
        .fold(Scalar::zero(m.order()), |acc, (x, y)| acc + x * y)
}

fn nondegenerate(m: &Matrix) -> bool {
    m.determinant().map(|d| !d.is_zero()).unwrap_or(false)
}

struct Dense<'a> {
    alg: &'a Algebra3Rho,
}

impl<'a> Dense<'a> {
    fn d(&self) -> usize {
        self.alg.dim()
    }

    fn e(&self, i: usize) -> V {
        let o = self.alg.order();
        (0..self.d())
            .map(|k| if k == i { Scalar::one(o) } else { Scalar::zero(o) })
            .collect()
    }

    fn deg(&self, idx: &[usize]) -> GroupElement {
        let g = self.alg.group();
        g.sum(idx.iter().map(|&i| self.alg.basis().degree(i)))
    }

    fn rho(&self, a: &[usize], b: &[usize]) -> Scalar {
        self.alg.rho().value(&self.deg(a), &self.deg(b))
    }

    fn br(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> V {
        self.alg.bracket().eval(x, y, z)
    }

    fn phi(&self, x: &[Scalar]) -> V {
        self.alg.twist().mul_vec(x)
    }

    fn pe(&self, i: usize) -> V {
        self.phi(&self.e(i))
    }

    fn ee(&self, i: usize, j: usize, k: usize) -> V {
        self.br(&self.e(i), &self.e(j), &self.e(k))
    }

    fn degrees_ok(&self) -> bool {
        let basis = self.alg.basis();
        for i in 0..self.d() {
            for j in 0..self.d() {
                for k in 0..self.d() {
                    let target = self.deg(&[i, j, k]);
                    let v = self.ee(i, j, k);
                    if v.iter().enumerate().any(|(l, c)| !c.is_zero() && *basis.degree(l) != target) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn commutator(&self, i: usize, j: usize, k: usize) -> V {
        let a = self.ee(i, j, k);
        let b = scale(&self.rho(&[i], &[j, k]), &self.ee(j, k, i));
        let c = scale(&self.rho(&[i, j], &[k]), &self.ee(k, i, j));
        add(&add(&a, &b), &c)
    }
}

/// Degree, adjacent skew-symmetry and the (twisted) fundamental identity.
pub fn lie(alg: &Algebra3Rho) -> bool {
    let s = Dense { alg };
    let d = s.d();
    if !s.degrees_ok() {
        return false;
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                let v = s.ee(i, j, k);
                if !zero(&add(&v, &scale(&s.rho(&[i], &[j]), &s.ee(j, i, k)))) {
                    return false;
                }
                if !zero(&add(&v, &scale(&s.rho(&[j], &[k]), &s.ee(i, k, j)))) {
                    return false;
                }
            }
        }
    }
    for x in 0..d {
        for y in 0..d {
            for u in 0..d {
                for v in 0..d {
                    for w in 0..d {
                        let lhs = s.br(&s.pe(x), &s.pe(y), &s.ee(u, v, w));
                        let t1 = s.br(&s.ee(x, y, u), &s.pe(v), &s.pe(w));
                        let t2 = scale(&s.rho(&[x, y], &[u]), &s.br(&s.pe(u), &s.ee(x, y, v), &s.pe(w)));
                        let t3 = scale(&s.rho(&[x, y], &[u, v]), &s.br(&s.pe(u), &s.pe(v), &s.ee(x, y, w)));
                        if !zero(&sub(&lhs, &add(&add(&t1, &t2), &t3))) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Degree, skew in slots 1,2 and both (twisted) pre-Lie identities.
pub fn pre_lie(alg: &Algebra3Rho) -> bool {
    let s = Dense { alg };
    let d = s.d();
    if !s.degrees_ok() {
        return false;
    }
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                if !zero(&add(&s.ee(i, j, k), &scale(&s.rho(&[i], &[j]), &s.ee(j, i, k)))) {
                    return false;
                }
            }
        }
    }
    let c = |i, j, k| s.commutator(i, j, k);
    for a in 0..d {
        for b in 0..d {
            for x in 0..d {
                for y in 0..d {
                    for z in 0..d {
                        let lhs = s.br(&s.pe(a), &s.pe(b), &s.ee(x, y, z));
                        let t1 = s.br(&c(a, b, x), &s.pe(y), &s.pe(z));
                        let t2 = scale(&s.rho(&[a, b], &[x]), &s.br(&s.pe(x), &c(a, b, y), &s.pe(z)));
                        let t3 = scale(&s.rho(&[a, b], &[x, y]), &s.br(&s.pe(x), &s.pe(y), &s.ee(a, b, z)));
                        if !zero(&sub(&lhs, &add(&add(&t1, &t2), &t3))) {
                            return false;
                        }
                        // (f1, f2, f3, g1, g2) = (a, b, x, y, z)
                        let lhs = s.br(&c(a, b, x), &s.pe(y), &s.pe(z));
                        let t1 = s.br(&s.pe(a), &s.pe(b), &s.ee(x, y, z));
                        let t2 = scale(&s.rho(&[a], &[b, x]), &s.br(&s.pe(b), &s.pe(x), &s.ee(a, y, z)));
                        let t3 = scale(&s.rho(&[a, b], &[x]), &s.br(&s.pe(x), &s.pe(a), &s.ee(b, y, z)));
                        if !zero(&sub(&lhs, &add(&add(&t1, &t2), &t3))) {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

fn form_symmetry(s: &Dense, m: &Matrix, sign: i64) -> bool {
    let d = s.d();
    for i in 0..d {
        for j in 0..d {
            let a = dot(&s.e(i), m, &s.e(j));
            let b = s.rho(&[i], &[j]) * dot(&s.e(j), m, &s.e(i));
            let ok = if sign > 0 { (a - b).is_zero() } else { (a + b).is_zero() };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// rho-symmetric, non-degenerate, chi([a,b,c],d) = chi(a,[b,c,d]) and, when
/// twisted, phi self-adjoint.
pub fn quadratic(alg: &Algebra3Rho, m: &Matrix) -> bool {
    let s = Dense { alg };
    let d = s.d();
    if !form_symmetry(&s, m, 1) || !nondegenerate(m) {
        return false;
    }
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                for x in 0..d {
                    let l = dot(&s.ee(a, b, c), m, &s.e(x));
                    let r = dot(&s.e(a), m, &s.ee(b, c, x));
                    if !(l - r).is_zero() {
                        return false;
                    }
                    if !(dot(&s.pe(a), m, &s.e(b)) - dot(&s.e(a), m, &s.pe(b))).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// rho-symmetric, non-degenerate and m([f,g,h], phi z) = -rho(f+g,h) m(phi h, [f,g,z]).
pub fn metric(alg: &Algebra3Rho, m: &Matrix) -> bool {
    let s = Dense { alg };
    let d = s.d();
    if !form_symmetry(&s, m, 1) || !nondegenerate(m) {
        return false;
    }
    for f in 0..d {
        for g in 0..d {
            for h in 0..d {
                for z in 0..d {
                    let l = dot(&s.ee(f, g, h), m, &s.pe(z));
                    let r = s.rho(&[f, g], &[h]) * dot(&s.pe(h), m, &s.ee(f, g, z));
                    if !(l + r).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// rho-skew, non-degenerate and the four-term identity with phi in the last slot.
pub fn symplectic(alg: &Algebra3Rho, m: &Matrix) -> bool {
    let s = Dense { alg };
    let d = s.d();
    if !form_symmetry(&s, m, -1) || !nondegenerate(m) {
        return false;
    }
    for a in 0..d {
        for b in 0..d {
            for c in 0..d {
                for x in 0..d {
                    let t1 = dot(&s.ee(a, b, c), m, &s.pe(x));
                    let t2 = s.rho(&[a], &[b, c, x]) * dot(&s.ee(b, c, x), m, &s.pe(a));
                    let t3 = s.rho(&[a, b], &[c, x]) * dot(&s.ee(c, x, a), m, &s.pe(b));
                    let t4 = s.rho(&[a, b, c], &[x]) * dot(&s.ee(x, a, b), m, &s.pe(c));
                    if !(t1 - t2 + t3 - t4).is_zero() {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Operator sum_{a,b} x_a y_b family[a*d+b].
fn act(fam: &[Matrix], d: usize, n: usize, x: &[Scalar], y: &[Scalar]) -> Matrix {
    let o = fam[0].order();
    let mut acc = Matrix::zeros(o, n, n);
    for a in 0..d {
        for b in 0..d {
            let c = &x[a] * &y[b];
            if !c.is_zero() {
                acc = acc.add(&fam[a * d + b].scale(&c));
            }
        }
    }
    acc
}

/// Compares operators by applying them to every basis vector of V.
fn same(l: &Matrix, r: &Matrix) -> bool {
    let n = l.cols();
    let o = l.order();
    (0..n).all(|k| {
        let v: V = (0..n).map(|i| if i == k { Scalar::one(o) } else { Scalar::zero(o) }).collect();
        zero(&sub(&l.mul_vec(&v), &r.mul_vec(&v)))
    })
}

/// The three representation identities and multiplicativity.
pub fn representation(b: &RepresentationBundle) -> bool {
    let s = Dense { alg: b.algebra() };
    let d = s.d();
    let n = b.space().dim();
    let fam = b.mu_all();
    let mu = |x: &[Scalar], y: &[Scalar]| act(fam, d, n, x, y);
    let beta = b.beta();
    for f1 in 0..d {
        for f2 in 0..d {
            let mult = mu(&s.pe(f1), &s.pe(f2)).mul(beta);
            if !same(&mult, &beta.mul(&mu(&s.e(f1), &s.e(f2)))) {
                return false;
            }
            for g1 in 0..d {
                for g2 in 0..d {
                    let pair = mu(&s.ee(f1, f2, g1), &s.pe(g2))
                        .add(&mu(&s.pe(g1), &s.ee(f1, f2, g2)).scale(&s.rho(&[f1, f2], &[g1])));
                    let rhs = mu(&s.pe(f1), &s.pe(f2)).mul(&mu(&s.e(g1), &s.e(g2))).sub(
                        &mu(&s.pe(g1), &s.pe(g2))
                            .mul(&mu(&s.e(f1), &s.e(f2)))
                            .scale(&s.rho(&[f1, f2], &[g1, g2])),
                    );
                    if !same(&pair.mul(beta), &rhs) {
                        return false;
                    }
                    let (h1, h2, h3, f) = (f1, f2, g1, g2);
                    let lhs = mu(&s.ee(h1, h2, h3), &s.pe(f)).mul(beta);
                    let rhs = mu(&s.pe(h1), &s.pe(h2))
                        .mul(&mu(&s.e(h3), &s.e(f)))
                        .add(&mu(&s.pe(h2), &s.pe(h3)).mul(&mu(&s.e(h1), &s.e(f))).scale(&s.rho(&[h1], &[h2, h3])))
                        .add(&mu(&s.pe(h3), &s.pe(h1)).mul(&mu(&s.e(h2), &s.e(f))).scale(&s.rho(&[h1, h2], &[h3])));
                    if !same(&lhs, &rhs) {
                        return false;
                    }
                    let (g, k1, k2, k3) = (f1, f2, g1, g2);
                    let lhs = mu(&s.pe(g), &s.ee(k1, k2, k3)).mul(beta);
                    let rhs = mu(&s.pe(k1), &s.pe(k2))
                        .mul(&mu(&s.e(g), &s.e(k3)))
                        .scale(&s.rho(&[g], &[k1, k2]))
                        .add(
                            &mu(&s.pe(k2), &s.pe(k3))
                                .mul(&mu(&s.e(g), &s.e(k1)))
                                .scale(&(s.rho(&[g], &[k2, k3]) * s.rho(&[k1], &[k2, k3]))),
                        )
                        .add(
                            &mu(&s.pe(k3), &s.pe(k1))
                                .mul(&mu(&s.e(g), &s.e(k2)))
                                .scale(&(s.rho(&[g], &[k1, k3]) * s.rho(&[k1, k2], &[k3]))),
                        );
                    if !same(&lhs, &rhs) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// mu represents the sub-adjacent algebra and the four mixed identities hold.
pub fn pre_representation(b: &PreLieRepBundle) -> bool {
    let alg = b.prelie();
    let s = Dense { alg };
    let d = s.d();
    let n = b.space().dim();
    let mut c = TernaryBracket::zero(alg.order(), d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                c.set(i, j, k, &s.commutator(i, j, k));
            }
        }
    }
    let sub_alg = alg.with_bracket(c, AlgebraKind::Lie).expect("same shape");
    let mu_bundle = RepresentationBundle::new(sub_alg, b.space().clone(), b.mu_all().to_vec(), Some(b.beta().clone()))
        .expect("validated bundle");
    if !representation(&mu_bundle) {
        return false;
    }
    let m = |x: &[Scalar], y: &[Scalar]| act(b.mu_all(), d, n, x, y);
    let t = |x: &[Scalar], y: &[Scalar]| act(b.mu_tilde_all(), d, n, x, y);
    let e = |i: usize| s.e(i);
    let p = |i: usize| s.pe(i);
    let r = |a: &[usize], c: &[usize]| s.rho(a, c);
    let beta = b.beta();
    let hom = alg.is_hom();
    for f1 in 0..d {
        for f2 in 0..d {
            for f3 in 0..d {
                for f4 in 0..d {
                    let lhs = t(&p(f1), &s.ee(f2, f3, f4)).mul(beta);
                    let rhs = m(&p(f2), &p(f3))
                        .mul(&t(&e(f1), &e(f4)))
                        .scale(&r(&[f1], &[f2, f3]))
                        .add(&t(&p(f3), &p(f4)).mul(&t(&e(f1), &e(f2))).scale(&(r(&[f1], &[f3, f4]) * r(&[f2], &[f3, f4]))))
                        .sub(&t(&p(f2), &p(f4)).mul(&t(&e(f1), &e(f3))).scale(&(r(&[f1], &[f2, f4]) * r(&[f3], &[f4]))))
                        .add(&t(&p(f3), &p(f4)).mul(&m(&e(f1), &e(f2))).scale(&r(&[f1, f2], &[f3, f4])))
                        .add(
                            &t(&p(f2), &p(f4))
                                .mul(&t(&e(f3), &e(f1)))
                                .scale(&(r(&[f1], &[f2, f3, f4]) * r(&[f3], &[f4]))),
                        )
                        .sub(&t(&p(f2), &p(f4)).mul(&m(&e(f1), &e(f3))).scale(&(r(&[f1], &[f2, f4]) * r(&[f3], &[f4]))))
                        .sub(
                            &t(&p(f3), &p(f4))
                                .mul(&t(&e(f2), &e(f1)))
                                .scale(&(r(&[f2], &[f3, f4]) * r(&[f1], &[f2, f3, f4]))),
                        );
                    if !same(&lhs, &rhs) {
                        return false;
                    }

                    let k = r(&[f1, f2], &[f3, f4]);
                    let c_term = t(&s.commutator(f1, f2, f3), &p(f4)).mul(beta);
                    let lhs = m(&p(f1), &p(f2)).mul(&t(&e(f3), &e(f4)));
                    let rhs = t(&p(f3), &p(f4))
                        .mul(&m(&e(f1), &e(f2)))
                        .scale(&k)
                        .sub(&t(&p(f3), &p(f4)).mul(&t(&e(f2), &e(f1))).scale(&(k.clone() * r(&[f1], &[f2]))))
                        .add(&t(&p(f3), &p(f4)).mul(&t(&e(f1), &e(f2))).scale(&k))
                        .add(&c_term)
                        .add(&t(&p(f3), &s.ee(f1, f2, f4)).scale(&r(&[f1, f2], &[f3])));
                    if !same(&lhs, &rhs) {
                        return false;
                    }

                    let rhs = m(&p(f1), &p(f2))
                        .mul(&t(&e(f3), &e(f4)))
                        .add(&m(&p(f2), &p(f3)).mul(&t(&e(f1), &e(f4))).scale(&r(&[f1], &[f2, f3])))
                        .add(&m(&p(f3), &p(f1)).mul(&t(&e(f2), &e(f4))).scale(&r(&[f1, f2], &[f3])));
                    if !same(&c_term, &rhs) {
                        return false;
                    }

                    let k = r(&[f3, f4], &[f1, f2]);
                    let lead = if hom { m(&p(f3), &p(f4)) } else { t(&e(f3), &e(f4)) };
                    let lhs = t(&p(f3), &p(f4)).mul(&m(&e(f1), &e(f2)));
                    let rhs = lead
                        .mul(&t(&e(f2), &e(f1)))
                        .scale(&r(&[f1], &[f2]))
                        .sub(&t(&p(f3), &p(f4)).mul(&t(&e(f1), &e(f2))))
                        .add(&m(&p(f1), &p(f2)).mul(&t(&e(f3), &e(f4))).scale(&k))
                        .sub(&t(&p(f2), &s.ee(f1, f3, f4)).mul(beta).scale(&(k.clone() * r(&[f1], &[f2]))))
                        .add(&t(&p(f1), &s.ee(f2, f3, f4)).mul(beta).scale(&k));
                    if !same(&lhs, &rhs) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// T beta = phi T and [Tx,Ty,Tz] = T(mu(Tx,Ty)z + rho(x,y+z)mu(Ty,Tz)x + rho(x+y,z)mu(Tz,Tx)y).
/// Evenness is not part of this oracle.
pub fn o_operator_identity(t: &Matrix, b: &RepresentationBundle) -> bool {
    let alg = b.algebra();
    let d = alg.dim();
    let n = b.space().dim();
    let o = alg.order();
    let space = b.space();
    let g = alg.group();
    let rho = |a: &[usize], c: &[usize]| {
        alg.rho().value(
            &g.sum(a.iter().map(|&i| space.degree(i))),
            &g.sum(c.iter().map(|&i| space.degree(i))),
        )
    };
    let v = |i: usize| -> V { (0..n).map(|k| if k == i { Scalar::one(o) } else { Scalar::zero(o) }).collect() };
    let tv = |i: usize| t.mul_vec(&v(i));
    let mu = |x: &[Scalar], y: &[Scalar]| act(b.mu_all(), d, n, x, y);
    if !same(&t.mul(b.beta()), &alg.twist().mul(t)) {
        return false;
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let lhs = alg.bracket().eval(&tv(x), &tv(y), &tv(z));
                let inner = add(
                    &add(
                        &mu(&tv(x), &tv(y)).mul_vec(&v(z)),
                        &scale(&rho(&[x], &[y, z]), &mu(&tv(y), &tv(z)).mul_vec(&v(x))),
                    ),
                    &scale(&rho(&[x, y], &[z]), &mu(&tv(z), &tv(x)).mul_vec(&v(y))),
                );
                if !zero(&sub(&lhs, &t.mul_vec(&inner))) {
                    return false;
                }
            }
        }
    }
    true
}

fn map_degree_rho(alg: &Algebra3Rho, degree: &GroupElement, f: usize) -> Scalar {
    alg.rho().value(degree, alg.basis().degree(f))
}

fn map_commutes(alg: &Algebra3Rho, m: &Matrix) -> bool {
    !alg.is_hom() || m.mul(alg.twist()) == alg.twist().mul(m)
}

fn homogeneous(alg: &Algebra3Rho, m: &Matrix, degree: &GroupElement) -> bool {
    let g = alg.group();
    let b = alg.basis();
    (0..alg.dim()).all(|i| {
        (0..alg.dim()).all(|j| m.get(i, j).is_zero() || *b.degree(i) == g.add(degree, b.degree(j)))
    })
}

/// D[f,g,h] = [Df,g,h] + rho(D,f)[f,Dg,h] + rho(D,f+g)[f,g,Dh], D phi = phi D.
pub fn derivation(alg: &Algebra3Rho, m: &Matrix, degree: &GroupElement) -> bool {
    let s = Dense { alg };
    let d = s.d();
    if !homogeneous(alg, m, degree) || !map_commutes(alg, m) {
        return false;
    }
    let dm = |x: &[Scalar]| m.mul_vec(x);
    for f in 0..d {
        for g in 0..d {
            for h in 0..d {
                let lhs = dm(&s.ee(f, g, h));
                let rf = map_degree_rho(alg, degree, f);
                let rfg = rf.clone() * map_degree_rho(alg, degree, g);
                let rhs = add(
                    &add(&s.br(&dm(&s.e(f)), &s.e(g), &s.e(h)), &scale(&rf, &s.br(&s.e(f), &dm(&s.e(g)), &s.e(h)))),
                    &scale(&rfg, &s.br(&s.e(f), &s.e(g), &dm(&s.e(h)))),
                );
                if !zero(&sub(&lhs, &rhs)) {
                    return false;
                }
            }
        }
    }
    true
}

/// psi[f,g,h] = [psi f,g,h] = rho(psi,f)[f,psi g,h] = rho(psi,f+g)[f,g,psi h].
pub fn centroid(alg: &Algebra3Rho, m: &Matrix, degree: &GroupElement) -> bool {
    let s = Dense { alg };
    let d = s.d();
    if !homogeneous(alg, m, degree) {
        return false;
    }
    let pm = |x: &[Scalar]| m.mul_vec(x);
    for f in 0..d {
        for g in 0..d {
            for h in 0..d {
                let lhs = pm(&s.ee(f, g, h));
                let rf = map_degree_rho(alg, degree, f);
                let rfg = rf.clone() * map_degree_rho(alg, degree, g);
                let a = s.br(&pm(&s.e(f)), &s.e(g), &s.e(h));
                let b = scale(&rf, &s.br(&s.e(f), &pm(&s.e(g)), &s.e(h)));
                let c = scale(&rfg, &s.br(&s.e(f), &s.e(g), &pm(&s.e(h))));
                if !zero(&sub(&lhs, &a)) || !zero(&sub(&lhs, &b)) || !zero(&sub(&lhs, &c)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Centroid element with chi(Df,g) = rho(D,f) chi(f,Dg) and D phi = phi D.
pub fn centromorphism(alg: &Algebra3Rho, chi: &Matrix, m: &Matrix, degree: &GroupElement) -> bool {
    if !centroid(alg, m, degree) || !map_commutes(alg, m) {
        return false;
    }
    let s = Dense { alg };
    let d = s.d();
    (0..d).all(|f| {
        (0..d).all(|g| {
            let l = dot(&m.mul_vec(&s.e(f)), chi, &s.e(g));
            let r = map_degree_rho(alg, degree, f) * dot(&s.e(f), chi, &m.mul_vec(&s.e(g)));
            (l - r).is_zero()
        })
    })
}

/// Evenness (every nonzero entry joins equal degrees) plus the identity.
pub fn o_operator(t: &Matrix, b: &RepresentationBundle) -> bool {
    let alg = b.algebra();
    if t.rows() != alg.dim() || t.cols() != b.space().dim() {
        return false;
    }
    let even = (0..t.rows()).all(|i| {
        (0..t.cols()).all(|j| t.get(i, j).is_zero() || alg.basis().degree(i) == b.space().degree(j))
    });
    even && o_operator_identity(t, b)
}

/// Lie and symplectic on B + B*, both halves closed and B* abelian.
pub fn phase_space(big: &Algebra3Rho, omega: &Matrix, base_dim: usize) -> bool {
    if !lie(big) || !symplectic(big, omega) {
        return false;
    }
    let t = big.dim();
    let s = Dense { alg: big };
    for i in 0..t {
        for j in 0..t {
            for k in 0..t {
                let v = s.ee(i, j, k);
                if i < base_dim && j < base_dim && k < base_dim && !zero(&v[base_dim..]) {
                    return false;
                }
                if i >= base_dim && j >= base_dim && k >= base_dim && !zero(&v) {
                    return false;
                }
            }
        }
    }
    true
}
