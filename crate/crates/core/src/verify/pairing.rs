use crate::error::Result;
use crate::hallhopf::{AlgElt, BasisSym, HallAlgebra, TensorElt};
use crate::scalars::Scalar;
use crate::svext::row_reduce;

use super::{class_dim_sum_fits, negative_symbols, positive_symbols, CheckReport, Tally};

fn class_of(s: &BasisSym) -> usize {
    s.plus.max(s.minus)
}

fn same_dim(alg: &HallAlgebra, a: usize, b: usize) -> bool {
    alg.table().class(a).dim == alg.table().class(b).dim
}

/// The skew-Hopf relations for phi, the properties of psi and the
/// compatibilities of omega with the coproduct, the pairing and the antipode.
pub fn suite_pairing(alg: &HallAlgebra) -> Result<CheckReport> {
    let q = alg.q();
    let t = alg.table();
    let mut report = CheckReport::new("pairing");
    let pos = positive_symbols(alg);
    let neg = negative_symbols(alg);
    let basis = |s: &BasisSym| AlgElt::basis(s.clone(), q);
    let scalar_witness = |what: String, l: &Scalar, r: &Scalar| format!("{what}: lhs = {l}, rhs = {r}");

    let mut unit = Tally::new("phi with the unit equals the counit");
    for a in &pos {
        let (l, r) = (alg.pairing_phi(&basis(a), &alg.one())?, alg.counit(&basis(a)));
        unit.record(l == r, || scalar_witness(format!("phi({a}, 1)"), &l, &r));
    }
    for b in &neg {
        let (l, r) = (alg.pairing_phi(&alg.one(), &basis(b))?, alg.counit(&basis(b)));
        unit.record(l == r, || scalar_witness(format!("phi(1, {b})"), &l, &r));
    }
    unit.finish(&mut report);

    let mut second = Tally::new("phi(a, b b') = phi(D a, b (x) b')");
    for a in &pos {
        let da = alg.comult(&basis(a))?;
        for b in &neg {
            for b2 in &neg {
                let (cb, cb2) = (class_of(b), class_of(b2));
                if !class_dim_sum_fits(alg, cb, cb2)
                    || t.class(cb).dim.add(&t.class(cb2).dim) != t.class(class_of(a)).dim
                {
                    continue;
                }
                let l = alg.pairing_phi(&basis(a), &alg.double_mult(&basis(b), &basis(b2))?)?;
                let r = alg.pairing_phi_tensor(&da, &TensorElt::tensor(&basis(b), &basis(b2)))?;
                second.record(l == r, || scalar_witness(format!("a = {a}, b = {b}, b' = {b2}"), &l, &r));
            }
        }
    }
    second.finish(&mut report);

    let mut third = Tally::new("phi(a a', b) = phi(a (x) a', D^op b)");
    for b in &neg {
        let db = alg.comult(&basis(b))?.flip();
        for a in &pos {
            for a2 in &pos {
                let (ca, ca2) = (class_of(a), class_of(a2));
                if !class_dim_sum_fits(alg, ca, ca2)
                    || t.class(ca).dim.add(&t.class(ca2).dim) != t.class(class_of(b)).dim
                {
                    continue;
                }
                let l = alg.pairing_phi(&alg.double_mult(&basis(a), &basis(a2))?, &basis(b))?;
                let r = alg.pairing_phi_tensor(&TensorElt::tensor(&basis(a), &basis(a2)), &db)?;
                third.record(l == r, || scalar_witness(format!("a = {a}, a' = {a2}, b = {b}"), &l, &r));
            }
        }
    }
    third.finish(&mut report);

    // phi(S a, b) = phi(a, S^-1 b), tested in the form phi(S a, S b) = phi(a, b)
    let mut fourth = Tally::new("phi(S a, S b) = phi(a, b)");
    let mut omega_pair = Tally::new("phi(x, y) = phi(omega y, omega x)");
    for a in &pos {
        let sa = alg.antipode_sym(a)?;
        let oa = alg.omega_sym(a)?;
        for b in &neg {
            if !same_dim(alg, class_of(a), class_of(b)) {
                continue;
            }
            let r = alg.pairing_phi(&basis(a), &basis(b))?;
            let l = alg.pairing_phi(&sa, &alg.antipode_sym(b)?)?;
            fourth.record(l == r, || scalar_witness(format!("a = {a}, b = {b}"), &l, &r));
            let l = alg.pairing_phi(&alg.omega_sym(b)?, &oa)?;
            omega_pair.record(l == r, || scalar_witness(format!("x = {a}, y = {b}"), &l, &r));
        }
    }
    fourth.finish(&mut report);

    let mut sym = Tally::new("psi symmetric");
    for a in &pos {
        for b in &pos {
            if a > b || !same_dim(alg, class_of(a), class_of(b)) {
                continue;
            }
            let l = alg.pairing_psi(&basis(a), &basis(b))?;
            let r = alg.pairing_psi(&basis(b), &basis(a))?;
            sym.record(l == r, || scalar_witness(format!("psi({a}, {b}) vs psi({b}, {a})"), &l, &r));
        }
    }
    sym.finish(&mut report);

    let mut diag = Tally::new("psi(u_a, u_b) = delta_ab / a_a");
    let mut positive = Tally::new("psi(u_a, u_a) positive");
    let mut nondeg = Tally::new("phi non-degenerate on each degree");
    for d in t.dims() {
        let ids = t.classes_of_dim(d);
        let mut gram = Vec::new();
        for &a in ids {
            let mut row = Vec::new();
            for &b in ids {
                let l = alg.pairing_psi(&alg.u_plus(a), &alg.u_plus(b))?;
                let r = if a == b {
                    alg.aut(a).inv().expect("automorphism counts are positive")
                } else {
                    Scalar::zero(q)
                };
                diag.record(l == r, || scalar_witness(format!("psi(u[{a}], u[{b}])"), &l, &r));
                if a == b {
                    positive.record(l.is_positive(), || format!("psi(u[{a}], u[{a}]) = {l}"));
                }
                row.push(alg.pairing_phi(&alg.u_plus(a), &alg.u_minus(b))?);
            }
            gram.push(row);
        }
        let n = gram.len();
        let rank = row_reduce(&mut gram).len();
        nondeg.record(rank == n, || format!("degree {d}: rank {rank} of {n}"));
    }
    diag.finish(&mut report);
    positive.finish(&mut report);
    nondeg.finish(&mut report);

    let mut anti = Tally::new("D omega = (omega (x) omega) D^op");
    let mut inverse = Tally::new("S omega S = omega");
    for s in pos.iter().chain(&neg) {
        let l = alg.comult(&alg.omega_sym(s)?)?;
        let r = alg.omega_tensor(&alg.comult_sym(s)?.flip())?;
        anti.record(l == r, || format!("{s}: lhs = {l}, rhs = {r}"));
        let l = alg.antipode(&alg.omega(&alg.antipode_sym(s)?)?)?;
        inverse.elt(|| format!("{s}"), &l, &alg.omega_sym(s)?);
    }
    anti.finish(&mut report);
    omega_pair.finish(&mut report);
    inverse.finish(&mut report);
    Ok(report)
}
