use crate::error::{Error, Result};
use crate::gkm::{cartan_from_datum, datum_from_table, CartanMatrix};
use crate::hallhopf::{AlgElt, HallAlgebra, TensorElt};
use crate::repcat::DimVec;
use crate::scalars::{q_binom, Scalar};

use super::{torus_samples, CheckReport};

struct Generators {
    e: Vec<AlgElt>,
    f: Vec<AlgElt>,
    eps: Vec<i64>,
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    let mut e = vec![0; n];
    e[i] = 1;
    e
}

/// `E_i -> u_i^+` and `F_i -> -v_i u_i^-` for real `i`,
/// `F_i -> (v^{2 dim End S_i} - 1) / (v_i^-1 - v_i) u_i^-` for imaginary `i`.
fn generators(alg: &HallAlgebra, c: &CartanMatrix) -> Result<Generators> {
    let t = alg.table();
    let n = alg.rank();
    let mut g = Generators {
        e: Vec::new(),
        f: Vec::new(),
        eps: Vec::new(),
    };
    for i in 0..n {
        let s = t
            .simple(i)
            .ok_or_else(|| Error::domain(format!("simple {} is outside the table", i + 1)))?;
        let eps = c.symmetrizer(i);
        if !eps.is_integer() {
            return Err(Error::domain(format!("symmetrizer of {} is not an integer", i + 1)));
        }
        let eps = eps.to_integer();
        let coeff = if c.is_real(i) {
            -alg.v(eps)
        } else {
            let end = t.hom_dim(s, s)? as i64;
            let num = &alg.v(2 * end) - &Scalar::one(alg.q());
            let den = &alg.v(-eps) - &alg.v(eps);
            &num * &den.inv().expect("v is not a root of unity")
        };
        g.e.push(alg.u_plus(s));
        g.f.push(alg.u_minus(s).scaled(&coeff));
        g.eps.push(eps);
    }
    Ok(g)
}

fn elt_check(report: &mut CheckReport, name: String, lhs: &AlgElt, rhs: &AlgElt) {
    report.check(name, lhs == rhs, || format!("lhs = {lhs}, rhs = {rhs}"));
}

/// `sum_p (-1)^p [m choose p]_{v_i} X_i^p X_j X_i^{m-p}`.
pub(crate) fn serre_sum(alg: &HallAlgebra, xi: &AlgElt, xj: &AlgElt, m: u64, eps: i64) -> Result<AlgElt> {
    let mut acc = alg.zero();
    for p in 0..=m {
        let mut factors = vec![xi.clone(); p as usize];
        factors.push(xj.clone());
        factors.extend(std::iter::repeat_n(xi.clone(), (m - p) as usize));
        let mut c = q_binom(alg.q(), m, p, eps as u64)?;
        if p % 2 == 1 {
            c = -c;
        }
        acc.add_scaled(&alg.product(&factors)?, &c);
    }
    Ok(acc)
}

/// The defining relations of the quantized enveloping algebra of the
/// Cartan datum, and its Hopf structure on generators, under the
/// substitution into the reduced double.
pub fn suite_composition(alg: &HallAlgebra) -> Result<CheckReport> {
    let t = alg.table();
    let n = alg.rank();
    let q = alg.q();
    let c = cartan_from_datum(&datum_from_table(t)?);
    let g = generators(alg, &c)?;
    let mut report = CheckReport::new("composition");
    let v_i = |i: usize| alg.v(g.eps[i]);
    let v_i_inv = |i: usize| alg.v(-g.eps[i]);

    let torus = torus_samples(n);
    let mut ok = alg.k(&vec![0; n]) == alg.one();
    let mut witness = String::new();
    for mu in &torus {
        for nu in &torus {
            let sum: Vec<i64> = mu.iter().zip(nu).map(|(a, b)| a + b).collect();
            let lhs = alg.double_mult(&alg.k(mu), &alg.k(nu))?;
            if lhs != alg.k(&sum) && ok {
                ok = false;
                witness = format!("K{} K{} = {lhs}", show(mu), show(nu));
            }
        }
    }
    report.check("(i) K_0 = 1, K_mu K_nu = K_mu+nu", ok, || witness);

    for mu in &torus {
        for i in 0..n {
            let e = c.datum().pair(mu, &unit(n, i));
            let k = alg.k(mu);
            let lhs = alg.double_mult(&k, &g.e[i])?;
            let rhs = alg.double_mult(&g.e[i], &k)?.scaled(&alg.v(e));
            elt_check(&mut report, format!("(ii) K{} E_{}", show(mu), i + 1), &lhs, &rhs);
            let lhs = alg.double_mult(&k, &g.f[i])?;
            let rhs = alg.double_mult(&g.f[i], &k)?.scaled(&alg.v(-e));
            elt_check(&mut report, format!("(ii) K{} F_{}", show(mu), i + 1), &lhs, &rhs);
        }
    }

    for i in 0..n {
        for j in 0..n {
            let lhs = &alg.double_mult(&g.e[i], &g.f[j])? - &alg.double_mult(&g.f[j], &g.e[i])?;
            let rhs = if i == j {
                let ui = unit(n, i);
                let minus: Vec<i64> = ui.iter().map(|x| -x).collect();
                let den = (&v_i(i) - &v_i_inv(i)).inv().expect("v_i != v_i^-1");
                (&alg.k(&ui) - &alg.k(&minus)).scaled(&den)
            } else {
                alg.zero()
            };
            elt_check(&mut report, format!("(iii) [E_{}, F_{}]", i + 1, j + 1), &lhs, &rhs);
        }
    }

    for i in 0..n {
        if !c.is_real(i) {
            continue;
        }
        for j in 0..n {
            if i == j {
                continue;
            }
            let m = (1 - c.entry(i, j)) as u64;
            let mut need = DimVec::unit(n, i).scale(m as u32);
            need = need.add(&DimVec::unit(n, j));
            for (label, xs) in [("(iv) Serre E", &g.e), ("(iv)' Serre F", &g.f)] {
                let name = format!("{label} i={} j={}", i + 1, j + 1);
                if !t.covers(&need) {
                    report.skip(name, format!("requires bound >= {need}"));
                    continue;
                }
                let s = serre_sum(alg, &xs[i], &xs[j], m, g.eps[i])?;
                report.check(name, s.is_zero(), || format!("sum = {s}"));
            }
        }
    }

    for i in 0..n {
        for j in 0..n {
            if c.entry(i, j) != 0 {
                continue;
            }
            let need = DimVec::unit(n, i).add(&DimVec::unit(n, j));
            for (label, xs) in [("E", &g.e), ("F", &g.f)] {
                let name = format!("(v) {label}_{} {label}_{} commute", i + 1, j + 1);
                if !t.covers(&need) {
                    report.skip(name, format!("requires bound >= {need}"));
                    continue;
                }
                let lhs = alg.double_mult(&xs[i], &xs[j])?;
                let rhs = alg.double_mult(&xs[j], &xs[i])?;
                elt_check(&mut report, name, &lhs, &rhs);
            }
        }
    }

    for i in 0..n {
        let ui = unit(n, i);
        let minus: Vec<i64> = ui.iter().map(|x| -x).collect();
        let (e, f) = (&g.e[i], &g.f[i]);
        let mut de = TensorElt::tensor(e, &alg.one());
        de.add_scaled(&TensorElt::tensor(&alg.k(&ui), e), &Scalar::one(q));
        let lhs = alg.comult(e)?;
        report.check(format!("D(E_{0}) = E_{0} (x) 1 + K_{0} (x) E_{0}", i + 1), lhs == de, || {
            format!("lhs = {lhs}, rhs = {de}")
        });
        let mut df = TensorElt::tensor(f, &alg.k(&minus));
        df.add_scaled(&TensorElt::tensor(&alg.one(), f), &Scalar::one(q));
        let lhs = alg.comult(f)?;
        report.check(format!("D(F_{0}) = F_{0} (x) K_-{0} + 1 (x) F_{0}", i + 1), lhs == df, || {
            format!("lhs = {lhs}, rhs = {df}")
        });
        let rhs = alg.double_mult(&alg.k(&minus), e)?.scaled(&Scalar::from_int(-1, q));
        elt_check(&mut report, format!("S(E_{0}) = -K_-{0} E_{0}", i + 1), &alg.antipode(e)?, &rhs);
        let rhs = alg.double_mult(f, &alg.k(&ui))?.scaled(&Scalar::from_int(-1, q));
        elt_check(&mut report, format!("S(F_{0}) = -F_{0} K_{0}", i + 1), &alg.antipode(f)?, &rhs);
        let (ce, cf) = (alg.counit(e), alg.counit(f));
        report.check(format!("eps(E_{0}) = eps(F_{0}) = 0", i + 1), ce.is_zero() && cf.is_zero(), || {
            format!("eps(E) = {ce}, eps(F) = {cf}")
        });
        for j in 0..n {
            let lhs = alg.pairing_phi(e, &g.f[j])?;
            let rhs = if i == j {
                -(&v_i(i) - &v_i_inv(i)).inv().expect("v_i != v_i^-1")
            } else {
                Scalar::zero(q)
            };
            report.check(format!("phi(E_{}, F_{})", i + 1, j + 1), lhs == rhs, || {
                format!("lhs = {lhs}, rhs = {rhs}")
            });
        }
    }
    Ok(report)
}

fn show(mu: &[i64]) -> String {
    let v: Vec<String> = mu.iter().map(i64::to_string).collect();
    format!("({})", v.join(","))
}
