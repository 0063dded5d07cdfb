use crate::error::Result;
use crate::hallhopf::{AlgElt, BasisSym, HallAlgebra, TensorElt};

use super::{class_dim_sum_fits, negative_symbols, positive_symbols, CheckReport, Tally};

/// `m (S (x) id)` or `m (id (x) S)` applied to a tensor.
fn antipode_contract(alg: &HallAlgebra, t: &TensorElt, left: bool) -> Result<AlgElt> {
    let mut out = alg.zero();
    for ((l, r), c) in t.terms() {
        let (a, b) = if left {
            (alg.antipode_sym(l)?, AlgElt::basis(r.clone(), alg.q()))
        } else {
            (AlgElt::basis(l.clone(), alg.q()), alg.antipode_sym(r)?)
        };
        out.add_scaled(&alg.double_mult(&a, &b)?, c);
    }
    Ok(out)
}

/// `(eps (x) id)` or `(id (x) eps)` applied to a tensor.
fn counit_contract(alg: &HallAlgebra, t: &TensorElt, left: bool) -> AlgElt {
    let mut out = alg.zero();
    for ((l, r), c) in t.terms() {
        let (e, keep) = if left { (l, r) } else { (r, l) };
        let eps = alg.counit(&AlgElt::basis(e.clone(), alg.q()));
        if !eps.is_zero() {
            out.add_term(keep.clone(), &eps * c);
        }
    }
    out
}

fn sign_checks(alg: &HallAlgebra, label: &str, syms: &[BasisSym], report: &mut CheckReport) -> Result<()> {
    let q = alg.q();
    let mut coassoc = Tally::new(format!("coassociativity/{label}"));
    let mut counit = Tally::new(format!("counit/{label}"));
    let mut antipode = Tally::new(format!("antipode/{label}"));
    let mut green = Tally::new(format!("green compatibility/{label}"));
    for s in syms {
        let x = AlgElt::basis(s.clone(), q);
        let left = alg.coproduct_left(&x)?;
        let right = alg.coproduct_right(&x)?;
        coassoc.record(left == right, || {
            format!("{s}: (D (x) id) D = {left:?}, (id (x) D) D = {right:?}")
        });

        let d = alg.comult(&x)?;
        counit.elt(|| format!("(eps (x) id) D({s})"), &counit_contract(alg, &d, true), &x);
        counit.elt(|| format!("(id (x) eps) D({s})"), &counit_contract(alg, &d, false), &x);

        let unit = alg.one().scaled(&alg.counit(&x));
        antipode.elt(|| format!("m (S (x) id) D({s})"), &antipode_contract(alg, &d, true)?, &unit);
        antipode.elt(|| format!("m (id (x) S) D({s})"), &antipode_contract(alg, &d, false)?, &unit);
    }
    for s in syms {
        for t in syms {
            let (a, b) = (s.plus.max(s.minus), t.plus.max(t.minus));
            if !class_dim_sum_fits(alg, a, b) {
                continue;
            }
            let (x, y) = (AlgElt::basis(s.clone(), q), AlgElt::basis(t.clone(), q));
            let lhs = alg.comult(&alg.double_mult(&x, &y)?)?;
            let rhs = alg.tensor_mult(&alg.comult(&x)?, &alg.comult(&y)?)?;
            green.record(lhs == rhs, || format!("D({s} * {t}) = {lhs}, D({s}) D({t}) = {rhs}"));
        }
    }
    coassoc.finish(report);
    counit.finish(report);
    antipode.finish(report);
    green.finish(report);
    Ok(())
}

/// Coassociativity, counit laws, antipode axiom and multiplicativity of the
/// coproduct on the positive and negative Hall algebras within the table.
pub fn suite_hopf(alg: &HallAlgebra) -> Result<CheckReport> {
    let mut report = CheckReport::new("hopf");
    sign_checks(alg, "positive", &positive_symbols(alg), &mut report)?;
    sign_checks(alg, "negative", &negative_symbols(alg), &mut report)?;
    Ok(report)
}
