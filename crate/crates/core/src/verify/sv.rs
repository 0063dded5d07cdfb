use crate::error::Result;
use crate::gkm::{cartan_from_datum, in_fundamental_region, is_imaginary_multiple, reflect};
use crate::hallhopf::{AlgElt, HallAlgebra, TensorElt};
use crate::repcat::DimVec;
use crate::scalars::Scalar;
use crate::svext::{check_primitive, extend_datum, ExtIndex};

use super::composition::serre_sum;
use super::{CheckReport, Tally};

fn fits(alg: &HallAlgebra, w: &[i64]) -> bool {
    w.iter().all(|&x| x >= 0) && alg.table().covers(&DimVec(w.iter().map(|&x| x as u32).collect()))
}

/// Primitivity and commutator identities for the new generators, the axioms of
/// the enlarged form, the relations among generators that fit the bound,
/// and the location of every degree carrying new generators.
pub fn suite_sv(alg: &HallAlgebra, bound: &DimVec) -> Result<CheckReport> {
    let q = alg.q();
    let n = alg.rank();
    let mut report = CheckReport::new("sv");
    let ext = extend_datum(alg, bound)?;
    let c0 = cartan_from_datum(&ext.original);

    let table_row: Vec<String> = ext
        .l_spaces
        .iter()
        .map(|l| format!("{}:{}", l.degree, l.dim()))
        .collect();
    let mut dims = Tally::new(format!("dim Xi + dim L = #classes [{}]", table_row.join(" ")));
    for l in &ext.l_spaces {
        let xi = crate::svext::xi_space(alg, &l.degree)?.dim();
        let classes = alg.table().classes_of_dim(&l.degree).len();
        dims.record(xi + l.dim() == classes, || {
            format!("degree {}: {xi} + {} != {classes}", l.degree, l.dim())
        });
    }
    dims.finish(&mut report);

    let gens: Vec<(ExtIndex, Vec<i64>, AlgElt, AlgElt)> = ext
        .indices
        .iter()
        .map(|i| {
            let x = ext.generator(alg, i);
            let y = alg.omega(&x)?;
            Ok((i.clone(), ext.project(i), x, y))
        })
        .collect::<Result<_>>()?;

    let mut prim = Tally::new("D(x) = x (x) 1 + K (x) x");
    let mut prim_y = Tally::new("D(y) = 1 (x) y + y (x) K_-");
    let mut anti = Tally::new("S(x) = -K_- x, S(y) = -y K");
    for (idx, w, x, y) in &gens {
        let theta = DimVec(w.iter().map(|&a| a as u32).collect());
        prim.record(check_primitive(alg, x, &theta)?, || format!("x_{idx} = {x}: D(x) = {}", alg.comult(x).map(|d| d.to_string()).unwrap_or_default()));
        let minus: Vec<i64> = w.iter().map(|a| -a).collect();
        let mut dy = TensorElt::tensor(&alg.one(), y);
        dy.add_scaled(&TensorElt::tensor(y, &alg.k(&minus)), &Scalar::one(q));
        let lhs = alg.comult(y)?;
        prim_y.record(lhs == dy, || format!("y_{idx}: lhs = {lhs}, rhs = {dy}"));
        let neg_one = Scalar::from_int(-1, q);
        anti.elt(|| format!("S(x_{idx})"), &alg.antipode(x)?, &alg.double_mult(&alg.k(&minus), x)?.scaled(&neg_one));
        anti.elt(|| format!("S(y_{idx})"), &alg.antipode(y)?, &alg.double_mult(y, &alg.k(w))?.scaled(&neg_one));
    }
    prim.finish(&mut report);
    prim_y.finish(&mut report);
    anti.finish(&mut report);

    let mut comm = Tally::new("x_i y_j - y_j x_i = -phi(x_i, y_j)(K - K_-)");
    for (i, wi, x, _) in &gens {
        for (j, _, _, y) in &gens {
            let lhs = &alg.double_mult(x, y)? - &alg.double_mult(y, x)?;
            let minus: Vec<i64> = wi.iter().map(|a| -a).collect();
            let phi = alg.pairing_phi(x, y)?;
            let rhs = (&alg.k(wi) - &alg.k(&minus)).scaled(&-phi);
            comm.elt(|| format!("i = {i}, j = {j}"), &lhs, &rhs);
        }
    }
    comm.finish(&mut report);

    let bad = ext.axiom_violations();
    report.check(
        format!("extended form is a Borcherds datum ({} indices)", ext.indices.len()),
        bad.is_empty(),
        || bad.join("; "),
    );

    let mut location = Tally::new("L_theta != 0 only on the fundamental region or s I^im");
    for l in ext.l_spaces.iter().filter(|l| l.dim() > 0) {
        let w = l.degree.to_weight();
        location.record(in_fundamental_region(&c0, &w) || is_imaginary_multiple(&c0, &w), || {
            format!("dim L_{} = {}", l.degree, l.dim())
        });
    }
    location.finish(&mut report);

    let cartan = ext.cartan();
    let mut refl = Tally::new("pi(r~_i(j)) = r_i(pi(j))");
    let mut serre = Tally::new("Serre relations for real i against I'");
    let mut commute = Tally::new("x_i x_j = x_j x_i and y_i y_j = y_j y_i when c'_ij = 0");
    let mut skipped = Vec::new();
    if let Ok(c) = &cartan {
        for (a, (i, wi, xi, yi)) in gens.iter().enumerate() {
            for (b, (j, wj, xj, yj)) in gens.iter().enumerate() {
                let cij = c.entry(a, b);
                if let ExtIndex::Vertex(iv) = i {
                    if c0.is_real(*iv) {
                        let r: Vec<i64> = wj
                            .iter()
                            .enumerate()
                            .map(|(k, &x)| if k == *iv { x - cij } else { x })
                            .collect();
                        let rr = reflect(&c0, *iv, wj)?;
                        refl.record(r == rr, || format!("i = {i}, j = {j}: {r:?} vs {rr:?}"));
                        if a != b {
                            let m = (1 - cij) as u64;
                            let need: Vec<i64> =
                                (0..n).map(|k| wj[k] + if k == *iv { m as i64 } else { 0 }).collect();
                            if fits(alg, &need) {
                                let eps = c.symmetrizer(a).to_integer();
                                let sx = serre_sum(alg, xi, xj, m, eps)?;
                                serre.record(sx.is_zero(), || format!("x side, i = {i}, j = {j}: {sx}"));
                                let sy = serre_sum(alg, yi, yj, m, eps)?;
                                serre.record(sy.is_zero(), || format!("y side, i = {i}, j = {j}: {sy}"));
                            } else {
                                skipped.push(format!("i = {i}, j = {j} requires bound >= {need:?}"));
                            }
                        }
                    }
                }
                if a < b && cij == 0 {
                    let need: Vec<i64> = wi.iter().zip(wj).map(|(p, r)| p + r).collect();
                    if fits(alg, &need) {
                        commute.elt(|| format!("x, i = {i}, j = {j}"), &alg.double_mult(xi, xj)?, &alg.double_mult(xj, xi)?);
                        commute.elt(|| format!("y, i = {i}, j = {j}"), &alg.double_mult(yi, yj)?, &alg.double_mult(yj, yi)?);
                    }
                }
            }
        }
    }
    refl.finish(&mut report);
    serre.finish(&mut report);
    commute.finish(&mut report);
    if !skipped.is_empty() {
        report.skip(
            format!("Serre relations outside the bound ({} instances)", skipped.len()),
            skipped.join("; "),
        );
    }
    if let Err(e) = cartan {
        report.fail("extended Cartan matrix", e.to_string());
    }
    Ok(report)
}
