use std::collections::{BTreeMap, BTreeSet};

use crate::gkm::{
    cartan_from_datum, datum_from_table, imaginary_multiples_orbit, positive_roots, CartanMatrix, RootKind,
};
use crate::repcat::{ClassTable, DimVec};

use super::CheckReport;

/// Number of indecomposable classes per non-zero dimension vector of the
/// table with total at most `height`.
pub fn indecomposable_counts(table: &ClassTable, height: u32) -> BTreeMap<DimVec, usize> {
    table
        .dims()
        .iter()
        .filter(|d| !d.is_zero() && d.total() <= height)
        .map(|d| {
            let n = table
                .classes_of_dim(d)
                .iter()
                .filter(|&&id| table.is_indecomposable(id))
                .count();
            (d.clone(), n)
        })
        .collect()
}

fn to_dim(v: &[i64]) -> DimVec {
    DimVec(v.iter().map(|&x| x as u32).collect())
}

/// `Delta_0^+ u W_0(union_{s >= 2} s I^im)` inside the table, with real roots marked.
fn predicted_roots(table: &ClassTable, c: &CartanMatrix, height: u32) -> BTreeMap<DimVec, RootKind> {
    let inside = |d: &DimVec| table.covers(d) && d.total() <= height;
    let mut out = BTreeMap::new();
    for r in positive_roots(c, height) {
        let d = to_dim(&r.vector);
        if inside(&d) {
            out.insert(d, r.kind);
        }
    }
    for v in imaginary_multiples_orbit(c, height) {
        let d = to_dim(&v);
        if inside(&d) {
            out.entry(d).or_insert(RootKind::Imaginary);
        }
    }
    out
}

fn show(set: &BTreeSet<DimVec>) -> String {
    let v: Vec<String> = set.iter().map(DimVec::to_string).collect();
    format!("{{{}}}", v.join(", "))
}

/// Dimension vectors of indecomposables against the root-system prediction,
/// and uniqueness of the indecomposable at each real root.
pub fn suite_kac(table: &ClassTable, height: u32) -> CheckReport {
    let mut report = CheckReport::new("kac");
    let c = match datum_from_table(table) {
        Ok(d) => cartan_from_datum(&d),
        Err(e) => {
            report.fail("Borcherds datum of the quiver", e.to_string());
            return report;
        }
    };
    let counts = indecomposable_counts(table, height);
    let found: BTreeSet<DimVec> = counts.iter().filter(|(_, &n)| n > 0).map(|(d, _)| d.clone()).collect();
    let predicted = predicted_roots(table, &c, height);
    let expected: BTreeSet<DimVec> = predicted.keys().cloned().collect();
    report.check(
        format!("indecomposable dimension vectors = roots up to height {height}: {}", show(&found)),
        found == expected,
        || {
            let missing: BTreeSet<_> = expected.difference(&found).cloned().collect();
            let extra: BTreeSet<_> = found.difference(&expected).cloned().collect();
            format!(
                "predicted {} found {}; predicted only {}, found only {}",
                show(&expected),
                show(&found),
                show(&missing),
                show(&extra)
            )
        },
    );
    let mut bad = Vec::new();
    let mut real = 0;
    for (d, kind) in &predicted {
        if *kind == RootKind::Real {
            real += 1;
            let n = counts.get(d).copied().unwrap_or(0);
            if n != 1 {
                bad.push(format!("{d}: {n} indecomposables"));
            }
        }
    }
    report.check(
        format!("one indecomposable per real root ({real} real roots)"),
        bad.is_empty(),
        || bad.join("; "),
    );
    let imag: Vec<String> = predicted
        .iter()
        .filter(|(_, k)| **k == RootKind::Imaginary)
        .map(|(d, _)| format!("I({d}) = {}", counts.get(d).copied().unwrap_or(0)))
        .collect();
    report.pass(format!("imaginary root counts recorded: {}", imag.join(", ")));
    report
}

/// Expands the product of `(1 - e(-alpha))^{-I(alpha, q)}` over the predicted
/// roots and compares each coefficient with the number of classes.
pub fn suite_character(table: &ClassTable, bound: &DimVec) -> CheckReport {
    let mut report = CheckReport::new("character");
    let c = match datum_from_table(table) {
        Ok(d) => cartan_from_datum(&d),
        Err(e) => {
            report.fail("Borcherds datum of the quiver", e.to_string());
            return report;
        }
    };
    let dims: Vec<DimVec> = table.dims().iter().filter(|d| DimVec::le(d, bound)).cloned().collect();
    let height = dims.iter().map(DimVec::total).max().unwrap_or(0);
    let counts = indecomposable_counts(table, height);
    let roots = predicted_roots(table, &c, height);

    let mut coeff: BTreeMap<DimVec, u128> = dims.iter().map(|d| (d.clone(), 0)).collect();
    if let Some(z) = dims.iter().find(|d| d.is_zero()) {
        coeff.insert(z.clone(), 1);
    }
    for alpha in roots.keys() {
        let mult = counts.get(alpha).copied().unwrap_or(0);
        for _ in 0..mult {
            // multiply by 1 / (1 - x^alpha); dims are sorted by total degree
            for d in &dims {
                if let Some(prev) = d.checked_sub(alpha) {
                    if let Some(&p) = coeff.get(&prev) {
                        *coeff.get_mut(d).expect("present") += p;
                    }
                }
            }
        }
    }
    for d in &dims {
        let got = coeff[d];
        let classes = table.classes_of_dim(d).len() as u128;
        report.check(format!("coefficient at {d} = {got}"), got == classes, || {
            format!("product gives {got}, table has {classes} classes")
        });
    }
    report
}
