//! End-to-end acceptance run. Prints one line per criterion and exits with a
//! non-zero status if any criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use ringel_hall::hallhopf::{AlgElt, HallAlgebra};
use ringel_hall::repcat::{ClassTable, DimVec, Limits, Quiver};
use ringel_hall::scalars::{GroundField, Scalar};
use ringel_hall::svext::{l_space, ExtIndex};
use ringel_hall::verify::{
    indecomposable_counts, suite_character, suite_composition, suite_hopf, suite_kac, suite_pairing, suite_sv,
    CheckReport, Status,
};

type Outcome = Result<String, String>;

fn dv(v: &[u32]) -> DimVec {
    DimVec(v.to_vec())
}

fn table(quiver: &Quiver, q: u64, bound: &[u32], height: Option<u32>) -> ClassTable {
    ClassTable::build_with_height(quiver, GroundField::new(q).unwrap(), &dv(bound), height, Limits::default())
        .unwrap()
}

fn quivers() -> Vec<(&'static str, Quiver)> {
    vec![("A2", Quiver::a2()), ("Jordan", Quiver::jordan()), ("Kronecker", Quiver::kronecker())]
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn require_pass(r: &CheckReport, label: &str) -> Result<usize, String> {
    if let Some(f) = r.failures().next() {
        return Err(format!("{label}: {} failed: {}", f.name, f.witness.clone().unwrap_or_default()));
    }
    Ok(r.checks.len())
}

/// Number of points of the projective line over F_q, by enumerating non-zero
/// vectors of F_q^2 and normalizing the first non-zero coordinate.
fn projective_line_points(q: u64) -> usize {
    let mut seen = BTreeSet::new();
    for a in 0..q {
        for b in 0..q {
            if a == 0 && b == 0 {
                continue;
            }
            let lead = if a != 0 { a } else { b };
            let inv = (1..q).find(|x| x * lead % q == 1).unwrap();
            seen.insert((a * inv % q, b * inv % q));
        }
    }
    seen.len()
}

fn partitions(n: usize) -> Vec<u64> {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for k in part..=n {
            p[k] += p[k - part];
        }
    }
    p
}

/// Rank over the reals of the span of `u_a u_b = v^{<a,b>} sum g^c_{ab} u_c`
/// in degree `theta`, built from raw Hall numbers.
fn decomposable_rank_f64(t: &ClassTable, theta: &DimVec) -> usize {
    let v = (t.q() as f64).sqrt();
    let targets = t.classes_of_dim(theta);
    let mut rows: Vec<Vec<f64>> = Vec::new();
    for mu in theta.below() {
        if mu.is_zero() || &mu == theta {
            continue;
        }
        let nu = theta.checked_sub(&mu).unwrap();
        for &a in t.classes_of_dim(&mu) {
            for &b in t.classes_of_dim(&nu) {
                let e = t.quiver().euler_form(&mu, &nu);
                rows.push(
                    targets
                        .iter()
                        .map(|&c| v.powi(e as i32) * t.hall_number(a, b, c) as f64)
                        .collect(),
                );
            }
        }
    }
    let cols = targets.len();
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).max_by(|&i, &j| rows[i][c].abs().total_cmp(&rows[j][c].abs())) else {
            break;
        };
        if rows[p][c].abs() < 1e-9 {
            continue;
        }
        rows.swap(rank, p);
        for k in 0..rows.len() {
            if k != rank {
                let f = rows[k][c] / rows[rank][c];
                for j in 0..cols {
                    rows[k][j] -= f * rows[rank][j];
                }
            }
        }
        rank += 1;
    }
    rank
}

fn criterion_1() -> Outcome {
    let cases: [(&str, Quiver, &[u32], u32, Vec<Vec<u32>>); 3] = [
        ("A2", Quiver::a2(), &[2, 2], 2, vec![vec![0, 1], vec![1, 0], vec![1, 1]]),
        ("Jordan", Quiver::jordan(), &[4], 4, vec![vec![1], vec![2], vec![3], vec![4]]),
        (
            "Kronecker",
            Quiver::kronecker(),
            &[4, 4],
            4,
            vec![vec![0, 1], vec![1, 0], vec![1, 1], vec![1, 2], vec![2, 1], vec![2, 2]],
        ),
    ];
    let mut details = Vec::new();
    for (name, quiver, bound, h, expected) in cases {
        let t = table(&quiver, 2, bound, Some(h));
        let counts = indecomposable_counts(&t, h);
        let found: BTreeSet<DimVec> = counts.iter().filter(|(_, &n)| n > 0).map(|(d, _)| d.clone()).collect();
        let expected: BTreeSet<DimVec> = expected.iter().map(|v| dv(v)).collect();
        ensure(found == expected, || format!("{name}: indecomposable dims {found:?}, expected {expected:?}"))?;
        let r = suite_kac(&t, h);
        require_pass(&r, name)?;
        if name == "Kronecker" {
            let i11 = counts[&dv(&[1, 1])];
            let oracle = projective_line_points(2);
            ensure(i11 == 3 && oracle == 3, || format!("I((1,1),2) = {i11}, oracle {oracle}"))?;
            details.push(format!("I((1,1),2) = {i11}"));
        }
        details.push(format!("{name} {} roots", found.len()));
    }
    Ok(details.join(", "))
}

fn criterion_2() -> Outcome {
    let mut n = 0;
    for q in [2, 3] {
        for (name, quiver) in quivers() {
            let bound: &[u32] = if name == "Jordan" { &[4] } else { &[2, 2] };
            let t = table(&quiver, q, bound, None);
            let r = suite_hopf(&HallAlgebra::new(&t)).map_err(|e| e.to_string())?;
            n += require_pass(&r, &format!("{name} q={q}"))?;
        }
    }
    Ok(format!("{n} property checks on 6 configurations"))
}

fn criterion_3() -> Outcome {
    let mut n = 0;
    for q in [2, 3] {
        for (name, quiver) in quivers() {
            let bound: &[u32] = if name == "Jordan" { &[4] } else { &[2, 2] };
            let t = table(&quiver, q, bound, None);
            let r = suite_pairing(&HallAlgebra::new(&t)).map_err(|e| e.to_string())?;
            n += require_pass(&r, &format!("{name} q={q}"))?;
        }
    }
    Ok(format!("{n} property checks on 6 configurations"))
}

fn commutator(alg: &HallAlgebra, x: &AlgElt, y: &AlgElt) -> AlgElt {
    &alg.double_mult(x, y).unwrap() - &alg.double_mult(y, x).unwrap()
}

fn criterion_4() -> Outcome {
    let mut simple_pairs = 0;
    let mut l_pairs = 0;
    for q in [2, 3] {
        for (name, quiver) in quivers() {
            let bound: &[u32] = if name == "Jordan" { &[3] } else { &[1, 1] };
            let t = table(&quiver, q, bound, None);
            let alg = HallAlgebra::new(&t);
            let n = quiver.vertex_count();
            for i in 0..n {
                for j in 0..n {
                    let (si, sj) = (t.simple(i).unwrap(), t.simple(j).unwrap());
                    let lhs = commutator(&alg, &alg.u_plus(si), &alg.u_minus(sj));
                    let mut ki = vec![0; n];
                    ki[i] = 1;
                    let kmi: Vec<i64> = ki.iter().map(|x| -x).collect();
                    // phi(u_i^+, u_i^-) = 1 / |Aut S_i| = 1 / (q - 1)
                    let rhs = if i == j {
                        (&alg.k(&ki) - &alg.k(&kmi)).scaled(&Scalar::from_ratio(-1, q as i64 - 1, q))
                    } else {
                        alg.zero()
                    };
                    ensure(lhs == rhs, || format!("{name} q={q} simples {i},{j}: {lhs} vs {rhs}"))?;
                    simple_pairs += 1;
                }
            }
            for theta in dv(bound).below().into_iter().filter(|d| d.total() >= 2) {
                let l = l_space(&alg, &theta).map_err(|e| e.to_string())?;
                let w = theta.to_weight();
                let mw: Vec<i64> = w.iter().map(|x| -x).collect();
                for x in &l.basis {
                    for x2 in &l.basis {
                        let y = alg.omega(x2).unwrap();
                        let phi = alg.pairing_phi(x, &y).unwrap();
                        let rhs = (&alg.k(&w) - &alg.k(&mw)).scaled(&-phi);
                        let lhs = commutator(&alg, x, &y);
                        ensure(lhs == rhs, || format!("{name} q={q} degree {theta}: {lhs} vs {rhs}"))?;
                        l_pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{simple_pairs} simple pairs, {l_pairs} new-generator pairs"))
}

fn criterion_5() -> Outcome {
    let cases: [(&str, Quiver, u64, &[u32]); 5] = [
        ("A2", Quiver::a2(), 2, &[2, 2]),
        ("A2", Quiver::a2(), 3, &[2, 2]),
        ("Jordan", Quiver::jordan(), 2, &[4]),
        ("Kronecker", Quiver::kronecker(), 2, &[3, 3]),
        ("Kronecker", Quiver::kronecker(), 3, &[2, 2]),
    ];
    let mut n = 0;
    for (name, quiver, q, bound) in cases {
        let t = table(&quiver, q, bound, None);
        let alg = HallAlgebra::new(&t);
        let r = suite_composition(&alg).map_err(|e| e.to_string())?;
        n += require_pass(&r, &format!("{name} q={q}"))?;
        if name == "A2" {
            let skipped = r.checks.iter().filter(|c| c.status == Status::Skipped).count();
            ensure(skipped == 0, || format!("A2 q={q}: {skipped} skipped relations"))?;
            // sum_p (-1)^p [2 choose p] E1^p E2 E1^(2-p) with [2 choose 1] = v + 1/v
            let (e1, e2) = (alg.u_plus(t.simple(0).unwrap()), alg.u_plus(t.simple(1).unwrap()));
            let mid = &alg.v(1) + &alg.v(-1);
            let mut s = alg.product(&[e2.clone(), e1.clone(), e1.clone()]).unwrap();
            s.add_scaled(&alg.product(&[e1.clone(), e2.clone(), e1.clone()]).unwrap(), &-mid);
            s.add_scaled(&alg.product(&[e1.clone(), e1.clone(), e2]).unwrap(), &Scalar::one(q));
            ensure(s.is_zero(), || format!("A2 q={q} Serre sum = {s}"))?;
        }
    }
    Ok(format!("{n} relation checks, A2 Serre sum vanishes"))
}

fn criterion_6() -> Outcome {
    let mut notes = Vec::new();
    let cases: [(&str, Quiver, &[u32], Vec<(Vec<u32>, usize)>); 3] = [
        ("Kronecker", Quiver::kronecker(), &[2, 2], vec![(vec![1, 1], 2)]),
        ("Jordan", Quiver::jordan(), &[3], vec![(vec![2], 1), (vec![3], 1)]),
        ("A2", Quiver::a2(), &[2, 2], vec![(vec![1, 1], 0)]),
    ];
    for (name, quiver, bound, expected) in cases {
        let t = table(&quiver, 2, bound, None);
        let alg = HallAlgebra::new(&t);
        for (theta, want) in expected {
            let theta = dv(&theta);
            let got = l_space(&alg, &theta).map_err(|e| e.to_string())?.dim();
            let oracle = t.classes_of_dim(&theta).len() - decomposable_rank_f64(&t, &theta);
            ensure(got == want && oracle == want, || {
                format!("{name}: dim L_{theta} = {got}, oracle {oracle}, expected {want}")
            })?;
            notes.push(format!("{name} L_{theta} = {got}"));
        }
        for theta in dv(bound).below().into_iter().filter(|d| d.total() >= 2) {
            let got = l_space(&alg, &theta).map_err(|e| e.to_string())?.dim();
            let oracle = t.classes_of_dim(&theta).len() - decomposable_rank_f64(&t, &theta);
            ensure(got == oracle, || format!("{name}: dim L_{theta} = {got}, oracle {oracle}"))?;
        }
        let r = suite_sv(&alg, &dv(bound)).map_err(|e| e.to_string())?;
        require_pass(&r, name)?;
        for key in ["D(x) = x (x) 1", "L_theta != 0 only", "extended form is a Borcherds datum"] {
            ensure(r.find(key).iter().any(|c| c.status == Status::Pass), || {
                format!("{name}: no passing check {key}")
            })?;
        }
        let ext = ringel_hall::svext::extend_datum(&alg, &dv(bound)).map_err(|e| e.to_string())?;
        ensure(ext.indices.iter().all(|i| match i {
            ExtIndex::New(theta, _) => ext.l_space(theta).is_some(),
            ExtIndex::Vertex(_) => true,
        }), || format!("{name}: dangling index"))?;
    }
    Ok(notes.join(", "))
}

fn criterion_7() -> Outcome {
    let cases: [(&str, Quiver, &[u32], Option<u32>); 4] = [
        ("A2", Quiver::a2(), &[2, 2], None),
        ("Jordan", Quiver::jordan(), &[4], None),
        ("Kronecker", Quiver::kronecker(), &[2, 2], None),
        ("Kronecker", Quiver::kronecker(), &[4, 4], Some(4)),
    ];
    let mut jordan = Vec::new();
    for (name, quiver, bound, h) in cases {
        let t = table(&quiver, 2, bound, h);
        let r = suite_character(&t, &dv(bound));
        require_pass(&r, name)?;
        if name == "Jordan" {
            let p = partitions(4);
            for n in 1..=4u32 {
                let classes = t.classes_of_dim(&dv(&[n])).len() as u64;
                ensure(classes == p[n as usize], || format!("Jordan ({n}): {classes} classes, p = {}", p[n as usize]))?;
                jordan.push(classes.to_string());
            }
        }
    }
    Ok(format!("Jordan coefficients {}", jordan.join(",")))
}

fn config_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../configs").join(name)
}

fn criterion_8() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_rhall");
    let mut sizes = Vec::new();
    for cfg in ["a2.toml", "jordan.toml", "kronecker.toml"] {
        let run = || {
            Command::new(bin)
                .args(["verify", "--suite", "all", "--format", "json", "--config"])
                .arg(config_path(cfg))
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (run()?, run()?);
        ensure(a.status.code() == Some(0), || {
            format!("{cfg}: exit {:?}: {}", a.status.code(), String::from_utf8_lossy(&a.stderr))
        })?;
        ensure(a.stdout == b.stdout, || format!("{cfg}: reports differ"))?;
        let v: serde_json::Value = serde_json::from_slice(&a.stdout).map_err(|e| e.to_string())?;
        ensure(v["overall"] == "pass" && v["config_digest"].as_str().is_some_and(|d| d.len() == 64), || {
            format!("{cfg}: unexpected report header")
        })?;
        sizes.push(format!("{cfg} {} bytes", a.stdout.len()));
    }
    Ok(sizes.join(", "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("Kac theorem", criterion_1),
        ("Hopf suite", criterion_2),
        ("pairing suite", criterion_3),
        ("commutator identity", criterion_4),
        ("composition suite", criterion_5),
        ("SV extension", criterion_6),
        ("character identity", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: pass ({secs:.1} s) {detail}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({secs:.1} s) {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
