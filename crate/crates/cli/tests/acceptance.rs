//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use cgraph::charpoly::{
    enumerate_e, psi_full, psi_pi, tridiag_det_enum, tridiag_det_rec, PolyFraction, TridiagonalSpec,
};
use cgraph::quotient::{check_equitable, quotient_matrix, structural_identity_holds};
use cgraph::recognize::{isomorphic_partner, recognize, Verdict};
use cgraph::spectra::{
    charpoly_oracle, distinct_eigenvalue_count, gap_endpoints, inertia_formula, inertia_from_poly, interval_check,
    multiplicities_from_poly, multiplicity_formula, nontrivial_gap_count, quotient_inertia, rational_determinant,
    twin_eigenvectors, TwinKind,
};
use cgraph::{antiregular, build_cgraph, Composition, Graph, IntPoly, Rational};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

const MAX_N: usize = 12;
const RELABEL_MAX_N: usize = 10;
const RELABELINGS: usize = 20;

type Checked = Result<String, String>;

/// Oracle polynomials for one composition.
struct Oracles {
    c: Composition,
    q: IntPoly,
    a: IntPoly,
}

fn oracles() -> Vec<Oracles> {
    Composition::all_even_up_to(MAX_N)
        .into_iter()
        .map(|c| {
            let (g, _) = build_cgraph(&c).unwrap();
            let q = charpoly_oracle(quotient_matrix(&c).unwrap().matrix()).unwrap();
            let a = charpoly_oracle(&g.adjacency_matrix()).unwrap();
            Oracles { c, q, a }
        })
        .collect()
}

fn first_failures<T: std::fmt::Display>(bad: &[T]) -> String {
    let shown: Vec<String> = bad.iter().take(3).map(ToString::to_string).collect();
    format!("{} failures, first: {}", bad.len(), shown.join("; "))
}

fn all_ok<T: std::fmt::Display>(bad: Vec<T>, ok: String) -> Checked {
    if bad.is_empty() {
        Ok(ok)
    } else {
        Err(first_failures(&bad))
    }
}

fn worked_example() -> Checked {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_cgraph"))
        .args(["charpoly", "--alpha", "4,3,2,2"])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let coeffs = |key: &str| -> Vec<i64> {
        v[key]["coefficients"]
            .as_array()
            .map(|a| a.iter().filter_map(|x| x.as_i64()).collect())
            .unwrap_or_default()
    };
    let pi = IntPoly::from_i64(&[78, 8, -27, -4, 1]);
    let expected_psi = IntPoly::x().pow(3) * IntPoly::linear(1, 1).pow(4) * &pi;
    let expected: Vec<i64> = expected_psi
        .coeffs()
        .iter()
        .map(|c| i64::try_from(c).unwrap())
        .collect();
    if coeffs("psi_pi") != [78, 8, -27, -4, 1] {
        return Err(format!("psi_pi = {}", v["psi_pi"]));
    }
    if coeffs("psi") != expected {
        return Err(format!("psi = {}", v["psi"]));
    }
    if elapsed >= Duration::from_secs(1) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "x^4 - 4x^3 - 27x^2 + 8x + 78 and x^3 (x+1)^4 times it, {elapsed:.2?}"
    ))
}

fn formula_vs_oracle(data: &[Oracles], elapsed: Duration) -> Checked {
    let start = Instant::now();
    let mut bad = Vec::new();
    for d in data {
        if psi_pi(&d.c).unwrap() != d.q {
            bad.push(format!("{} psi_pi", d.c));
        }
        if psi_full(&d.c).unwrap() != d.a {
            bad.push(format!("{} psi", d.c));
        }
    }
    let total = elapsed + start.elapsed();
    if total >= Duration::from_secs(60) {
        bad.push(format!("sweep took {total:?}"));
    }
    all_ok(bad, format!("{} compositions, {total:.2?}", data.len()))
}

fn inertia(data: &[Oracles]) -> Checked {
    let mut bad = Vec::new();
    for d in data {
        let k = d.c.half_len().unwrap();
        if inertia_from_poly(&d.a).unwrap() != inertia_formula(&d.c).unwrap() {
            bad.push(format!("{} graph", d.c));
        }
        let q = inertia_from_poly(&d.q).unwrap();
        if q != quotient_inertia(&d.c).unwrap() || (q.n_minus, q.n_zero, q.n_plus) != (k, 0, k) {
            bad.push(format!("{} quotient {q:?}", d.c));
        }
    }
    all_ok(bad, format!("{} compositions", data.len()))
}

fn multiplicity(data: &[Oracles]) -> Checked {
    let mut bad = Vec::new();
    let mut branches = [0usize; 2];
    for d in data {
        branches[usize::from(d.c.alpha(2) == 1)] += 1;
        if multiplicities_from_poly(&d.a).unwrap() != multiplicity_formula(&d.c).unwrap() {
            bad.push(d.c.to_string());
        }
    }
    if branches.contains(&0) {
        bad.push(format!("branch not exercised: {branches:?}"));
    }
    all_ok(bad, format!("a2 = 1 in {}, a2 != 1 in {}", branches[1], branches[0]))
}

fn interval(data: &[Oracles]) -> Checked {
    let mut bad = Vec::new();
    for d in data {
        let r = interval_check(&d.c).unwrap();
        if !r.holds() {
            bad.push(format!("{}: {} roots", d.c, r.count_in_gap));
        }
        // the graph polynomial must agree with the quotient on the gap
        let (lower, upper) = gap_endpoints(d.c.alpha_min());
        let (_, count) = nontrivial_gap_count(&d.a, &lower, &upper).unwrap();
        if count != 0 {
            bad.push(format!("{}: oracle psi has {count} roots", d.c));
        }
    }
    for n in 2..=MAX_N + 1 {
        let psi = charpoly_oracle(&antiregular(n).unwrap().adjacency_matrix()).unwrap();
        let (lower, upper) = gap_endpoints(1);
        let (_, count) = nontrivial_gap_count(&psi, &lower, &upper).unwrap();
        if count != 0 {
            bad.push(format!("antiregular({n}): {count} roots"));
        }
    }
    all_ok(
        bad,
        format!("{} compositions, antiregular n <= {}", data.len(), MAX_N + 1),
    )
}

fn recognition() -> Checked {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut bad = Vec::new();
    let mut relabel_misses = Vec::new();
    let mut relabel_partnered = 0;
    for c in Composition::all_even_up_to(MAX_N) {
        let (g, _) = build_cgraph(&c).unwrap();
        let r = recognize(&g);
        if r.sequence != c.parts() || r.verdict != Verdict::MemberOfCEven {
            bad.push(format!("{c} gave {:?}", r.sequence));
        }
        if c.order() > RELABEL_MAX_N {
            continue;
        }
        let mut perm: Vec<usize> = (0..c.order()).collect();
        let mut missed = None;
        for _ in 0..RELABELINGS {
            perm.shuffle(&mut rng);
            let r = recognize(&g.permuted(&perm).unwrap());
            if r.sequence != c.parts() {
                missed.get_or_insert(r.sequence);
            }
        }
        if let Some(got) = missed {
            let partner = isomorphic_partner(&c);
            relabel_partnered += usize::from(partner.is_some());
            let partner = partner.map(|p| p.to_string()).unwrap_or("none".into());
            relabel_misses.push(format!("{c} gave {got:?} (isomorphic partner {partner})"));
        }
    }
    for (name, g) in [("P4", Graph::path(4)), ("C5", Graph::cycle(5))] {
        if recognize(&g).verdict != Verdict::NotACGraph {
            bad.push(format!("{name} accepted"));
        }
    }
    if recognize(&Graph::cycle(4)).verdict != Verdict::MemberOfCOddOnly {
        bad.push("C4 not member-of-C-odd-only".into());
    }
    if !relabel_misses.is_empty() {
        // Isomorphic C-graphs such as C(1,1,3,1) and C(2,1,2,1) cannot be
        // told apart once labels are scrambled.
        bad.push(format!(
            "{} compositions with n <= {RELABEL_MAX_N} not recovered under relabeling, {} of them have an \
             isomorphic partner composition; {}",
            relabel_misses.len(),
            relabel_partnered,
            first_failures(&relabel_misses)
        ));
    }
    all_ok(bad, "all compositions, relabelings, P4, C5, C4".into())
}

fn random_rational(rng: &mut impl Rng) -> Rational {
    let num: i64 = rng.gen_range(-20..=20);
    let den: i64 = rng.gen_range(1..=9);
    Rational::new(num.into(), den.into())
}

fn tridiagonal() -> Checked {
    let mut rng = StdRng::seed_from_u64(41);
    let mut bad = Vec::new();
    for trial in 0..200 {
        let n = rng.gen_range(1..=9);
        let betas: Vec<Rational> = (0..n).map(|_| random_rational(&mut rng)).collect();
        let spec = TridiagonalSpec {
            betas: betas
                .iter()
                .map(|b| PolyFraction::constant(b.numer().clone(), b.denom().clone()))
                .collect(),
        };
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match j as i64 - i as i64 {
                        0 => betas[i].clone(),
                        1 => -Rational::one(),
                        -1 => Rational::one(),
                        _ => Rational::zero(),
                    })
                    .collect()
            })
            .collect();
        let det = rational_determinant(&rows).unwrap();
        let value = |f: &PolyFraction| Rational::new(f.num.coeff(0), f.den.coeff(0));
        let (e, r) = (value(&tridiag_det_enum(&spec)), value(&tridiag_det_rec(&spec)));
        if e != det || r != det {
            bad.push(format!("trial {trial}: enum {e}, rec {r}, bareiss {det}"));
        }
    }
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    for n in 1..=20 {
        // b = F(n + 1)
        if BigInt::from(enumerate_e(n).len()) != b {
            bad.push(format!("|E_{n}| = {}", enumerate_e(n).len()));
        }
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    all_ok(bad, "200 instances, |E_n| for n <= 20".into())
}

fn identities() -> Checked {
    let mut bad = Vec::new();
    let comps = Composition::all_even_up_to(MAX_N);
    for c in &comps {
        let (g, p) = build_cgraph(c).unwrap();
        if !check_equitable(&g, &p, &quotient_matrix(c).unwrap()).unwrap() {
            bad.push(format!("{c} equitable"));
        }
        if !structural_identity_holds(c).unwrap() {
            bad.push(format!("{c} structural"));
        }
    }
    all_ok(bad, format!("{} compositions", comps.len()))
}

fn twin_vectors() -> Checked {
    let mut bad = Vec::new();
    let mut checked = 0;
    for c in Composition::all_even_up_to(RELABEL_MAX_N) {
        let (g, part) = build_cgraph(&c).unwrap();
        let a = g.adjacency_matrix();
        for class in 0..part.class_count() {
            let members: Vec<usize> = part.members(class).collect();
            if members.len() < 2 {
                continue;
            }
            // 1-based class index: odd classes are cliques
            let kind = if class % 2 == 0 {
                TwinKind::Clique
            } else {
                TwinKind::Independent
            };
            let vecs = twin_eigenvectors(&g, &members, kind).unwrap();
            let lambda = BigInt::from(kind.eigenvalue());
            let big = |x: &[i64]| x.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>();
            for (i, x) in vecs.iter().enumerate() {
                let x = big(x);
                let ax = a.mul_vec(&x).unwrap();
                if ax.iter().zip(&x).any(|(l, r)| *l != &lambda * r) {
                    bad.push(format!("{c} class {} vector {i}", class + 1));
                }
                for y in &vecs[i + 1..] {
                    let dot: BigInt = x.iter().zip(big(y)).map(|(p, q)| p * q).sum();
                    if !dot.is_zero() {
                        bad.push(format!("{c} class {} not orthogonal", class + 1));
                    }
                }
            }
            if vecs.len() != members.len() - 1 {
                bad.push(format!("{c} class {} has {} vectors", class + 1, vecs.len()));
            }
            checked += 1;
        }
    }
    all_ok(bad, format!("{checked} classes"))
}

fn distinct_bound(data: &[Oracles]) -> Checked {
    let mut bad = Vec::new();
    for d in data {
        let k = d.c.half_len().unwrap();
        let count = distinct_eigenvalue_count(&d.a).unwrap();
        if count > 2 * k + 2 {
            bad.push(format!("{}: {count} > {}", d.c, 2 * k + 2));
        }
    }
    all_ok(bad, format!("{} compositions", data.len()))
}

fn main() {
    let start = Instant::now();
    let data = oracles();
    let oracle_time = start.elapsed();

    let results: Vec<(&str, Checked)> = vec![
        ("worked example via CLI", worked_example()),
        (
            "formula vs oracle characteristic polynomial",
            formula_vs_oracle(&data, oracle_time),
        ),
        ("inertia and quotient inertia", inertia(&data)),
        ("multiplicities of 0 and -1", multiplicity(&data)),
        ("eigenvalue-free interval", interval(&data)),
        ("recognition round trip", recognition()),
        ("tridiagonal determinant routes", tridiagonal()),
        ("equitable and structural identities", identities()),
        ("twin eigenvectors", twin_vectors()),
        ("distinct eigenvalue bound", distinct_bound(&data)),
    ];
    let mut failed = 0;
    for (i, (name, r)) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("PASS {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
