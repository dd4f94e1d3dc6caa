//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs on a single worker thread unless PLUECKERDEC_THREADS is set,
//! so the runtime budgets are per core.

use plueckerdec::channel::{corrupt, ChannelConfig};
use plueckerdec::gabidulin::{mrd_bound, shipped_parameter_sets};
use plueckerdec::listdec::{build_block_code, system_report, ListDecoder, Strategy};
use plueckerdec::pluecker::{
    all_tuples, ball_equations, ball_forbidden_tuples, binomial, bruhat_leq, bound_tuple, construction4,
    maximal_minors, phi_bar, phi_bar_columns, shuffle_relations, tau_count, IndexTuple, QuadTerm,
    QuadraticRelation,
};
use plueckerdec::subspace::{gaussian_binomial, grassmannian};
use plueckerdec::{embed, lift, CodeParams, FieldCtx, GabidulinCode, MatGF, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

type Check = Result<String, String>;

/// (vector, matrix, lifting, Plücker vector) of one table row.
type TableRow = (&'static str, &'static [&'static [u32]], &'static [&'static [u32]], [u32; 6]);

type Criterion = (&'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn f(q: u32) -> FieldCtx {
    FieldCtx::new(q).unwrap()
}

fn mat(q: u32, rows: &[&[u32]]) -> MatGF {
    MatGF::from_rows(f(q), rows).unwrap()
}

fn t(v: &[usize]) -> IndexTuple {
    IndexTuple::from_one_based(v).unwrap()
}

fn example_code() -> GabidulinCode {
    CodeParams {
        modulus: Some(vec![1, 1, 1]),
        g: Some(vec![vec![0, 1], vec![1, 0]]),
        ..CodeParams::new(2, 4, 2, 2)
    }
    .build()
    .unwrap()
}

fn r1() -> Subspace {
    Subspace::row_space(&mat(2, &[&[1, 0, 1, 0], &[0, 0, 0, 1]]))
}

fn r2() -> Subspace {
    Subspace::row_space(&mat(2, &[&[1, 0, 0, 1], &[0, 1, 1, 1]]))
}

fn c1_example_table() -> Check {
    let code = example_code();
    let ext = code.ext();
    let expected: [TableRow; 4] = [
        ("(0,0)", &[&[0, 0], &[0, 0]], &[&[1, 0, 0, 0], &[0, 1, 0, 0]], [1, 0, 0, 0, 0, 0]),
        ("(alpha,1)", &[&[0, 1], &[1, 0]], &[&[1, 0, 0, 1], &[0, 1, 1, 0]], [1, 1, 0, 0, 1, 1]),
        ("(alpha^2,alpha)", &[&[1, 1], &[0, 1]], &[&[1, 0, 1, 1], &[0, 1, 0, 1]], [1, 0, 1, 1, 1, 1]),
        ("(1,alpha^2)", &[&[1, 0], &[1, 1]], &[&[1, 0, 1, 0], &[0, 1, 1, 1]], [1, 1, 1, 1, 0, 1]),
    ];
    let words: Vec<_> = code.enumerate_code(16).map_err(|e| e.to_string())?.collect();
    ensure!(words.len() == 4, "{} codewords", words.len());
    for (w, (vec, m, l, p)) in words.iter().zip(expected) {
        let shown: Vec<String> = w.vec.iter().map(|e| ext.display(e)).collect();
        let shown = format!("({})", shown.join(","));
        ensure!(shown == vec, "vector {shown}, expected {vec}");
        ensure!(w.mat == mat(2, m), "matrix of {vec}");
        let u = lift(w);
        ensure!(u.basis() == &mat(2, l), "lifting of {vec}");
        ensure!(embed(&u).coords == p, "Plücker vector of {vec}: {}", embed(&u));
    }
    let bc = build_block_code(&code);
    let cp: BTreeSet<Vec<u32>> = words
        .iter()
        .map(|w| bc.positions.iter().map(|p| embed(&lift(w)).get(p)).collect())
        .collect();
    let want: BTreeSet<Vec<u32>> = [[0, 0, 0, 0], [1, 0, 0, 1], [0, 1, 1, 1], [1, 1, 1, 0]]
        .iter()
        .map(|v| v.to_vec())
        .collect();
    ensure!(cp == want, "C^p = {cp:?}");
    ensure!(bc.hp == mat(2, &[&[1, 0, 1, 1], &[0, 1, 1, 0]]), "H^p =\n{}", bc.hp);
    Ok("4 codewords, C^p and H^p exact".into())
}

fn c2_decode_r1() -> Check {
    let code = example_code();
    let r = r1();
    let (a, a_inv) = construction4(&r);
    ensure!(
        a_inv == mat(2, &[&[1, 0, 0, 1], &[0, 0, 1, 0], &[0, 0, 0, 1], &[0, 1, 0, 0]]),
        "A1^-1 =\n{a_inv}"
    );
    ensure!(a.mul(&a_inv).unwrap() == MatGF::identity(f(2), 4), "A1 A1^-1 != I");
    let col = phi_bar_columns(&a_inv, 2, &[t(&[3, 4])]).unwrap().column(0);
    ensure!(col == [1, 0, 0, 1, 0, 0], "column (3,4) = {col:?}");
    let forms = ball_equations(&r, 1).unwrap();
    ensure!(forms.len() == 1, "{} ball equations", forms.len());
    let shown = forms[0].display(4, 2).to_string();
    ensure!(shown == "x12 + x23 = 0", "ball equation `{shown}`");
    let dec = ListDecoder::new(code);
    for s in Strategy::ALL {
        let l = dec.decode_with(&r, 1, s).map_err(|e| e.to_string())?.list;
        let got: BTreeSet<Vec<u32>> = l.entries.iter().map(|e| e.pluecker.coords[..5].to_vec()).collect();
        let want: BTreeSet<Vec<u32>> = [vec![1, 1, 1, 1, 0], vec![1, 0, 1, 1, 1]].into_iter().collect();
        ensure!(l.len() == 2 && got == want, "{}: {got:?}", s.name());
    }
    Ok("2 codewords by every strategy, ball equation x12 + x23 = 0".into())
}

fn c3_decode_r2() -> Check {
    let code = example_code();
    let r = r2();
    let (_, a_inv) = construction4(&r);
    ensure!(
        a_inv == mat(2, &[&[1, 0, 0, 1], &[0, 1, 1, 1], &[0, 0, 1, 0], &[0, 0, 0, 1]]),
        "A2^-1 =\n{a_inv}"
    );
    let col = phi_bar_columns(&a_inv, 2, &[t(&[3, 4])]).unwrap().column(0);
    ensure!(col == [1, 1, 0, 1, 1, 1], "column (3,4) = {col:?}");
    let dec = ListDecoder::new(code);
    let sys = dec.assemble(&r, 1).map_err(|e| e.to_string())?;
    // the displayed system: two parity lines, the ball line, x12 = 1
    let vars = ["12", "13", "14", "23", "24", "34"];
    let row = |names: &[&str], rhs: u32| -> Vec<u32> {
        let mut v: Vec<u32> = vars.iter().map(|x| u32::from(names.contains(x))).collect();
        v.push(rhs);
        v
    };
    let displayed = MatGF::from_rows(
        f(2),
        &[
            row(&["13", "14", "24"], 0),
            row(&["14", "23"], 0),
            row(&["12", "13", "23", "24", "34"], 0),
            row(&["12"], 1),
        ],
    )
    .unwrap()
    .row_space_basis();
    ensure!(sys.linear_rref() == displayed, "linear part differs:\n{}", sys.linear_rref());
    let shown = QuadraticRelation {
        terms: [("12", "34"), ("13", "24"), ("14", "23")]
            .iter()
            .map(|(a, b)| QuadTerm {
                a: t(&a.chars().map(|c| c.to_digit(10).unwrap() as usize).collect::<Vec<_>>()),
                b: t(&b.chars().map(|c| c.to_digit(10).unwrap() as usize).collect::<Vec<_>>()),
                coeff: 1,
            })
            .collect(),
    };
    ensure!(sys.quadratic.len() == 1, "{} quadratic relations", sys.quadratic.len());
    for point in 0..64u32 {
        let x: Vec<u32> = (0..6).map(|i| (point >> i) & 1).collect();
        ensure!(
            sys.quadratic[0].holds(f(2), 4, &x) == shown.holds(f(2), 4, &x),
            "quadratic relation differs at {x:?}"
        );
    }
    let want: BTreeSet<Vec<u32>> = [[1, 0, 0, 1], [0, 1, 1, 1], [1, 1, 1, 0]].iter().map(|v| v.to_vec()).collect();
    for s in Strategy::ALL {
        let l = dec.decode_with(&r, 1, s).map_err(|e| e.to_string())?.list;
        let got: BTreeSet<Vec<u32>> = l.entries.iter().map(|e| e.pluecker.coords[1..5].to_vec()).collect();
        ensure!(l.len() == 3 && got == want, "{}: {got:?}", s.name());
    }
    Ok("3 codewords by every strategy, system equal up to RREF".into())
}

fn c4_triple_equivalence() -> Check {
    let mut summary = Vec::new();
    for q in [2u32, 3] {
        for (k, ell, delta) in [(2, 2, 2), (2, 3, 2), (3, 3, 2), (3, 3, 3)] {
            let code = CodeParams::new(q, k + ell, k, delta).build().unwrap();
            if code.size() > 1 << 12 {
                continue;
            }
            let n = k + ell;
            let spaces: Vec<Subspace> = if gaussian_binomial(q, n, k) <= 10_000 {
                grassmannian(code.field(), k, n).collect()
            } else {
                let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0000 + u64::from(q) * 100 + (k * 10 + delta) as u64);
                (0..200).map(|_| Subspace::random(code.field(), k, n, &mut rng)).collect()
            };
            let dec = ListDecoder::new(code.clone());
            for r in &spaces {
                for e in 0..=k {
                    let lists: Vec<Vec<u64>> = Strategy::ALL
                        .iter()
                        .map(|&s| dec.decode_with(r, e, s).map(|o| o.list.message_indices()))
                        .collect::<Result<_, _>>()
                        .map_err(|e| e.to_string())?;
                    ensure!(
                        lists[0] == lists[1] && lists[1] == lists[2],
                        "q={q} k={k} l={ell} d={delta} e={e} R=\n{r}paper {:?} reduced {:?} oracle {:?}",
                        lists[0],
                        lists[1],
                        lists[2]
                    );
                }
            }
            summary.push(format!("q{q}({k},{ell},{delta}):{}", spaces.len()));
        }
    }
    Ok(format!("received spaces per set {}", summary.join(" ")))
}

fn c5_counting() -> Check {
    let mut checked = 0;
    for n in 0..=10 {
        for k in 0..=n / 2 {
            ensure!(shuffle_relations(n, k).len() == if k == 0 { 0 } else { binomial(n, 2 * k) }, "shuffle n={n} k={k}");
            for e in 0..=k {
                let bound = bound_tuple(n, k, e).unwrap();
                let brute = all_tuples(n, k).iter().filter(|x| !bruhat_leq(x, &bound).unwrap()).count();
                ensure!(tau_count(n, k, e) == brute, "tau({n},{k},{e}) = {} vs {brute}", tau_count(n, k, e));
                ensure!(ball_forbidden_tuples(n, k, e).unwrap().len() == brute, "forbidden({n},{k},{e})");
                checked += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut reports = 0;
    for p in shipped_parameter_sets() {
        let code = p.build().unwrap();
        let (n, k, d) = (code.n(), code.k(), code.delta());
        let r = Subspace::random(code.field(), k, n, &mut rng);
        for e in 0..=k {
            let (sys, s) = system_report(&code, &r, e).map_err(|e| e.to_string())?;
            let linear = tau_count(n, k, e) + 1 + (d - 1) * (n - k);
            ensure!(s.linear_eqs == linear && sys.linear.len() == linear, "linear n={n} k={k} d={d} e={e}");
            ensure!(s.quadratic_eqs == binomial(n, 2 * k), "quadratic n={n} k={k}");
            ensure!(s.vars == binomial(n, k), "vars n={n} k={k}");
            reports += 1;
        }
    }
    Ok(format!("{checked} (n,k,e) triples, {reports} system reports"))
}

fn random_invertible(q: u32, n: usize, rng: &mut ChaCha8Rng) -> MatGF {
    loop {
        let data = (0..n * n).map(|_| rng.gen_range(0..q)).collect();
        let m = MatGF::new(f(q), n, n, data).unwrap();
        if m.rank() == n {
            return m;
        }
    }
}

fn c6_algebraic() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (q, k, n) in [(2, 2, 4), (3, 2, 4), (5, 2, 4), (2, 2, 5), (3, 3, 6), (5, 3, 6)] {
        for i in 0..500 {
            let u = Subspace::random(f(q), k, n, &mut rng);
            let a = random_invertible(q, n, &mut rng);
            let lhs = maximal_minors(&u.basis().mul(&a).unwrap());
            let rhs = phi_bar(&a, k).unwrap().vec_mul(&maximal_minors(u.basis())).unwrap();
            ensure!(lhs == rhs, "φ(UA) ≠ φ(U)φ̄(A) at q={q} k={k} n={n}, sample {i}");
        }
    }
    let mut sound = 0;
    for n in 1..=5 {
        for k in 1..n {
            let rels = shuffle_relations(n, k);
            for u in grassmannian(f(2), k, n) {
                let x = embed(&u).coords;
                ensure!(rels.iter().all(|r| r.holds(f(2), n, &x)), "shuffle fails on\n{u}");
                sound += 1;
            }
        }
    }
    for q in [2u32, 3] {
        let rels = shuffle_relations(4, 2);
        let embedded: BTreeSet<Vec<u32>> = grassmannian(f(q), 2, 4).map(|u| embed(&u).coords).collect();
        let mut zeros = BTreeSet::new();
        for idx in 1..(q as u64).pow(6) {
            let x: Vec<u32> = (0..6).map(|i| ((idx / (q as u64).pow(i)) % q as u64) as u32).collect();
            let lead = x.iter().find(|&&c| c != 0).copied().unwrap();
            if lead != 1 {
                continue;
            }
            if rels.iter().all(|r| r.holds(f(q), 4, &x)) {
                zeros.insert(x);
            }
        }
        ensure!(zeros == embedded, "q={q}: {} zeros vs {} embedded points", zeros.len(), embedded.len());
    }
    Ok(format!("3000 Cauchy-Binet samples, {sound} embedded points, completeness for q=2,3"))
}

fn c7_code_parameters() -> Check {
    let mut sets = 0;
    for p in shipped_parameter_sets() {
        let code = p.build().unwrap();
        let (k, ell, d) = (code.k(), code.ell(), code.delta());
        let words: Vec<_> = code.enumerate_code(1 << 16).map_err(|e| e.to_string())?.collect();
        let tag = format!("q={} n={} k={k} d={d}", code.field().q(), code.n());
        ensure!(words.len() as u128 == (code.field().q() as u128).pow(code.rho() as u32), "{tag}: size");
        let distinct: BTreeSet<_> = words.iter().map(|w| w.mat.data().to_vec()).collect();
        ensure!(distinct.len() == words.len(), "{tag}: repeated codewords");
        ensure!(code.rho() == mrd_bound(k, ell, d), "{tag}: dimension off the bound");
        // linear code: minimum rank distance is the minimum nonzero rank
        let min_rank = words.iter().skip(1).map(|w| w.mat.rank()).min().unwrap();
        ensure!(min_rank == d, "{tag}: min rank distance {min_rank}");
        let lifted: Vec<Subspace> = words.iter().map(lift).collect();
        let mut min_ds = usize::MAX;
        for i in 0..lifted.len() {
            for j in i + 1..lifted.len() {
                min_ds = min_ds.min(lifted[i].distance(&lifted[j]).unwrap());
            }
        }
        ensure!(min_ds == 2 * d, "{tag}: min subspace distance {min_ds}");
        let bc = build_block_code(&code);
        ensure!(bc.len() == k * ell, "{tag}: C^p length");
        ensure!(bc.gp.rank() == code.rho(), "{tag}: C^p dimension");
        let min_wt = words
            .iter()
            .skip(1)
            .map(|w| {
                let x = embed(&lift(w));
                bc.positions.iter().filter(|p| x.get(p) != 0).count()
            })
            .min()
            .unwrap();
        ensure!(min_wt >= d, "{tag}: C^p min weight {min_wt}");
        sets += 1;
    }
    Ok(format!("{sets} parameter sets"))
}

fn c8_closed_loop() -> Check {
    let (mut unique_runs, mut list_runs) = (0, 0);
    for p in shipped_parameter_sets() {
        let code = p.build().unwrap();
        let (k, d) = (code.k(), code.delta());
        let dec = ListDecoder::new(code.clone());
        for t in 0..=k {
            let unique = 4 * t < 2 * d;
            let list = d <= 2 * t && 2 * t <= 2 * k;
            if !(unique || list) {
                continue;
            }
            for trial in 0..100u64 {
                let seed = (trial << 8) ^ (t as u64) ^ ((code.n() as u64) << 32) ^ ((d as u64) << 40) ^ (u64::from(code.field().q()) << 48);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let sent = lift(&code.encode_index(rng.gen_range(0..code.size() as u64)));
                let r = corrupt(&sent, ChannelConfig { seed: rng.gen(), t }).map_err(|e| e.to_string())?;
                ensure!(r.distance(&sent).unwrap() == 2 * t, "channel distance");
                let l = dec.decode(&r, t).map_err(|e| e.to_string())?.list;
                let tag = format!("q={} n={} k={k} d={d} t={t} trial {trial}", code.field().q(), code.n());
                if unique {
                    ensure!(l.len() == 1 && l.contains(&sent), "{tag}: list of {}", l.len());
                    unique_runs += 1;
                } else {
                    ensure!(l.contains(&sent), "{tag}: transmitted codeword missing");
                    list_runs += 1;
                }
            }
        }
    }
    Ok(format!("{unique_runs} unique-regime and {list_runs} list-regime trials"))
}

fn main() {
    let threads = std::env::var("PLUECKERDEC_THREADS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(1);
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global().unwrap();

    let criteria: [Criterion; 8] = [
        ("worked example table", 1, c1_example_table),
        ("decode R1", 1, c2_decode_r1),
        ("decode R2", 1, c3_decode_r2),
        ("decoder triple-equivalence", 600, c4_triple_equivalence),
        ("counting identities", 5, c5_counting),
        ("algebraic invariants", 120, c6_algebraic),
        ("code-theoretic parameters", 60, c7_code_parameters),
        ("closed-loop channel", 120, c8_closed_loop),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > Duration::from_secs(*budget) => Err(format!("over budget: {msg}")),
            other => other,
        };
        let (tag, msg) = match outcome {
            Ok(m) => ("PASS", m),
            Err(m) => {
                failed += 1;
                ("FAIL", m)
            }
        };
        println!(
            "{tag} [{}] {name}: {msg} ({:.2}s, budget {budget}s)",
            i + 1,
            took.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
