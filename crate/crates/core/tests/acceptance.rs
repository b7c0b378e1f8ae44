//! Exit criteria. Runs every criterion with its time limit and prints one
//! `ACCEPTANCE <n> PASS|FAIL ...` line each; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use fasnu::harness::{landau_random_suite, remark3_random_suite, seymour_suite, thm21_random_suite};
use fasnu::instances::*;
use fasnu::packing::is_valid_packing;
use fasnu::tournament::{canonical_code, enumerate_codes, order_summary, search_counterexamples, verify_nu_eq_tau_upto, Predicate};
use fasnu::*;

type Check = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn c1_paper_t() -> Check {
    let t = paper_t();
    let (tau, tau_time) = timed(|| tau_exact(&t).unwrap());
    ensure(tau.tau == 12, format!("tau(T) = {}", tau.tau))?;
    ensure(tau_time < secs(1), format!("tau took {tau_time:?}"))?;
    let (nu, nu_time) = timed(|| nu_exact(&t, Budget::default()));
    ensure(nu.optimal && nu.value == 11, format!("nu(T) = {} optimal={}", nu.value, nu.optimal))?;
    ensure(is_valid_packing(&t, &nu.certificate), "invalid certificate")?;
    ensure(tau_time + nu_time < secs(30 * 60), "over 30 minutes")?;
    Ok(format!("tau=12 ({tau_time:.2?}) nu=11 optimal ({nu_time:.2?}, {} nodes)", nu.nodes_explored))
}

fn c2_isaak() -> Check {
    let t = paper_t();
    let back = t.backward_arcs(&alpha()).unwrap();
    let (check, dt) = timed(|| fasnu::fas::isaak_check(&t, &back).unwrap());
    let path: String = check.path.iter().flatten().map(|&v| letter(v)).collect();
    ensure(check.holds(), format!("{check:?}"))?;
    ensure(check.size == 12 && check.induced_acyclic, "size or acyclicity")?;
    ensure(path == "mkigeca", format!("path {path}"))?;
    ensure(dt < secs(1), format!("took {dt:?}"))?;
    Ok(format!("12 arcs, acyclic, path {path} ({dt:.2?})"))
}

fn c3_t7() -> Check {
    let t7 = paper_t7();
    let ((tau, nu), dt) = timed(|| (tau_exact(&t7).unwrap().tau, nu_exact(&t7, Budget::default())));
    ensure(tau == 5, format!("tau(T7) = {tau}"))?;
    ensure(nu.optimal && nu.value == 4, format!("nu(T7) = {} optimal={}", nu.value, nu.optimal))?;
    ensure(dt < secs(10), format!("took {dt:?}"))?;
    Ok(format!("tau=5 nu=4 optimal ({dt:.2?})"))
}

fn c4_t_prime() -> Check {
    let tp = paper_t_prime();
    let tau = tau_exact(&tp).unwrap().tau;
    ensure(tau == 15, format!("tau(T') = {tau}"))?;
    let (nu, dt) = timed(|| nu_exact(&tp, Budget::default()));
    ensure(is_valid_packing(&tp, &nu.certificate), "invalid certificate")?;
    if nu.optimal {
        ensure(nu.value == 14, format!("nu(T') = {}", nu.value))?;
        return Ok(format!("tau=15 nu=14 optimal within default budget ({dt:.2?})"));
    }
    // bracket 14 <= nu <= 15, then finish with an unlimited budget
    ensure(nu.value >= 14, format!("certificate only {}", nu.value))?;
    let full = nu_exact(&tp, Budget::unlimited());
    ensure(full.optimal && full.value == 14, format!("nu(T') = {}", full.value))?;
    Ok(format!("tau=15 nu=14 optimal after enlarged budget ({:.2?})", full.elapsed))
}

fn c5_sweep() -> Check {
    let (r, dt) = timed(|| verify_nu_eq_tau_upto(6).unwrap());
    for o in &r.orders {
        ensure(o.identity_holds(), format!("identity fails at order {}", o.n))?;
    }
    let counts: Vec<usize> = r.orders.iter().map(|o| o.classes).collect();
    ensure(counts[5] == 56, format!("order-6 classes {counts:?}"))?;
    ensure(r.violations.is_empty(), format!("nu != tau on {:?}", r.violations))?;
    ensure(dt < secs(600), format!("took {dt:?}"))?;
    Ok(format!("{} classes {counts:?}, all nu=tau ({dt:.2?})", r.classes_checked()))
}

fn c6_t11() -> Check {
    let t11 = paper_t11();
    let k = 10;
    let (vals, dt) = timed(|| {
        (
            t11.is_eulerian(),
            t11.min_out_degree(),
            max_triangles_through(&t11, k).unwrap().0,
            max_triangles_bruteforce(&t11, k),
            max_cycles_through(&t11, k).unwrap().0,
        )
    });
    let (euler, delta, tri, tri_brute, flow) = vals;
    ensure(euler, "not eulerian")?;
    ensure(delta == 5, format!("delta+ = {delta}"))?;
    ensure(tri == 4 && tri_brute == 4, format!("triangles through k: {tri} (brute force {tri_brute})"))?;
    ensure(flow == 5, format!("cycles through k: {flow}"))?;
    ensure(dt < secs(10), format!("took {dt:?}"))?;
    Ok(format!("eulerian, delta+=5, triangles(k)=4 (brute force 4), cycles(k)=5 ({dt:.2?})"))
}

fn c7_family_c() -> Check {
    let (res, dt) = timed(|| {
        let t = paper_t();
        let c = family_c();
        let union = c.arcs();
        let missing: Vec<Arc> = t.backward_arcs(&alpha()).unwrap().iter().copied().filter(|a| !union.contains(a)).collect();
        (validate_packing(&t, &c), c.len(), c.cycles.iter().all(|x| x.len() == 3), missing)
    });
    let (valid, len, triangles, missing) = res;
    ensure(valid.is_ok(), format!("{valid:?}"))?;
    ensure(len == 11 && triangles, "not eleven 3-cycles")?;
    ensure(missing == vec![(12, 4)], format!("missing backward arcs {missing:?}"))?;
    ensure(dt < secs(1), format!("took {dt:?}"))?;
    Ok(format!("11 arc-disjoint 3-cycles, union misses only me ({dt:.2?})"))
}

fn c8_properties() -> Check {
    let start = Instant::now();
    let mut parts = Vec::new();

    let a = thm21_random_suite().unwrap();
    ensure(a.failures.is_empty(), format!("(a) {:?}", a.failures))?;
    parts.push(format!("a:{}v0", a.checks));

    let b = remark3_random_suite().unwrap();
    ensure(b.failures.is_empty() && b.instances == 300, format!("(b) {:?}", b.failures))?;
    parts.push("b:300".into());

    let c = landau_random_suite().unwrap();
    ensure(c.failures.is_empty() && c.instances == 300, format!("(c) {:?}", c.failures))?;
    parts.push(format!("c:{}v", c.checks));

    for seed in 0..300u64 {
        let n = 1 + (seed % 6) as usize;
        let g = random_oriented(n, 0.5, 0xacc_d000 + seed);
        let r = nu_exact(&g, Budget::default());
        ensure(r.optimal && r.value == nu_bruteforce(&g).unwrap(), format!("(d) seed {seed}"))?;
    }
    parts.push("d:300".into());

    for seed in 0..300u64 {
        let n = 1 + (seed % 7) as usize;
        let g = random_digraph(n, 0.4, 0xacc_e000 + seed);
        ensure(tau_exact(&g).unwrap().tau == tau_all_orderings(&g), format!("(e) seed {seed}"))?;
    }
    parts.push("e:300".into());

    for seed in 0..200u64 {
        let n = 1 + (seed % 6) as usize;
        let g = random_oriented(n, 0.7, 0xacc_f000 + seed);
        let v0 = seed as usize % n;
        let k = max_cycles_through(&g, v0).unwrap().0;
        ensure(k == max_cycles_through_bruteforce(&g, v0), format!("(f) seed {seed}"))?;
    }
    parts.push("f:200".into());

    let gs = seymour_suite().unwrap();
    ensure(gs.failures.is_empty(), format!("(g) {:?}", gs.failures))?;
    parts.push(format!("g:{}", gs.instances));

    let dt = start.elapsed();
    ensure(dt < secs(15 * 60), format!("took {dt:?}"))?;
    Ok(format!("0 failures [{}] ({dt:.2?})", parts.join(" ")))
}

fn c9_enumeration() -> Check {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in 1..=7 {
        let codes = enumerate_codes(n).unwrap();
        let s = order_summary(n, &codes).unwrap();
        ensure(s.identity_holds(), format!("order {n}: {} != {}", s.labeled_sum, s.labeled_total))?;
        counts.push(s.classes);
    }
    let hits = search_counterexamples(7, Predicate::NuLtTau).unwrap();
    let t7 = canonical_code(&paper_t7()).unwrap();
    ensure(hits.contains(&t7), format!("T7 class {t7} not among {} hits", hits.len()))?;
    let dt = start.elapsed();
    ensure(dt < secs(600), format!("took {dt:?}"))?;
    Ok(format!("classes {counts:?}, {} order-7 classes with nu<tau incl. T7 {t7} ({dt:.2?})", hits.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "tau(T)=12, nu(T)=11", c1_paper_t),
        (2, "Isaak hypothesis on T", c2_isaak),
        (3, "tau(T7)=5, nu(T7)=4", c3_t7),
        (4, "tau(T')=15, nu(T')=14", c4_t_prime),
        (5, "nu=tau on all tournaments of order <= 6", c5_sweep),
        (6, "T11 through k", c6_t11),
        (7, "family C", c7_family_c),
        (8, "property suites", c8_properties),
        (9, "enumeration and order-7 nu<tau", c9_enumeration),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        match std::panic::catch_unwind(f) {
            Ok(Ok(detail)) => println!("ACCEPTANCE {id} PASS {name}: {detail}"),
            Ok(Err(why)) => {
                failed += 1;
                println!("ACCEPTANCE {id} FAIL {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("ACCEPTANCE {id} FAIL {name}: panicked");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
