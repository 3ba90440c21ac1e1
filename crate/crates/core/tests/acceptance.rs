//! One line per acceptance criterion: `criterion N: PASS` or `FAIL`.
//!
//! Every comparison is exact (rational arithmetic, tolerance 0). The only
//! non-exact bounds are the wall-time budgets below.

mod common;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use harmonica::dyck;
use harmonica::linalg::Rational;
use harmonica::operators::{
    bracket, check_preserves, commutes_with_differentials, hamiltonian_prediction, GradedMap,
    OperatorSpec,
};
use harmonica::par::Exec;
use harmonica::spaces::{delta_orbit, GradedModel, Isotype};
use harmonica::structure::{
    export_homology, lefschetz_check, reference, Cogenerator, GradingDictionary,
};
use harmonica::superpoly::{Polynomial, TriDegree, Var};
use harmonica::verify::Session;

/// Wall-time budget for building `DR_3`.
const BUDGET_N3: Duration = Duration::from_secs(5);
/// Wall-time budget for building `DR_4`.
const BUDGET_N4: Duration = Duration::from_secs(600);
const PROPTEST_RANK_CASES: u32 = 200;
const PROPTEST_POLY_CASES: u32 = 100;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: harmonica::Error) -> String {
    e.to_string()
}

struct Ctx {
    sessions: BTreeMap<usize, Session>,
    build_times: BTreeMap<usize, Duration>,
}

impl Ctx {
    fn new() -> Self {
        let mut sessions = BTreeMap::new();
        let mut build_times = BTreeMap::new();
        for n in 2..=4 {
            let s =
                Session::new(n, false, Exec::default(), None).expect("n within the default cap");
            let start = Instant::now();
            s.coinvariants().expect("DR_n builds");
            build_times.insert(n, start.elapsed());
            sessions.insert(n, s);
        }
        Ctx {
            sessions,
            build_times,
        }
    }

    fn s(&self, n: usize) -> &Session {
        &self.sessions[&n]
    }
}

fn c1(ctx: &Ctx) -> Outcome {
    for (n, want) in [(2, 3), (3, 16), (4, 125)] {
        let got = ctx.s(n).coinvariants().map_err(err)?.total_dim();
        ensure(got == want, || {
            format!("dim DR_{n} = {got}, expected {want}")
        })?;
    }
    let (t3, t4) = (ctx.build_times[&3], ctx.build_times[&4]);
    ensure(t3 <= BUDGET_N3, || format!("DR_3 took {t3:?}"))?;
    ensure(t4 <= BUDGET_N4, || format!("DR_4 took {t4:?}"))?;
    Ok(format!(
        "3, 16, 125; build DR_3 {:.2}s, DR_4 {:.2}s",
        t3.as_secs_f64(),
        t4.as_secs_f64()
    ))
}

fn c2(ctx: &Ctx) -> Outcome {
    for (n, want) in [(2, 2), (3, 5), (4, 14)] {
        let got = ctx.s(n).sign().map_err(err)?.total_dim();
        ensure(got == want, || {
            format!("dim DR_{n}^sgn = {got}, expected {want}")
        })?;
    }
    Ok("2, 5, 14".into())
}

fn c3(ctx: &Ctx) -> Outcome {
    for n in 2..=4 {
        let got = ctx.s(n).sign().map_err(err)?.hilbert();
        let want = dyck::catalan_series(n).map_err(err)?;
        ensure(got == want, || format!("n = {n}: {got} vs {want}"))?;
    }
    let n3 = ctx.s(3).sign().map_err(err)?.hilbert().to_string();
    ensure(n3 == "q^3 + q^2*t + q*t^2 + q*t + t^3", || {
        format!("n = 3 renders as {n3}")
    })?;
    Ok(format!("n = 3: {n3}"))
}

fn c4(ctx: &Ctx) -> Outcome {
    for (n, want) in [(2, vec![2, 1]), (3, vec![5, 5, 1])] {
        let got = ctx.s(n).hook().map_err(err)?.hilbert().by_a();
        ensure(got == want, || {
            format!("n = {n}: {got:?}, expected {want:?}")
        })?;
    }
    Ok("(2,1) and (5,5,1)".into())
}

/// `(Q, T)` of the eleven generators of the reference figure, per `A`.
const FIGURE_QT: [(i64, i64, i64); 11] = [
    (0, -6, 0),
    (0, -2, 2),
    (0, 0, 4),
    (0, 2, 4),
    (0, 6, 6),
    (2, -4, 3),
    (2, -2, 5),
    (2, 0, 5),
    (2, 2, 7),
    (2, 4, 7),
    (4, 0, 8),
];

fn c5(ctx: &Ctx) -> Outcome {
    let s = ctx.s(3);
    let hook = s.hook().map_err(err)?;
    let classes: Vec<TriDegree> = hook
        .degrees()
        .into_iter()
        .flat_map(|d| std::iter::repeat_n(d, hook.dim(d)))
        .collect();
    let fits = reference::fit_dictionaries(&classes, &reference::T34_GENERATORS);
    ensure(fits.len() == 1, || format!("{} exact fits", fits.len()))?;
    let dict = fits[0].clone();
    ensure(dict == GradingDictionary::standard(3), || {
        "fit differs from the standard dictionary".into()
    })?;
    let table = export_homology(hook.as_ref(), &dict, s.exec()).map_err(err)?;
    for r in &table.records {
        let exact = dict.apply(TriDegree::new(r.dx, r.dy, r.da));
        let residual = [
            &exact[0] - &Rational::from(r.q),
            &exact[1] - &Rational::from(r.a),
            &exact[2] - &Rational::from(r.t),
        ];
        ensure(residual.iter().all(Rational::is_zero), || {
            format!("residual {residual:?} at record {}", r.index)
        })?;
    }
    let mut got: Vec<(i64, i64, i64)> = table.records.iter().map(|r| (r.a, r.q, r.t)).collect();
    let mut want = FIGURE_QT.to_vec();
    got.sort();
    want.sort();
    ensure(got == want, || format!("gradings {got:?}"))?;
    let problems = reference::arrow_mismatches(&table);
    ensure(problems.is_empty(), || problems.join("; "))?;
    for (name, count) in [("F1", 6), ("F2", 2), ("d1", 5), ("d2", 3)] {
        let k = table.operator(name).map_or(0, |o| o.entries.len());
        ensure(k == count, || {
            format!("{name} has {k} nonzero entries, {count} arrows drawn")
        })?;
    }
    Ok("11 (Q,T) pairs, unique fit, residual 0, 16 arrows".into())
}

fn c6(ctx: &Ctx) -> Outcome {
    for n in 2..=4 {
        let s = ctx.s(n);
        let dh = s.harmonics().map_err(err)?;
        let full = delta_orbit(n, true);
        ensure(full.same_as(&dh), || {
            format!("n = {n}: orbit with partials is {}", full.hilbert())
        })?;
        let sgn = dh.component(Isotype::Sign, s.exec());
        let orbit = delta_orbit(n, false);
        ensure(orbit.same_as(&sgn), || {
            format!("n = {n}: orbit is {}", orbit.hilbert())
        })?;
    }
    Ok("n = 2, 3, 4".into())
}

fn c7(ctx: &Ctx) -> Outcome {
    for n in 2..=4 {
        let s = ctx.s(n);
        for k in 1..=n as u8 + 1 {
            let expect_zero = k as usize >= n;
            let f = s.hook_map(OperatorSpec::F(k)).map_err(err)?.is_zero();
            let dual = s.dual_map(k).map_err(err)?.is_zero();
            ensure(f == expect_zero && dual == expect_zero, || {
                format!("n = {n}, k = {k}: F zero {f}, Phi F Phi zero {dual}")
            })?;
        }
    }
    Ok("nonzero iff k <= n-1, for k <= n+1".into())
}

/// Applies a certificate to the lifted polynomial, independently of the
/// matrices used by the search, and checks the result against `c Δ(x)`.
fn c8(ctx: &Ctx) -> Outcome {
    let mut total = 0;
    for n in 2..=3 {
        let s = ctx.s(n);
        let hook = s.hook().map_err(err)?;
        let cg = Cogenerator::new(hook.as_ref(), s.exec()).map_err(err)?;
        let delta = Polynomial::vandermonde(Var::X, n);
        for d in hook.degrees() {
            for (j, lift) in hook.basis(d).into_iter().enumerate() {
                let v = hook
                    .coordinates(d, &lift)
                    .ok_or("basis element has no coordinates")?;
                let cert = cg
                    .search(d, &v)
                    .map_err(err)?
                    .ok_or_else(|| format!("n = {n}: no certificate for class {j} at {d}"))?;
                ensure(!cert.scalar.is_zero(), || "zero scalar".into())?;
                let mut p = lift.clone();
                for &big in cert.d_indices.iter().rev() {
                    p = OperatorSpec::D(big).diffop(n).apply(&p);
                }
                for (k, &e) in cert.f_exponents.iter().enumerate() {
                    for _ in 0..e {
                        p = OperatorSpec::F(k as u8 + 1).diffop(n).apply(&p);
                    }
                }
                let mut diff = p;
                diff.add_scaled(&-cert.scalar.clone(), &delta);
                let t = delta.degree().expect("nonzero");
                let ok = diff.is_zero() || hook.coordinates(t, &diff).is_some_and(|w| w.is_zero());
                ensure(ok, || {
                    format!(
                        "n = {n}: {cert} on class {j} at {d} is not {} Delta(x)",
                        cert.scalar
                    )
                })?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} classes certified"))
}

fn c9(ctx: &Ctx) -> Outcome {
    let s = ctx.s(3);
    let hook = s.hook().map_err(err)?;
    let exec = s.exec();
    let fields: Vec<(u8, u8)> = (2..=4u8)
        .flat_map(|t| (0..=t).map(move |a| (a, t - a)))
        .collect();
    let mut pairs = 0;
    for &u in &fields {
        for &v in &fields {
            let lhs = bracket(
                OperatorSpec::Hamiltonian(u.0, u.1),
                OperatorSpec::Hamiltonian(v.0, v.1),
                hook.as_ref(),
                exec,
            )
            .map_err(err)?;
            let rhs = hamiltonian_prediction(u, v, hook.as_ref(), exec).map_err(err)?;
            ensure(lhs.sub(&rhs).is_zero(), || format!("[v{u:?}, v{v:?}]"))?;
            pairs += 1;
        }
    }
    for k in 1..=3 {
        for m in 1..=3 {
            let c = bracket(OperatorSpec::F(k), OperatorSpec::F(m), hook.as_ref(), exec)
                .map_err(err)?;
            ensure(c.is_zero(), || format!("[F{k}, F{m}] != 0"))?;
        }
        for big in 1..=2 {
            let r = commutes_with_differentials(
                OperatorSpec::F(k),
                OperatorSpec::D(big),
                hook.as_ref(),
                exec,
            )
            .map_err(err)?;
            ensure(r.is_ok(), || {
                format!("[F{k}, d{big}] != 0 at {:?}", r.err())
            })?;
        }
    }
    Ok(format!(
        "{pairs} ordered Hamiltonian pairs, F_k commute, [F_k, d_N] = 0"
    ))
}

fn c10(ctx: &Ctx) -> Outcome {
    for n in 2..=4 {
        let s = ctx.s(n);
        let hook = s.hook().map_err(err)?;
        let f1 = s.hook_map(OperatorSpec::F(1)).map_err(err)?;
        lefschetz_check(hook.as_ref(), &f1).map_err(|e| format!("n = {n}: {e}"))?;
        let phi = s.phi().map_err(err)?;
        let id = GradedMap::identity(hook.as_ref());
        ensure(phi.compose(&phi).sub(&id).is_zero(), || {
            format!("n = {n}: Phi^2 != Id")
        })?;
        let class = |v: Var| {
            let p = Polynomial::vandermonde(v, n);
            let d = p.degree().expect("nonzero");
            hook.coordinates(d, &p).map(|c| (d, c))
        };
        let ((dy, vy), (dx, vx)) = (
            class(Var::Y).ok_or("no Delta(y) class")?,
            class(Var::X).ok_or("no Delta(x) class")?,
        );
        let (t, image) = phi.apply(dy, &vy);
        ensure(t == Some(dx), || {
            format!("n = {n}: Phi moves Delta(y) to {t:?}")
        })?;
        let c = image.ratio_to(&vx).filter(|c| !c.is_zero());
        ensure(c.is_some(), || {
            format!("n = {n}: Phi(Delta(y)) is not a multiple of Delta(x)")
        })?;
    }
    Ok("n = 2, 3, 4".into())
}

fn c11(ctx: &Ctx) -> Outcome {
    for n in 2..=3 {
        let s = ctx.s(n);
        let ideal = s.ideal();
        let (j, sign) = (ideal.j_mod_mj(), s.sign().map_err(err)?.hilbert());
        ensure(j == sign, || format!("n = {n}: J/mJ = {j}, sign = {sign}"))?;
        let (jb, hook) = (ideal.jbar_mod_mjbar(), s.hook().map_err(err)?.hilbert());
        ensure(jb == hook, || {
            format!("n = {n}: Jbar/mJbar = {jb}, hook = {hook}")
        })?;
        for k in 1..=n as u8 {
            for spec in [OperatorSpec::E(k), OperatorSpec::F(k)] {
                for space in [ideal.ideal(), ideal.m_ideal()] {
                    check_preserves(spec, space, ideal.bound())
                        .map_err(|w| format!("n = {n}: {spec} at {}: {}", w.degree, w.element))?;
                }
            }
        }
    }
    Ok("n = 2, 3".into())
}

fn c12(_: &Ctx) -> Outcome {
    let run =
        |cases: u32, f: &dyn Fn(&mut proptest::test_runner::TestRunner) -> Result<(), String>| {
            f(&mut common::seeded_runner(cases))
        };
    run(PROPTEST_RANK_CASES, &|r| {
        r.run(&common::small_matrix(), |m| common::rank_agrees(&m))
            .map_err(|e| e.to_string())
    })?;
    run(PROPTEST_POLY_CASES, &|r| {
        r.run(&common::poly_pair(), |(p, q)| common::leibniz_holds(&p, &q))
            .map_err(|e| e.to_string())
    })?;
    run(PROPTEST_POLY_CASES, &|r| {
        let g = proptest::collection::vec(-3i64..=3, 1..6);
        r.run(&(common::any_hom_poly(), g), |(f, g)| {
            common::adjunction_holds(&f, &g)
        })
        .map_err(|e| e.to_string())
    })?;
    Ok(format!(
        "rank {PROPTEST_RANK_CASES} cases, Leibniz {PROPTEST_POLY_CASES}, adjunction {PROPTEST_POLY_CASES}"
    ))
}

fn main() {
    let ctx = Ctx::new();
    let criteria: [fn(&Ctx) -> Outcome; 12] = [c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, c12];
    let mut failed = Vec::new();
    for (i, c) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(|| c(&ctx))).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS ({detail})", i + 1),
            Err(why) => {
                println!("criterion {}: FAIL ({why})", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("all {} criteria pass", criteria.len());
    } else {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
