//! The `verify` subcommand: bundled worked examples plus sweep-level checks.

use std::collections::BTreeSet;

use anyhow::{ensure, Context, Result};

use grassclique::codeprof::is_projective;
use grassclique::fixtures::{goldens, Golden};
use grassclique::starlab::oracle::extends_clique;
use grassclique::starlab::{census_reports, star_extensions, StarReport};
use grassclique::{
    census, classify_star, component_count, gaussian_binomial, is_maximal_clique_oracle, top_pi,
    w_dim, Field, GrassmannParams, Grassmannian, Kind, Subspace,
};

use crate::Outcome;

const CENSUSES: [(u32, usize, usize); 4] = [(2, 5, 3), (2, 6, 3), (3, 5, 3), (4, 4, 2)];
const COUNTS: [(u32, usize, usize, u128); 5] = [
    (2, 5, 2, 155),
    (2, 6, 3, 1395),
    (3, 4, 2, 130),
    (3, 5, 3, 1210),
    (4, 4, 2, 357),
];

fn params(q: u32, n: usize, k: usize) -> Result<GrassmannParams> {
    Ok(GrassmannParams::new(Field::new(q)?, n, k)?)
}

fn field_axioms() -> Result<String> {
    let orders = [2, 3, 4, 5, 7, 8, 9];
    for q in orders {
        let f = Field::new(q)?;
        for a in f.codes() {
            ensure!(f.add(a, f.neg(a)) == 0, "GF({q}): additive inverse of {a}");
            if a != 0 {
                ensure!(
                    f.inv(a).map(|i| f.mul(a, i)) == Some(1),
                    "GF({q}): inverse of {a}"
                );
            }
            for b in f.codes() {
                ensure!(f.mul(a, b) == f.mul(b, a), "GF({q}): commutativity");
                for c in f.codes() {
                    ensure!(
                        f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                            && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)),
                        "GF({q}): axioms fail at ({a},{b},{c})"
                    );
                }
            }
        }
    }
    Ok(format!("orders {orders:?}"))
}

fn counts() -> Result<String> {
    for (q, n, k, want) in COUNTS {
        let got = Grassmannian::new(&Field::new(q)?, n, k)?.count() as u128;
        let formula = gaussian_binomial(n as i64, k as i64, q as u64)?;
        ensure!(
            got == want && formula == want,
            "({q},{n},{k}): {got} enumerated, {formula} by formula"
        );
    }
    Ok(format!("{} parameter sets", COUNTS.len()))
}

fn check_golden(g: &Golden) -> Result<String> {
    let s = g.centre()?;
    let class = classify_star(&s)?;
    let exts = star_extensions(&s)?;
    let members: Vec<Subspace> = exts.iter().map(|e| e.code.clone()).collect();
    ensure!(
        class.kind == g.kind,
        "kind {:?}, expected {:?}",
        class.kind,
        g.kind
    );
    ensure!(
        members.len() as u64 == g.size,
        "{} members, expected {}",
        members.len(),
        g.size
    );
    let verdict = is_maximal_clique_oracle(&members)?;
    ensure!(
        verdict.maximal == (g.kind == Kind::Star),
        "oracle disagrees"
    );
    if let Some(d) = g.w_dim {
        ensure!(w_dim(&s)? == d, "w_dim differs");
    }
    if let Some(t) = g.equals_top {
        ensure!(class.equals_top == t, "equals_top {}", class.equals_top);
    }
    if !g.extensions.is_empty() {
        let f = s.field();
        let normal = |w: &[u8]| -> Vec<u8> {
            let lead = w.iter().copied().find(|&x| x != 0).unwrap_or(1);
            let inv = f.inv(lead).unwrap_or(1);
            w.iter().map(|&x| f.mul(x, inv)).collect()
        };
        let got: BTreeSet<_> = exts.iter().map(|e| normal(&e.w)).collect();
        let want: BTreeSet<_> = g.extensions.iter().map(|w| normal(w)).collect();
        ensure!(got == want, "extension vectors differ");
    }
    if !g.members.is_empty() {
        let want = g
            .members
            .iter()
            .map(|m| g.code(m))
            .collect::<Result<BTreeSet<_>, _>>()?;
        ensure!(want == members.iter().cloned().collect(), "members differ");
    }
    if let Some(w) = &g.witness {
        ensure!(
            extends_clique(&members, &g.code(w)?),
            "listed witness rejected"
        );
    }
    if !g.outside_top.is_empty() {
        let u = class.top_witness.as_ref().context("no top")?;
        for t in &g.outside_top {
            let c = g.code(t)?;
            ensure!(
                u.contains(&c)? && !c.contains(&s)? && !is_projective(&c),
                "{t} is not a non-projective code of the top avoiding the centre"
            );
        }
    }
    Ok(format!("{:?}, {} members", class.kind, members.len()))
}

fn w_laws(reports: &[StarReport]) -> Result<()> {
    for r in reports {
        match r.w_dim {
            1 => ensure!(
                r.kind == Kind::NotMaximal,
                "{:?}: w_dim 1 but {:?}",
                r.s,
                r.kind
            ),
            2 if r.kind == Kind::Star => {
                let u = r.top_witness.as_ref().context("missing top")?;
                let top: BTreeSet<_> = top_pi(u)?.into_iter().collect();
                ensure!(
                    top == r.members.iter().cloned().collect(),
                    "{:?}: star is not a top",
                    r.s
                );
            }
            d if d > 2 => ensure!(
                r.kind == Kind::Star,
                "{:?}: w_dim {d} but {:?}",
                r.s,
                r.kind
            ),
            _ => {}
        }
        if r.profile.zero_count == 1 && r.profile.max_l() <= 1 {
            let law = (r.q as usize).pow((r.n - r.k) as u32);
            ensure!(
                r.actual_size == law,
                "{:?}: size {} != {law}",
                r.s,
                r.actual_size
            );
        }
    }
    Ok(())
}

fn census_check(q: u32, n: usize, k: usize) -> Result<String> {
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let reports = census_reports(&params(q, n, k)?, jobs, false)?;
    let bad: Vec<_> = reports.iter().filter(|r| !r.agree).collect();
    ensure!(
        bad.is_empty(),
        "{} mismatches, first at {:?}",
        bad.len(),
        bad[0].s
    );
    w_laws(&reports)?;
    Ok(format!("{} centres, 0 mismatches", reports.len()))
}

fn determinism() -> Result<String> {
    let p = params(2, 5, 3)?;
    let a = serde_json::to_vec(&census(&p, 1, false)?)?;
    let b = serde_json::to_vec(&census(&p, 3, false)?)?;
    ensure!(a == b, "outputs differ");
    Ok(format!("{} bytes, jobs 1 and 3", a.len()))
}

fn connectivity() -> Result<String> {
    let c = component_count(&params(7, 4, 2)?, false)?;
    ensure!(c == 1, "{c} components");
    Ok("1 component".into())
}

pub(crate) fn run() -> Result<Outcome> {
    let mut checks: Vec<(String, Result<String>)> = vec![
        ("field axioms".into(), field_axioms()),
        ("subspace counts".into(), counts()),
    ];
    for g in goldens() {
        let r = check_golden(&g);
        checks.push((format!("example {}", g.name), r));
    }
    for (q, n, k) in CENSUSES {
        checks.push((format!("census q={q} n={n} k={k}"), census_check(q, n, k)));
    }
    checks.push(("census determinism".into(), determinism()));
    checks.push(("connectivity q=7 n=4 k=2".into(), connectivity()));

    let width = checks.iter().map(|(n, _)| n.len()).max().unwrap_or(0);
    let mut failures = 0;
    for (name, result) in &checks {
        match result {
            Ok(detail) => println!("{name:<width$}  PASS  {detail}"),
            Err(e) => {
                failures += 1;
                println!("{name:<width$}  FAIL  {e:#}");
            }
        }
    }
    println!("{} checks, {failures} failed", checks.len());
    Ok(if failures == 0 {
        Outcome::Clean
    } else {
        Outcome::Mismatch
    })
}
