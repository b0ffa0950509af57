//! Acceptance suite: the four worked examples, the exhaustive
//! theorem-equivalence campaign over all groups of order <= 8, and the
//! structural properties that must hold on every swept scheme.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see one
//! pass/fail line per criterion.

use std::sync::OnceLock;
use std::time::Instant;

use nearring_cli::examples;
use nearring_cli::sweep::{sweep_schemes, SweepItem};

use nearring_core::autos::{automorphism_group, AutomorphismSet};
use nearring_core::group::{ElementSet, FiniteGroup};
use nearring_core::nearring::NearRing;
use nearring_core::ngroup::NGroupAction;
use nearring_core::primitivity::{cross_check, density_check, embed};
use nearring_core::sandwich::{build_phi, decompose_phi, SandwichScheme};

const MAX_ELEMENTS: usize = 4096;
const SWEEP_ORDER: usize = 8;

fn report(criterion: &str, pass: bool, detail: &str) {
    println!("criterion {criterion}: {} ({detail})", if pass { "pass" } else { "FAIL" });
    assert!(pass, "criterion {criterion} failed: {detail}");
}

fn run_claims(criterion: &str, claims: Vec<examples::Claim>, elapsed_limit_s: f64, t0: Instant) {
    let elapsed = t0.elapsed().as_secs_f64();
    let failed: Vec<&examples::Claim> = claims.iter().filter(|c| !c.pass).collect();
    let pass = failed.is_empty() && elapsed < elapsed_limit_s;
    let detail = if failed.is_empty() {
        format!("{} claims, {elapsed:.2}s", claims.len())
    } else {
        format!("{:?}", failed.iter().map(|c| c.name).collect::<Vec<_>>())
    };
    report(criterion, pass, &detail);
}

#[test]
fn criterion_1_z4_small_example() {
    let t0 = Instant::now();
    let claims = examples::run_z4_small(MAX_ELEMENTS).expect("example runs");
    run_claims("1 (Z4 small example)", claims, 1.0, t0);
}

#[test]
fn criterion_2_z4_large_example() {
    let t0 = Instant::now();
    let claims = examples::run_z4_large(MAX_ELEMENTS).expect("example runs");
    run_claims("2 (Z4 large example)", claims, 1.0, t0);
}

#[test]
fn criterion_3_z7_example() {
    let t0 = Instant::now();
    let claims = examples::run_z7(MAX_ELEMENTS).expect("example runs");
    run_claims("3 (Z7 example)", claims, 1.0, t0);
}

#[test]
fn criterion_4_zpq_example() {
    let t0 = Instant::now();
    let claims = examples::run_z15(MAX_ELEMENTS).expect("example runs");
    run_claims("4 (Z15 = Z_pq example)", claims, 5.0, t0);
}

/// Everything the one pass over the sweep produces, shared by criteria
/// 5, 6, 7 and 9.
struct SweepOutcome {
    schemes: usize,
    elapsed_s: f64,
    /// (group, phi) of any theorem/direct disagreement — must stay empty
    mismatches: Vec<String>,
    size_formula_failures: Vec<String>,
    phi_roundtrip_failures: Vec<String>,
    embedded: usize,
    embed_failures: Vec<String>,
    micro_failures: Vec<String>,
}

fn item_label(item: &SweepItem) -> String {
    format!("{} phi={:?}", item.group_name, item.scheme.phi())
}

fn right_distributivity_ok(nr: &NearRing) -> bool {
    let n = nr.len();
    if n <= 16 {
        // all triples
        for a in 0..n {
            for b in 0..n {
                let ab = nr.add(a, b);
                for c in 0..n {
                    if nr.mul(ab, c) != nr.add(nr.mul(a, c), nr.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    } else {
        // deterministic corner sample; the law is structural for
        // pointwise sums, the sample guards the table plumbing
        let picks = [0, 1, n / 3, n / 2, 2 * n / 3, n - 1];
        for &a in &picks {
            for &b in &picks {
                let ab = nr.add(a, b);
                for &c in &picks {
                    if nr.mul(ab, c) != nr.add(nr.mul(a, c), nr.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

fn orbit_partition_ok(scheme: &SandwichScheme) -> bool {
    let order = scheme.gamma().order();
    let carrier = ElementSet::full(order);
    match scheme.autos().orbits(&carrier) {
        Ok(orbits) => {
            let total: usize = orbits.iter().map(|o| o.len()).sum();
            let mut seen = vec![false; order];
            for o in &orbits {
                for a in o.iter() {
                    if seen[a] {
                        return false;
                    }
                    seen[a] = true;
                }
            }
            total == order
        }
        Err(_) => false,
    }
}

fn sweep_outcome() -> &'static SweepOutcome {
    static OUTCOME: OnceLock<SweepOutcome> = OnceLock::new();
    OUTCOME.get_or_init(|| {
        let t0 = Instant::now();
        let items = sweep_schemes(SWEEP_ORDER, MAX_ELEMENTS).expect("sweep enumerates");
        let mut out = SweepOutcome {
            schemes: items.len(),
            elapsed_s: 0.0,
            mismatches: Vec::new(),
            size_formula_failures: Vec::new(),
            phi_roundtrip_failures: Vec::new(),
            embedded: 0,
            embed_failures: Vec::new(),
            micro_failures: Vec::new(),
        };
        for item in &items {
            let scheme = &item.scheme;
            let nr = match NearRing::enumerate_centralizer(scheme, MAX_ELEMENTS) {
                Ok(nr) => nr,
                Err(e) => {
                    out.size_formula_failures.push(format!("{}: {e}", item_label(item)));
                    continue;
                }
            };
            // criterion 6: |N| = |Gamma|^k
            let k = scheme.orbit_count().expect("valid scheme");
            if nr.len() != scheme.gamma().order().pow(k as u32) {
                out.size_formula_failures.push(item_label(item));
            }
            // criterion 5: both decision routes agree on non-rings
            let verdict = match cross_check(scheme, MAX_ELEMENTS) {
                Ok(v) => v,
                Err(e) => {
                    out.mismatches.push(format!("{}: {e}", item_label(item)));
                    continue;
                }
            };
            if verdict.applicable && verdict.agree != Some(true) {
                out.mismatches.push(item_label(item));
            }
            // criterion 7: build_phi inverts decompose_phi
            match decompose_phi(scheme)
                .and_then(|r| build_phi(scheme.gamma(), scheme.autos(), &r))
            {
                Ok(rebuilt) if rebuilt.phi() == scheme.phi() => {}
                _ => out.phi_roundtrip_failures.push(item_label(item)),
            }
            // criterion 7: embed round trip on faithful type-1 instances
            let direct = verdict.direct.as_ref().expect("cross_check fills direct");
            if direct.verdict.faithful && direct.verdict.type1 {
                let round_trip = NGroupAction::from_scheme(&nr, scheme)
                    .and_then(|action| embed(&action, MAX_ELEMENTS))
                    .and_then(|emb| {
                        let image: Vec<_> = emb
                            .pairing
                            .iter()
                            .map(|&j| emb.target.element(j).clone())
                            .collect();
                        let dense = density_check(&image, &emb.scheme, MAX_ELEMENTS)?;
                        // criterion 9: Aut_N is closed under inverses
                        let s = emb.scheme.autos();
                        let closed = s
                            .maps()
                            .iter()
                            .all(|m| m.inverse_map().is_some_and(|inv| s.contains(&inv)));
                        Ok((dense, closed))
                    });
                out.embedded += 1;
                match round_trip {
                    Ok((true, true)) => {}
                    Ok((dense, closed)) => out.embed_failures.push(format!(
                        "{}: dense={dense} inverse-closed={closed}",
                        item_label(item)
                    )),
                    Err(e) => out.embed_failures.push(format!("{}: {e}", item_label(item))),
                }
            }
            // criterion 9: micro-properties
            if direct.verdict.type2 && !direct.verdict.type1 {
                out.micro_failures.push(format!("{}: type2 without type1", item_label(item)));
            }
            let phi = scheme.phi();
            if (0..phi.len()).any(|a| phi[phi[a]] != phi[a]) {
                out.micro_failures.push(format!("{}: phi not idempotent", item_label(item)));
            }
            if !orbit_partition_ok(scheme) {
                out.micro_failures.push(format!("{}: orbits do not partition", item_label(item)));
            }
            if !right_distributivity_ok(&nr) {
                out.micro_failures
                    .push(format!("{}: right distributivity", item_label(item)));
            }
        }
        out.elapsed_s = t0.elapsed().as_secs_f64();
        out
    })
}

#[test]
fn criterion_5_theorem_equivalence_campaign() {
    let out = sweep_outcome();
    report(
        "5 (theorem-equivalence campaign)",
        out.mismatches.is_empty() && out.elapsed_s < 600.0,
        &format!(
            "{} schemes, {} mismatches, {:.0}s {:?}",
            out.schemes,
            out.mismatches.len(),
            out.elapsed_s,
            &out.mismatches[..out.mismatches.len().min(3)]
        ),
    );
}

#[test]
fn criterion_6_size_formula() {
    let out = sweep_outcome();
    report(
        "6 (size formula |N| = |Gamma|^k)",
        out.size_formula_failures.is_empty(),
        &format!(
            "{} schemes, failures: {:?}",
            out.schemes,
            &out.size_formula_failures[..out.size_formula_failures.len().min(3)]
        ),
    );
}

#[test]
fn criterion_7_round_trips() {
    let out = sweep_outcome();
    report(
        "7 (phi and embed round trips)",
        out.phi_roundtrip_failures.is_empty() && out.embed_failures.is_empty(),
        &format!(
            "{} schemes, {} embedded, failures: {:?} {:?}",
            out.schemes,
            out.embedded,
            &out.phi_roundtrip_failures[..out.phi_roundtrip_failures.len().min(3)],
            &out.embed_failures[..out.embed_failures.len().min(3)]
        ),
    );
}

#[test]
fn criterion_8_classical_specialization() {
    let t0 = Instant::now();
    let mut failures: Vec<String> = Vec::new();
    let mut checked = 0;
    for (order, s_orders) in [(5usize, vec![2usize, 4]), (7, vec![2, 6])] {
        let gamma = FiniteGroup::cyclic(order).expect("positive order");
        let auts = automorphism_group(&gamma).expect("within bound");
        for target in s_orders {
            let s: AutomorphismSet = auts
                .subgroups()
                .into_iter()
                .find(|s| s.len() == target)
                .expect("cyclic Aut has one subgroup per divisor");
            let nonzero: ElementSet = (1..order).collect();
            assert!(s.is_fixedpointfree_on(&nonzero).expect("invariant set"));
            let scheme =
                SandwichScheme::from_parts(gamma.clone(), s.clone(), (0..order).collect())
                    .expect("well-formed");
            let label = format!("Z{order} |S|={target}");
            let k = scheme.orbit_count().expect("valid");
            let mut nr = match NearRing::enumerate_centralizer(&scheme, MAX_ELEMENTS) {
                Ok(nr) => nr,
                Err(e) => {
                    failures.push(format!("{label}: {e}"));
                    continue;
                }
            };
            nr.materialize_tables().expect("within table limit");
            if nr.len() != order.pow(k as u32) {
                failures.push(format!("{label}: size {}", nr.len()));
            }
            if nr.identities().two_sided.is_none() {
                failures.push(format!("{label}: no two-sided identity"));
            }
            match cross_check(&scheme, MAX_ELEMENTS) {
                Ok(v) if v.two_primitive == Some(true) => {}
                Ok(v) => failures.push(format!("{label}: two_primitive = {:?}", v.two_primitive)),
                Err(e) => failures.push(format!("{label}: {e}")),
            }
            checked += 1;
        }
    }
    report(
        "8 (classical M_S(Gamma) specialization)",
        failures.is_empty(),
        &format!("{checked} schemes in {:.2}s, failures: {failures:?}", t0.elapsed().as_secs_f64()),
    );
}

#[test]
fn criterion_9_structural_micro_properties() {
    let out = sweep_outcome();
    report(
        "9 (structural micro-properties)",
        out.micro_failures.is_empty(),
        &format!(
            "{} schemes, failures: {:?}",
            out.schemes,
            &out.micro_failures[..out.micro_failures.len().min(3)]
        ),
    );
}
