//! The four worked examples (two on Z4, one on Z7, one on Z15) as a
//! checklist of machine-verified claims, shared by the paper-examples
//! subcommand and the acceptance suite.

use serde_json::{json, Value};

use nearring_core::autos::{automorphism_group, AutomorphismSet, GroupMap};
use nearring_core::group::{ElementSet, FiniteGroup};
use nearring_core::nearring::{restriction_isomorphism, NearRing, NrElement};
use nearring_core::ngroup::NGroupAction;
use nearring_core::primitivity::{compute_c, cross_check};
use nearring_core::sandwich::{build_phi, PhiRecipe, SandwichScheme};
use nearring_core::Result;

/// One verified claim of an example run.
#[derive(Debug, Clone)]
pub struct Claim {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Claim {
    fn new(name: &'static str, pass: bool, detail: impl Into<String>) -> Claim {
        Claim { name, pass, detail: detail.into() }
    }

    pub fn to_json(&self) -> Value {
        json!({ "claim": self.name, "pass": self.pass, "detail": self.detail })
    }
}

fn z(n: usize) -> FiniteGroup {
    FiniteGroup::cyclic(n).expect("positive order")
}

/// The (0,1,0,0) scheme on Z4 with trivial S.
pub fn z4_small_scheme() -> SandwichScheme {
    SandwichScheme::from_parts(z(4), AutomorphismSet::trivial(4), vec![0, 1, 0, 0])
        .expect("well-formed")
}

/// The (0,1,2,0) scheme on Z4 with trivial S.
pub fn z4_large_scheme() -> SandwichScheme {
    SandwichScheme::from_parts(z(4), AutomorphismSet::trivial(4), vec![0, 1, 2, 0])
        .expect("well-formed")
}

/// The Z7 recipe: S = {id, -id}, G = {1,2,5,6}, representatives 6 and 5,
/// J selects the orbit of 6, f maps 5 to 1.
pub fn z7_scheme() -> Result<SandwichScheme> {
    let z7 = z(7);
    let s = AutomorphismSet::closure_as_group(&z7, &[GroupMap::negation(&z7)])?;
    let recipe = PhiRecipe {
        g: ElementSet::new(vec![1, 2, 5, 6]),
        reps: vec![6, 5],
        j: vec![0],
        f: [(5usize, 1usize)].into_iter().collect(),
    };
    build_phi(&z7, &s, &recipe)
}

/// The Z15 scheme: S = Aut(Z15), X1 = the orbit of 1 (the units),
/// phi = id on units and 0 elsewhere.
pub fn z15_scheme() -> Result<SandwichScheme> {
    let z15 = z(15);
    let s = automorphism_group(&z15)?;
    let units: ElementSet = (1..15).filter(|&a| gcd(a, 15) == 1).collect();
    let recipe = PhiRecipe { g: units, reps: vec![1], j: vec![0], f: Default::default() };
    build_phi(&z15, &s, &recipe)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Z4, N = maps vanishing on {0,2,3}: 4 elements, type 1 but not
/// type 2, isomorphic to the (0,1,0,0) scheme near-ring.
pub fn run_z4_small(max_elements: usize) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let n = NearRing::annihilating(&z(4), &ElementSet::new(vec![0, 2, 3]), max_elements)?;
    claims.push(Claim::new("z4-small-size", n.len() == 4, format!("|N| = {}", n.len())));
    let a = NGroupAction::from_transformation(&n)?;
    let (theta1, theta0, _) = a.generators_split();
    claims.push(Claim::new(
        "z4-small-generators",
        theta1 == ElementSet::singleton(1) && theta0 == ElementSet::new(vec![0, 2, 3]),
        format!("theta1 = {:?}, theta0 = {:?}", theta1.as_slice(), theta0.as_slice()),
    ));
    let two = ElementSet::new(vec![0, 2]);
    let violation = a.n_ideal_violation(&two)?;
    claims.push(Claim::new(
        "z4-small-ideal-witness",
        violation.is_some_and(|v| !two.contains(v.value)),
        format!("{violation:?}"),
    ));
    claims.push(Claim::new(
        "z4-small-n-subgroup",
        a.n_subgroups()?.contains(&two),
        "{0,2} is an N-subgroup",
    ));
    let v = a.classify()?;
    claims.push(Claim::new(
        "z4-small-type",
        v.type1 && !v.type2,
        format!("type1 = {}, type2 = {}", v.type1, v.type2),
    ));
    let cert = restriction_isomorphism(&n, &z4_small_scheme(), max_elements)?;
    claims.push(Claim::new(
        "z4-small-restriction-iso",
        cert.pairs.len() == 4,
        format!("{} element pairs", cert.pairs.len()),
    ));
    let g1 = NrElement::new(vec![0, 1]);
    let g2 = NrElement::new(vec![0, 2]);
    let prod = cert.target.mul_checked(&g1, &g2)?;
    claims.push(Claim::new(
        "z4-small-zero-product",
        prod.is_zero(),
        format!("g1 o' g2 = {:?}", prod.values()),
    ));
    Ok(claims)
}

/// Z4, N1 = maps vanishing on {0,3}: 16 elements, type 2, isomorphic to
/// the (0,1,2,0) scheme near-ring.
pub fn run_z4_large(max_elements: usize) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let n1 = NearRing::annihilating(&z(4), &ElementSet::new(vec![0, 3]), max_elements)?;
    claims.push(Claim::new("z4-large-size", n1.len() == 16, format!("|N| = {}", n1.len())));
    let a = NGroupAction::from_transformation(&n1)?;
    let v = a.classify()?;
    claims.push(Claim::new("z4-large-type2", v.type2, format!("type2 = {}", v.type2)));
    let cert = restriction_isomorphism(&n1, &z4_large_scheme(), max_elements)?;
    claims.push(Claim::new(
        "z4-large-restriction-iso",
        cert.pairs.len() == 16,
        format!("{} element pairs", cert.pairs.len()),
    ));
    Ok(claims)
}

/// Z7: the recipe rebuilds phi = (0,1,6,0,0,1,6); the near-ring has 7
/// elements, is 2-primitive with both routes agreeing, and has a right
/// but no two-sided identity.
pub fn run_z7(max_elements: usize) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let scheme = z7_scheme()?;
    claims.push(Claim::new(
        "z7-phi",
        scheme.phi() == [0, 1, 6, 0, 0, 1, 6],
        format!("phi = {:?}", scheme.phi()),
    ));
    claims.push(Claim::new("z7-valid", scheme.validate().is_valid(), "scheme checks"));
    let nr = NearRing::enumerate_centralizer(&scheme, max_elements)?;
    claims.push(Claim::new("z7-size", nr.len() == 7, format!("|N| = {}", nr.len())));
    let v = cross_check(&scheme, max_elements)?;
    claims.push(Claim::new(
        "z7-two-primitive",
        v.two_primitive == Some(true) && v.agree == Some(true),
        format!("two_primitive = {:?}, agree = {:?}", v.two_primitive, v.agree),
    ));
    let ids = nr.identities();
    claims.push(Claim::new(
        "z7-identities",
        !ids.right.is_empty() && ids.two_sided.is_none(),
        format!("right = {:?}, two_sided = {:?}", ids.right, ids.two_sided),
    ));
    Ok(claims)
}

/// Z15 = Z_pq at p=3, q=5: |Aut| = (p-1)(q-1) = 8, one fixedpointfree
/// orbit of 8 units, C trivial, 1- but not 2-primitive, |N| = 15.
pub fn run_z15(max_elements: usize) -> Result<Vec<Claim>> {
    let mut claims = Vec::new();
    let z15 = z(15);
    let s = automorphism_group(&z15)?;
    claims.push(Claim::new("z15-aut-size", s.len() == 8, format!("|Aut| = {}", s.len())));
    let orbit = s.orbit_of(1);
    claims.push(Claim::new("z15-orbit-size", orbit.len() == 8, format!("|S(1)| = {}", orbit.len())));
    let fpf_on_units = s.is_fixedpointfree_on(&orbit)?;
    let all_nonzero: ElementSet = (1..15).collect();
    let fpf_everywhere = s.is_fixedpointfree_on(&all_nonzero)?;
    claims.push(Claim::new(
        "z15-fixedpointfree",
        fpf_on_units && !fpf_everywhere,
        format!("on units: {fpf_on_units}, on all: {fpf_everywhere}"),
    ));
    let scheme = z15_scheme()?;
    let c = compute_c(&scheme)?;
    claims.push(Claim::new(
        "z15-c-trivial",
        c == vec![ElementSet::singleton(0)],
        format!("C = {c:?}"),
    ));
    let v = cross_check(&scheme, max_elements)?;
    claims.push(Claim::new(
        "z15-primitivity",
        v.one_primitive == Some(true) && v.two_primitive == Some(false) && v.agree == Some(true),
        format!("one = {:?}, two = {:?}, agree = {:?}", v.one_primitive, v.two_primitive, v.agree),
    ));
    let nr = NearRing::enumerate_centralizer(&scheme, max_elements)?;
    claims.push(Claim::new("z15-size", nr.len() == 15, format!("|N| = {}", nr.len())));
    Ok(claims)
}

/// All four examples in order.
pub fn run_all(max_elements: usize) -> Result<Vec<Claim>> {
    let mut claims = run_z4_small(max_elements)?;
    claims.extend(run_z4_large(max_elements)?);
    claims.extend(run_z7(max_elements)?);
    claims.extend(run_z15(max_elements)?);
    Ok(claims)
}
