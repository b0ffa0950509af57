//! Sandwich schemes (Gamma, X, phi, S): construction of the sandwich
//! function phi from a recipe, validation of all scheme invariants, and
//! the converse decomposition back into a recipe.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::autos::AutomorphismSet;
use crate::error::Error;
use crate::group::{ElementSet, FiniteGroup};
use crate::Result;

/// The quadruple (Gamma, X, phi, S). X is never stored: it is the
/// fixed-point set of phi. Two schemes are equal iff their phi arrays
/// (and group and automorphism set) are equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SandwichScheme {
    gamma: FiniteGroup,
    autos: AutomorphismSet,
    phi: Vec<usize>,
}

/// Recipe for building phi: a fixedpointfree S-invariant set G with
/// orbit representatives, a nonempty subset J of orbits forming X_1,
/// and a map f sending each remaining representative into X_1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiRecipe {
    /// The set G, a union of fixedpointfree S-orbits with 0 excluded.
    pub g: ElementSet,
    /// Complete set of orbit representatives of S acting on G.
    pub reps: Vec<usize>,
    /// Indices into `reps` selecting the orbits whose union is X_1.
    pub j: Vec<usize>,
    /// For each representative not selected by `j`, its image in X_1.
    pub f: BTreeMap<usize, usize>,
}

/// Outcome of one scheme invariant check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchemeCheck {
    pub name: &'static str,
    pub pass: bool,
    pub counterexample: Option<String>,
}

/// Per-invariant validation report for a sandwich scheme.
#[derive(Debug, Clone)]
pub struct SchemeReport {
    pub checks: Vec<SchemeCheck>,
}

impl SchemeReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn first_failure(&self) -> Option<&SchemeCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

impl SandwichScheme {
    /// Wraps raw parts without validating; call [`SandwichScheme::validate`]
    /// to get the report.
    pub fn from_parts(
        gamma: FiniteGroup,
        autos: AutomorphismSet,
        phi: Vec<usize>,
    ) -> Result<SandwichScheme> {
        let n = gamma.order();
        if phi.len() != n {
            return Err(Error::InvalidArgument(format!(
                "phi has length {}, group has order {n}",
                phi.len()
            )));
        }
        if phi.iter().any(|&x| x >= n) {
            return Err(Error::InvalidArgument(String::from("phi value out of range")));
        }
        if autos.maps().first().map(|m| m.len()) != Some(n) {
            return Err(Error::InvalidArgument(String::from(
                "automorphism set acts on a group of different order",
            )));
        }
        Ok(SandwichScheme { gamma, autos, phi })
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn autos(&self) -> &AutomorphismSet {
        &self.autos
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    #[inline]
    pub fn phi_at(&self, a: usize) -> usize {
        self.phi[a]
    }

    /// X = {gamma : phi(gamma) = gamma}, the fixed-point set of phi.
    pub fn x(&self) -> ElementSet {
        self.phi
            .iter()
            .enumerate()
            .filter(|&(a, &fa)| a == fa)
            .map(|(a, _)| a)
            .collect()
    }

    /// X_1 = X \ {0}.
    pub fn x1(&self) -> ElementSet {
        self.x().minus(&ElementSet::singleton(0))
    }

    /// Gamma_0, the zero fiber of phi.
    pub fn gamma0(&self) -> ElementSet {
        self.phi
            .iter()
            .enumerate()
            .filter(|&(_, &fa)| fa == 0)
            .map(|(a, _)| a)
            .collect()
    }

    /// Number of S-orbits on X_1; the near-ring size is |Gamma|^k.
    pub fn orbit_count(&self) -> Result<usize> {
        Ok(self.autos.orbits(&self.x1())?.len())
    }

    /// Checks every scheme invariant and reports a concrete
    /// counterexample for each failure.
    pub fn validate(&self) -> SchemeReport {
        let n = self.gamma.order();
        let mut checks = Vec::new();

        let pass = self.phi[0] == 0;
        checks.push(SchemeCheck {
            name: "phi-fixes-zero",
            pass,
            counterexample: (!pass).then(|| format!("phi(0) = {}", self.phi[0])),
        });

        // range in X and phi restricted to X the identity, combined:
        // phi(phi(gamma)) = phi(gamma) for all gamma
        let mut idem = None;
        for a in 0..n {
            if self.phi[self.phi[a]] != self.phi[a] {
                idem = Some(a);
                break;
            }
        }
        checks.push(SchemeCheck {
            name: "phi-idempotent",
            pass: idem.is_none(),
            counterexample: idem
                .map(|a| format!("phi(phi({a})) = {} != phi({a}) = {}", self.phi[self.phi[a]], self.phi[a])),
        });

        let x1 = self.x1();
        checks.push(SchemeCheck {
            name: "x1-nonempty",
            pass: !x1.is_empty(),
            counterexample: x1.is_empty().then(|| String::from("phi is identically zero")),
        });

        let x = self.x();
        let mut escape = None;
        'outer: for a in x.iter() {
            for (si, s) in self.autos.maps().iter().enumerate() {
                if !x.contains(s.apply(a)) {
                    escape = Some((a, si));
                    break 'outer;
                }
            }
        }
        checks.push(SchemeCheck {
            name: "s-invariant-x",
            pass: escape.is_none(),
            counterexample: escape.map(|(a, si)| format!("s_{si}({a}) escapes X")),
        });

        let mut equiv = None;
        'outer: for a in 0..n {
            for (si, s) in self.autos.maps().iter().enumerate() {
                if self.phi[s.apply(a)] != s.apply(self.phi[a]) {
                    equiv = Some((a, si));
                    break 'outer;
                }
            }
        }
        checks.push(SchemeCheck {
            name: "equivariance",
            pass: equiv.is_none(),
            counterexample: equiv.map(|(a, si)| {
                let s = &self.autos.maps()[si];
                format!(
                    "gamma = {a}, s = s_{si}: phi(s({a})) = {} != s(phi({a})) = {}",
                    self.phi[s.apply(a)],
                    s.apply(self.phi[a])
                )
            }),
        });

        let mut fpf = None;
        if escape.is_none() {
            'outer: for (si, s) in self.autos.maps().iter().enumerate() {
                if si == self.autos.identity_index() {
                    continue;
                }
                for a in x1.iter() {
                    if s.apply(a) == a {
                        fpf = Some((a, si));
                        break 'outer;
                    }
                }
            }
        }
        checks.push(SchemeCheck {
            name: "fixedpointfree-x1",
            pass: fpf.is_none() && escape.is_none(),
            counterexample: fpf.map(|(a, si)| format!("s_{si} fixes {a} in X1")),
        });

        SchemeReport { checks }
    }

    /// For each element, the smallest member of the S-orbit of its phi
    /// value; equal ids mean equal orbit sets S(phi(a)).
    pub fn orbit_id_of_phi(&self) -> Vec<usize> {
        (0..self.gamma.order())
            .map(|a| self.autos.orbit_of(self.phi[a]).iter().next().unwrap())
            .collect()
    }
}

/// Builds phi from a recipe, per the orbit-representative construction:
/// zero outside G, identity on the J-orbits, s(f(e_k)) on the K-orbits.
pub fn build_phi(
    gamma: &FiniteGroup,
    autos: &AutomorphismSet,
    recipe: &PhiRecipe,
) -> Result<SandwichScheme> {
    let n = gamma.order();
    if recipe.g.contains(0) {
        return Err(Error::InvalidRecipe(String::from("G must not contain 0")));
    }
    if recipe.g.iter().any(|a| a >= n) {
        return Err(Error::InvalidRecipe(String::from("G element out of range")));
    }
    let orbits = autos
        .orbits(&recipe.g)
        .map_err(|_| Error::InvalidRecipe(String::from("G is not S-invariant")))?;
    if !recipe.g.is_empty()
        && !autos
            .is_fixedpointfree_on(&recipe.g)
            .map_err(|e| Error::InvalidRecipe(format!("fixedpointfree check failed: {e}")))?
    {
        return Err(Error::InvalidRecipe(String::from(
            "S does not act fixedpointfreely on G",
        )));
    }
    // representatives must hit every orbit exactly once
    if recipe.reps.len() != orbits.len() {
        return Err(Error::InvalidRecipe(format!(
            "expected {} orbit representatives, got {}",
            orbits.len(),
            recipe.reps.len()
        )));
    }
    let mut orbit_of_rep: Vec<ElementSet> = Vec::with_capacity(recipe.reps.len());
    let mut covered = ElementSet::empty();
    for &r in &recipe.reps {
        if !recipe.g.contains(r) {
            return Err(Error::InvalidRecipe(format!("representative {r} not in G")));
        }
        let orbit = autos.orbit_of(r);
        if orbit.iter().any(|a| covered.contains(a)) {
            return Err(Error::InvalidRecipe(String::from(
                "representatives share an orbit",
            )));
        }
        covered = covered.union(&orbit);
        orbit_of_rep.push(orbit);
    }
    if recipe.j.is_empty() {
        return Err(Error::InvalidRecipe(String::from("J must be nonempty")));
    }
    let mut j_sorted = recipe.j.clone();
    j_sorted.sort_unstable();
    j_sorted.dedup();
    if j_sorted.len() != recipe.j.len() || j_sorted.iter().any(|&i| i >= recipe.reps.len()) {
        return Err(Error::InvalidRecipe(String::from("J is not a subset of I")));
    }
    let mut x1 = ElementSet::empty();
    for &ji in &j_sorted {
        x1 = x1.union(&orbit_of_rep[ji]);
    }
    let k_indices: Vec<usize> = (0..recipe.reps.len())
        .filter(|i| j_sorted.binary_search(i).is_err())
        .collect();
    for &ki in &k_indices {
        match recipe.f.get(&recipe.reps[ki]) {
            Some(&target) if x1.contains(target) => {}
            Some(&target) => {
                return Err(Error::InvalidRecipe(format!(
                    "f({}) = {target} lies outside X1",
                    recipe.reps[ki]
                )))
            }
            None => {
                return Err(Error::InvalidRecipe(format!(
                    "f undefined on representative {}",
                    recipe.reps[ki]
                )))
            }
        }
    }
    if recipe.f.keys().any(|r| k_indices.iter().all(|&ki| recipe.reps[ki] != *r)) {
        return Err(Error::InvalidRecipe(String::from(
            "f defined on a non-K representative",
        )));
    }

    let mut phi = alloc::vec![0usize; n];
    for a in x1.iter() {
        phi[a] = a;
    }
    for &ki in &k_indices {
        let rep = recipe.reps[ki];
        let target = recipe.f[&rep];
        for s in autos.maps() {
            phi[s.apply(rep)] = s.apply(target);
        }
    }
    let scheme = SandwichScheme::from_parts(gamma.clone(), autos.clone(), phi)?;
    let report = scheme.validate();
    if !report.is_valid() {
        return Err(Error::InternalInconsistency(format!(
            "recipe-built scheme fails validation: {:?}",
            report.first_failure()
        )));
    }
    Ok(scheme)
}

/// Reads a canonical recipe back off a valid scheme: G is the support of
/// phi, representatives are orbit minima, J the orbits inside X_1, and
/// f(e_k) = phi(e_k). Round-trips through [`build_phi`] exactly.
pub fn decompose_phi(scheme: &SandwichScheme) -> Result<PhiRecipe> {
    let report = scheme.validate();
    if !report.is_valid() {
        return Err(Error::InvalidArgument(format!(
            "cannot decompose an invalid scheme: {:?}",
            report.first_failure()
        )));
    }
    let g = scheme.gamma0().complement(scheme.gamma().order());
    let orbits = scheme.autos().orbits(&g)?;
    let reps: Vec<usize> = orbits.iter().map(|o| o.iter().next().unwrap()).collect();
    let x1 = scheme.x1();
    let mut j = Vec::new();
    let mut f = BTreeMap::new();
    for (i, &r) in reps.iter().enumerate() {
        if x1.contains(r) {
            j.push(i);
        } else {
            f.insert(r, scheme.phi_at(r));
        }
    }
    Ok(PhiRecipe { g, reps, j, f })
}

/// Enumerates every canonical recipe for the pair (gamma, s) whose
/// near-ring stays within `max_elements`: J ranges over nonempty sets of
/// fixedpointfree orbits, K over disjoint sets, and f over all maps from
/// K-representatives into X_1.
pub fn enumerate_recipes(
    gamma: &FiniteGroup,
    autos: &AutomorphismSet,
    max_elements: usize,
) -> Result<Vec<PhiRecipe>> {
    let n = gamma.order();
    let nonzero: ElementSet = (1..n).collect();
    let orbits = autos.orbits(&nonzero)?;
    // an orbit is fixedpointfree exactly when its size equals |S|
    let fpf: Vec<&ElementSet> = orbits.iter().filter(|o| o.len() == autos.len()).collect();
    let m = fpf.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    if m > 32 {
        return Err(Error::ResourceLimit(format!("{m} fixedpointfree orbits")));
    }
    let mut out = Vec::new();
    for j_mask in 1u64..1 << m {
        let k_count = j_mask.count_ones() as usize;
        let size = (n as u128).checked_pow(k_count as u32);
        match size {
            Some(sz) if sz <= max_elements as u128 => {}
            _ => continue,
        }
        let x1_orbits: Vec<usize> = (0..m).filter(|&i| j_mask >> i & 1 == 1).collect();
        let mut x1 = ElementSet::empty();
        for &i in &x1_orbits {
            x1 = x1.union(fpf[i]);
        }
        let rest: Vec<usize> = (0..m).filter(|&i| j_mask >> i & 1 == 0).collect();
        for k_sub in 0u64..1 << rest.len() {
            let k_orbits: Vec<usize> = rest
                .iter()
                .enumerate()
                .filter(|&(pos, _)| k_sub >> pos & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            // orbit order: ascending by smallest member, matching decompose
            let mut chosen: Vec<usize> = x1_orbits.iter().chain(&k_orbits).copied().collect();
            chosen.sort_unstable();
            let reps: Vec<usize> = chosen
                .iter()
                .map(|&i| fpf[i].iter().next().unwrap())
                .collect();
            let j: Vec<usize> = chosen
                .iter()
                .enumerate()
                .filter(|&(_, i)| x1_orbits.contains(i))
                .map(|(pos, _)| pos)
                .collect();
            let mut g = ElementSet::empty();
            for &i in &chosen {
                g = g.union(fpf[i]);
            }
            let k_reps: Vec<usize> = k_orbits
                .iter()
                .map(|&i| fpf[i].iter().next().unwrap())
                .collect();
            // odometer over all maps f: K-reps -> X1
            let x1_elems: Vec<usize> = x1.iter().collect();
            let mut counters = alloc::vec![0usize; k_reps.len()];
            loop {
                let f: BTreeMap<usize, usize> = k_reps
                    .iter()
                    .zip(&counters)
                    .map(|(&r, &c)| (r, x1_elems[c]))
                    .collect();
                out.push(PhiRecipe { g: g.clone(), reps: reps.clone(), j: j.clone(), f });
                // advance
                let mut pos = 0;
                loop {
                    if pos == counters.len() {
                        break;
                    }
                    counters[pos] += 1;
                    if counters[pos] < x1_elems.len() {
                        break;
                    }
                    counters[pos] = 0;
                    pos += 1;
                }
                if pos == counters.len() {
                    break;
                }
            }
        }
    }
    Ok(out)
}
