//! Primitivity of sandwich centralizer near-rings, decided two ways:
//! by the structural conditions on the scheme (including property (P)
//! and the Gamma_0 subgroup condition), and directly by exhaustive
//! N-ideal / N-subgroup enumeration. The two routes must agree on every
//! non-ring instance; a disagreement is reported as a hard error.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::group::ElementSet;
use crate::nearring::{NearRing, NrElement};
use crate::ngroup::{NGroupAction, TypeVerdict};
use crate::sandwich::{SandwichScheme, SchemeReport};
use crate::Result;

/// Witness tuple (i, gamma1, s, gamma) certifying property (P) for one
/// member of C: phi(gamma1 + i) = s(phi(gamma1)) and s(gamma) - gamma
/// lies outside I. `s` is an index into the scheme's automorphism set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PWitness {
    pub i: usize,
    pub gamma1: usize,
    pub s: usize,
    pub gamma: usize,
}

/// The set C and, for each nontrivial member, either a property-(P)
/// witness or the failure marker (None).
#[derive(Debug, Clone)]
pub struct PropertyPReport {
    pub c_members: Vec<ElementSet>,
    pub holds: bool,
    pub witnesses: Vec<(ElementSet, Option<PWitness>)>,
}

/// Structural side of a verdict: scheme conditions, property (P), and
/// whether Gamma_0 is free of nontrivial subgroups.
#[derive(Debug, Clone)]
pub struct TheoremSide {
    pub conditions: SchemeReport,
    pub p_report: PropertyPReport,
    pub gamma0_subgroup_free: bool,
    pub one_primitive: bool,
    pub two_primitive: bool,
}

/// Enumerative side of a verdict: faithfulness and N-group type of the
/// natural action.
#[derive(Debug, Clone)]
pub struct DirectSide {
    pub verdict: TypeVerdict,
    pub one_primitive: bool,
    pub two_primitive: bool,
}

/// A primitivity decision. The structural criteria presuppose a proper
/// near-ring, so on ring instances (`ring_flag`) the structural route is
/// not applicable: purely structural verdicts become None and no
/// agreement is claimed. The enumerative route applies the definition
/// directly and is reported either way.
#[derive(Debug, Clone)]
pub struct PrimitivityVerdict {
    pub ring_flag: bool,
    /// Whether the structural route applies, i.e. not a ring.
    pub applicable: bool,
    pub one_primitive: Option<bool>,
    pub two_primitive: Option<bool>,
    pub theorem: Option<TheoremSide>,
    pub direct: Option<DirectSide>,
    /// Some iff both sides were computed on a non-ring instance.
    pub agree: Option<bool>,
}

fn require_valid(scheme: &SandwichScheme) -> Result<SchemeReport> {
    let report = scheme.validate();
    if !report.is_valid() {
        return Err(Error::InvalidArgument(format!(
            "scheme is invalid: {:?}",
            report.first_failure()
        )));
    }
    Ok(report)
}

/// C = all normal subgroups I of Gamma inside Gamma_0 such that Gamma_0
/// is a union of cosets of I and S(phi(gamma + i)) = S(phi(gamma)) for
/// every gamma outside Gamma_0 and i in I.
pub fn compute_c(scheme: &SandwichScheme) -> Result<Vec<ElementSet>> {
    require_valid(scheme)?;
    let g = scheme.gamma();
    let gamma0 = scheme.gamma0();
    let orbit_id = scheme.orbit_id_of_phi();
    let mut out = Vec::new();
    'outer: for i in g.normal_subgroups()? {
        if !i.is_subset_of(&gamma0) || !g.is_union_of_cosets(&gamma0, &i)? {
            continue;
        }
        for gamma in 0..g.order() {
            if gamma0.contains(gamma) {
                continue;
            }
            for j in i.iter() {
                if orbit_id[g.op(gamma, j)] != orbit_id[gamma] {
                    continue 'outer;
                }
            }
        }
        out.push(i);
    }
    Ok(out)
}

/// Property (P): every nontrivial I in C admits a witness tuple
/// (i, gamma1, s, gamma) with gamma1 outside Gamma_0,
/// phi(gamma1 + i) = s(phi(gamma1)) and s(gamma) - gamma outside I.
/// Tuples are scanned lexicographically and the first hit is reported.
pub fn property_p(scheme: &SandwichScheme) -> Result<PropertyPReport> {
    let c_members = compute_c(scheme)?;
    let g = scheme.gamma();
    let gamma0 = scheme.gamma0();
    let maps = scheme.autos().maps();
    let mut witnesses = Vec::new();
    let mut holds = true;
    for ideal in &c_members {
        if ideal.len() <= 1 {
            continue;
        }
        let mut found = None;
        'search: for i in ideal.iter() {
            for gamma1 in 0..g.order() {
                if gamma0.contains(gamma1) {
                    continue;
                }
                let lhs = scheme.phi_at(g.op(gamma1, i));
                for (s, map) in maps.iter().enumerate() {
                    if lhs != map.apply(scheme.phi_at(gamma1)) {
                        continue;
                    }
                    for gamma in 0..g.order() {
                        if !ideal.contains(g.sub(map.apply(gamma), gamma)) {
                            found = Some(PWitness { i, gamma1, s, gamma });
                            break 'search;
                        }
                    }
                }
            }
        }
        if found.is_none() {
            holds = false;
        }
        witnesses.push((ideal.clone(), found));
    }
    Ok(PropertyPReport { c_members, holds, witnesses })
}

/// True iff no subgroup of Gamma with more than one element lies inside
/// Gamma_0.
pub fn gamma0_subgroup_free(scheme: &SandwichScheme) -> Result<bool> {
    let gamma0 = scheme.gamma0();
    Ok(scheme
        .gamma()
        .subgroups()?
        .iter()
        .all(|h| h.len() <= 1 || !h.is_subset_of(&gamma0)))
}

fn theorem_side(scheme: &SandwichScheme, conditions: SchemeReport) -> Result<TheoremSide> {
    let p_report = property_p(scheme)?;
    let free = gamma0_subgroup_free(scheme)?;
    let one = conditions.is_valid() && p_report.holds;
    Ok(TheoremSide {
        conditions,
        p_report,
        gamma0_subgroup_free: free,
        one_primitive: one,
        two_primitive: one && free,
    })
}

fn direct_side(nr: &NearRing, scheme: &SandwichScheme) -> Result<DirectSide> {
    let action = NGroupAction::from_scheme(nr, scheme)?;
    let verdict = action.classify()?;
    Ok(DirectSide {
        one_primitive: verdict.faithful && verdict.type1,
        two_primitive: verdict.faithful && verdict.type2,
        verdict,
    })
}

/// Structural verdict only: scheme conditions + (P) decide
/// 1-primitivity, the Gamma_0 subgroup condition upgrades to
/// 2-primitivity. The full near-ring is still enumerated once, to
/// evaluate the ring flag.
pub fn theorem_verdict(scheme: &SandwichScheme, max_elements: usize) -> Result<PrimitivityVerdict> {
    let conditions = require_valid(scheme)?;
    let nr = NearRing::enumerate_centralizer(scheme, max_elements)?;
    let ring_flag = nr.is_ring()?;
    let side = theorem_side(scheme, conditions)?;
    Ok(PrimitivityVerdict {
        ring_flag,
        applicable: !ring_flag,
        one_primitive: (!ring_flag).then_some(side.one_primitive),
        two_primitive: (!ring_flag).then_some(side.two_primitive),
        theorem: Some(side),
        direct: None,
        agree: None,
    })
}

/// Enumerative verdict only: build the near-ring and its action, then
/// decide by faithfulness and N-group type.
pub fn direct_verdict(scheme: &SandwichScheme, max_elements: usize) -> Result<PrimitivityVerdict> {
    require_valid(scheme)?;
    let nr = NearRing::enumerate_centralizer(scheme, max_elements)?;
    let ring_flag = nr.is_ring()?;
    let side = direct_side(&nr, scheme)?;
    Ok(PrimitivityVerdict {
        ring_flag,
        applicable: !ring_flag,
        one_primitive: Some(side.one_primitive),
        two_primitive: Some(side.two_primitive),
        theorem: None,
        direct: Some(side),
        agree: None,
    })
}

/// Both verdicts on a shared near-ring enumeration. A disagreement on a
/// non-ring instance is an error: it would contradict the equivalence
/// the whole construction rests on.
pub fn cross_check(scheme: &SandwichScheme, max_elements: usize) -> Result<PrimitivityVerdict> {
    let conditions = require_valid(scheme)?;
    let nr = NearRing::enumerate_centralizer(scheme, max_elements)?;
    let ring_flag = nr.is_ring()?;
    let theorem = theorem_side(scheme, conditions)?;
    let direct = direct_side(&nr, scheme)?;
    if ring_flag {
        // the verdict comes from the definition-level enumeration; the
        // structural side is reported but no agreement is claimed
        return Ok(PrimitivityVerdict {
            ring_flag,
            applicable: false,
            one_primitive: Some(direct.one_primitive),
            two_primitive: Some(direct.two_primitive),
            theorem: Some(theorem),
            direct: Some(direct),
            agree: None,
        });
    }
    let agree = theorem.one_primitive == direct.one_primitive
        && theorem.two_primitive == direct.two_primitive;
    if !agree {
        return Err(Error::TheoremMismatch(format!(
            "structural ({}, {}) vs enumerative ({}, {}) on |Gamma| = {}",
            theorem.one_primitive,
            theorem.two_primitive,
            direct.one_primitive,
            direct.two_primitive,
            scheme.gamma().order()
        )));
    }
    Ok(PrimitivityVerdict {
        ring_flag,
        applicable: true,
        one_primitive: Some(direct.one_primitive),
        two_primitive: Some(direct.two_primitive),
        theorem: Some(theorem),
        direct: Some(direct),
        agree: Some(agree),
    })
}

/// A faithful type-1 action rewritten as a sandwich centralizer
/// near-ring, with the element pairing n -> f_n.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub scheme: SandwichScheme,
    /// pairing[i] = index of f_n in `target` for source element i
    pub pairing: Vec<usize>,
    pub target: NearRing,
}

/// Rebuilds a scheme from a faithful type-1 action: S = Aut_N(Gamma),
/// X = the invariant representative set, phi = class representative map;
/// then pairs every n with f_n: x -> n (.) x and verifies the pairing is
/// a near-ring isomorphism onto the full centralizer near-ring.
pub fn embed(action: &NGroupAction, max_elements: usize) -> Result<Embedding> {
    let verdict = action.classify()?;
    if !verdict.faithful || !verdict.type1 {
        return Err(Error::NotEmbeddable(format!(
            "action is {}faithful and type1 = {}",
            if verdict.faithful { "" } else { "not " },
            verdict.type1
        )));
    }
    let s = action.aut_n()?;
    let x = action.invariant_representatives()?;
    let class_ids = action.class_ids();
    // phi(gamma) = the unique member of X in gamma's ~ class
    let g = action.carrier();
    let mut rep_of_class = alloc::vec![usize::MAX; g.order()];
    for member in x.iter() {
        rep_of_class[class_ids[member]] = member;
    }
    let phi: Vec<usize> = (0..g.order()).map(|gamma| rep_of_class[class_ids[gamma]]).collect();
    let scheme = SandwichScheme::from_parts(g.clone(), s, phi)?;
    let report = scheme.validate();
    if !report.is_valid() {
        return Err(Error::InternalInconsistency(format!(
            "embedding produced an invalid scheme: {:?}",
            report.first_failure()
        )));
    }
    let target = NearRing::enumerate_centralizer(&scheme, max_elements)?;
    let src = action.nearring();
    if target.len() != src.len() {
        return Err(Error::InternalInconsistency(format!(
            "embedding image has {} elements, target has {}",
            src.len(),
            target.len()
        )));
    }
    let xs: Vec<usize> = x.iter().collect();
    let mut pairing = Vec::with_capacity(src.len());
    let mut hit = alloc::vec![false; target.len()];
    for n in 0..src.len() {
        let f_n = NrElement::new(xs.iter().map(|&xi| action.apply(n, xi)).collect());
        let j = target.index_of(&f_n).ok_or_else(|| {
            Error::InternalInconsistency(format!("f_n of element {n} is not S-equivariant"))
        })?;
        if hit[j] {
            return Err(Error::InternalInconsistency(format!(
                "n -> f_n is not injective at element {n}"
            )));
        }
        hit[j] = true;
        pairing.push(j);
    }
    // phi(z) ~ z for all z makes the pairing multiplicative:
    // f_j o' f_k (x) = j (.) phi(k (.) x) = j (.) (k (.) x) = f_{jk}(x)
    for z in 0..g.order() {
        if class_ids[scheme.phi_at(z)] != class_ids[z] {
            return Err(Error::InternalInconsistency(format!(
                "phi({z}) is not ~-equivalent to {z}"
            )));
        }
    }
    // explicit homomorphism check, affordable wherever tables are eager;
    // above that the class-id identity verified over all z already forces
    // f_j o' f_k = f_{j o' k} and additivity is pointwise
    if src.len() <= crate::nearring::EAGER_TABLE_LIMIT {
        for a in 0..src.len() {
            for b in 0..src.len() {
                if pairing[src.add(a, b)] != target.add(pairing[a], pairing[b])
                    || pairing[src.mul(a, b)] != target.mul(pairing[a], pairing[b])
                {
                    return Err(Error::InternalInconsistency(format!(
                        "pairing is not a homomorphism at ({a}, {b})"
                    )));
                }
            }
        }
    }
    Ok(Embedding { scheme, pairing, target })
}

/// Finite density: a set of elements is dense in M0(X, Gamma, phi, S)
/// iff it is all of it.
pub fn density_check(
    image: &[NrElement],
    scheme: &SandwichScheme,
    max_elements: usize,
) -> Result<bool> {
    let full = NearRing::enumerate_centralizer(scheme, max_elements)?;
    let mut sorted: Vec<NrElement> = image.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    Ok(sorted == full.elements())
}
