//! N-groups: actions of a near-ring on a group, N-ideals, N-subgroups,
//! type classification, the ~ relation, N-automorphisms, and invariant
//! representative sets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::autos::{automorphism_group, AutomorphismSet};
use crate::error::Error;
use crate::group::{ElementSet, FiniteGroup};
use crate::nearring::{NearRing, NearRingKind};
use crate::sandwich::SandwichScheme;
use crate::Result;

/// N-group laws are re-verified over all (m1, m2, gamma) only up to this
/// element count; larger actions rely on the construction (and on
/// [`NGroupAction::law_violation`] when callers want the full scan).
pub const LAW_CHECK_LIMIT: usize = 128;

/// First counterexample to the N-ideal condition n(gamma + i) - n gamma
/// in I, for a candidate normal subgroup I.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IdealViolation {
    pub n_index: usize,
    pub gamma: usize,
    pub i: usize,
    /// n(gamma + i) - n(gamma), the value that escaped I.
    pub value: usize,
}

/// Outcome of [`NGroupAction::classify`].
#[derive(Debug, Clone)]
pub struct TypeVerdict {
    pub faithful: bool,
    pub theta1: ElementSet,
    pub theta0: ElementSet,
    /// Carrier elements with {0} != N gamma != Gamma.
    pub other: ElementSet,
    pub type0: bool,
    pub type1: bool,
    pub type2: bool,
    /// A nontrivial N-ideal, when the action is not simple.
    pub offending_n_ideal: Option<ElementSet>,
    /// A nontrivial N-subgroup, when type 2 fails for that reason.
    pub offending_n_subgroup: Option<ElementSet>,
}

/// A near-ring acting on its carrier group, with the full action table
/// act[m][gamma] materialized. Immutable after construction.
#[derive(Debug, Clone)]
pub struct NGroupAction {
    nr: NearRing,
    /// |N| x |Gamma| flat; act[m * |Gamma| + gamma] = m (.) gamma
    act: Vec<usize>,
}

impl NGroupAction {
    /// The scheme action m (.) gamma := m(phi(gamma)).
    pub fn from_scheme(nr: &NearRing, scheme: &SandwichScheme) -> Result<NGroupAction> {
        match nr.scheme() {
            Some(s) if s == scheme => {}
            _ => {
                return Err(Error::InvalidArgument(String::from(
                    "near-ring was not built from this scheme",
                )))
            }
        }
        let order = nr.gamma().order();
        let mut act = Vec::with_capacity(nr.len() * order);
        for m in nr.elements() {
            for gamma in 0..order {
                let x = scheme.phi_at(gamma);
                act.push(m.value_at(nr.domain_position(x).expect("phi maps into X")));
            }
        }
        let action = NGroupAction { nr: nr.clone(), act };
        action.check_laws()?;
        Ok(action)
    }

    /// The natural action m (.) gamma := m(gamma) of a transformation
    /// near-ring on its carrier.
    pub fn from_transformation(nr: &NearRing) -> Result<NGroupAction> {
        if nr.kind() != NearRingKind::Transformation {
            return Err(Error::InvalidArgument(String::from(
                "natural action needs a transformation near-ring",
            )));
        }
        let order = nr.gamma().order();
        if nr.domain().len() != order {
            return Err(Error::InvalidArgument(String::from(
                "transformation near-ring domain must be all of Gamma",
            )));
        }
        let mut act = Vec::with_capacity(nr.len() * order);
        for m in nr.elements() {
            for gamma in 0..order {
                act.push(m.value_at(gamma));
            }
        }
        let action = NGroupAction { nr: nr.clone(), act };
        action.check_laws()?;
        Ok(action)
    }

    fn check_laws(&self) -> Result<()> {
        if self.nr.len() > LAW_CHECK_LIMIT {
            return Ok(());
        }
        if let Some((m1, m2, gamma, law)) = self.law_violation() {
            return Err(Error::InternalInconsistency(format!(
                "{law} N-group law fails at m1={m1}, m2={m2}, gamma={gamma}"
            )));
        }
        Ok(())
    }

    /// Exhaustive scan for an N-group law violation; None means the laws
    /// hold on every triple.
    pub fn law_violation(&self) -> Option<(usize, usize, usize, &'static str)> {
        let n = self.nr.len();
        let order = self.carrier().order();
        let g = self.nr.gamma();
        for m1 in 0..n {
            for m2 in 0..n {
                let sum = self.nr.add(m1, m2);
                let prod = self.nr.mul(m1, m2);
                for gamma in 0..order {
                    if self.apply(sum, gamma)
                        != g.op(self.apply(m1, gamma), self.apply(m2, gamma))
                    {
                        return Some((m1, m2, gamma, "additive"));
                    }
                    if self.apply(prod, gamma) != self.apply(m1, self.apply(m2, gamma)) {
                        return Some((m1, m2, gamma, "multiplicative"));
                    }
                }
            }
        }
        let zero = self.nr.zero_index();
        for gamma in 0..order {
            if self.apply(zero, gamma) != 0 {
                return Some((zero, zero, gamma, "zero"));
            }
        }
        None
    }

    pub fn nearring(&self) -> &NearRing {
        &self.nr
    }

    pub fn carrier(&self) -> &FiniteGroup {
        self.nr.gamma()
    }

    #[inline]
    pub fn apply(&self, m: usize, gamma: usize) -> usize {
        self.act[m * self.carrier().order() + gamma]
    }

    /// The orbit N gamma = {m (.) gamma | m in N}.
    pub fn orbit(&self, gamma: usize) -> ElementSet {
        (0..self.nr.len()).map(|m| self.apply(m, gamma)).collect()
    }

    /// True iff only the zero element annihilates all of Gamma.
    pub fn is_faithful(&self) -> bool {
        let order = self.carrier().order();
        let zero = self.nr.zero_index();
        (0..self.nr.len()).all(|m| {
            m == zero || (0..order).any(|gamma| self.apply(m, gamma) != 0)
        })
    }

    /// (0 : d) = {n in N | n (.) gamma = 0 for all gamma in d}.
    pub fn annihilator(&self, d: &ElementSet) -> ElementSet {
        (0..self.nr.len())
            .filter(|&m| d.iter().all(|gamma| self.apply(m, gamma) == 0))
            .collect()
    }

    /// Partition of the carrier by orbit: theta1 = {gamma | N gamma =
    /// Gamma}, theta0 = {gamma | N gamma = {0}}, other = the rest.
    pub fn generators_split(&self) -> (ElementSet, ElementSet, ElementSet) {
        let order = self.carrier().order();
        let mut theta1 = ElementSet::empty();
        let mut theta0 = ElementSet::empty();
        let mut other = ElementSet::empty();
        for gamma in 0..order {
            let orbit = self.orbit(gamma);
            if orbit.len() == order {
                theta1.insert(gamma);
            } else if orbit.len() == 1 && orbit.contains(0) {
                theta0.insert(gamma);
            } else {
                other.insert(gamma);
            }
        }
        (theta1, theta0, other)
    }

    /// First violation of the N-ideal condition for the normal subgroup
    /// `ideal`, scanning (n, gamma, i) lexicographically.
    pub fn n_ideal_violation(&self, ideal: &ElementSet) -> Result<Option<IdealViolation>> {
        let g = self.carrier();
        if !g.is_subgroup(ideal) || !g.is_normal(ideal) {
            return Err(Error::InvalidArgument(String::from(
                "candidate is not a normal subgroup",
            )));
        }
        for n_index in 0..self.nr.len() {
            for gamma in 0..g.order() {
                let base = self.apply(n_index, gamma);
                for i in ideal.iter() {
                    let value = g.sub(self.apply(n_index, g.op(gamma, i)), base);
                    if !ideal.contains(value) {
                        return Ok(Some(IdealViolation { n_index, gamma, i, value }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// All N-ideals: normal subgroups I with n(gamma + i) - n gamma in I
    /// for every n, gamma, i.
    pub fn n_ideals(&self) -> Result<Vec<ElementSet>> {
        let mut out = Vec::new();
        for i in self.carrier().normal_subgroups()? {
            if self.n_ideal_violation(&i)?.is_none() {
                out.push(i);
            }
        }
        Ok(out)
    }

    /// All N-subgroups: subgroups K with N K contained in K.
    pub fn n_subgroups(&self) -> Result<Vec<ElementSet>> {
        let mut out = Vec::new();
        for k in self.carrier().subgroups()? {
            let closed = k
                .iter()
                .all(|gamma| (0..self.nr.len()).all(|m| k.contains(self.apply(m, gamma))));
            if closed {
                out.push(k);
            }
        }
        Ok(out)
    }

    /// Types 0/1/2 of the carrier as an N-group, with witnesses.
    pub fn classify(&self) -> Result<TypeVerdict> {
        let order = self.carrier().order();
        let (theta1, theta0, other) = self.generators_split();
        let offending_n_ideal = self
            .n_ideals()?
            .into_iter()
            .find(|i| i.len() > 1 && i.len() < order);
        let offending_n_subgroup = self
            .n_subgroups()?
            .into_iter()
            .find(|k| k.len() > 1 && k.len() < order);
        let simple = offending_n_ideal.is_none();
        let type0 = order > 1 && simple && !theta1.is_empty();
        let type1 = type0 && other.is_empty();
        let type2 = theta0.len() < order && offending_n_subgroup.is_none() && order > 1;
        debug_assert!(!type2 || type1, "type 2 must imply type 1");
        Ok(TypeVerdict {
            faithful: self.is_faithful(),
            theta1,
            theta0,
            other,
            type0,
            type1,
            type2,
            offending_n_ideal,
            offending_n_subgroup,
        })
    }

    /// Partition of the carrier under gamma1 ~ gamma2 iff n gamma1 =
    /// n gamma2 for all n (equal action columns). Classes are ordered by
    /// smallest member, each class sorted.
    pub fn equiv_classes(&self) -> Vec<ElementSet> {
        let order = self.carrier().order();
        let mut class_of = alloc::vec![usize::MAX; order];
        let mut classes: Vec<ElementSet> = Vec::new();
        for gamma in 0..order {
            if class_of[gamma] != usize::MAX {
                continue;
            }
            let id = classes.len();
            class_of[gamma] = id;
            let mut class = ElementSet::singleton(gamma);
            for delta in gamma + 1..order {
                if class_of[delta] == usize::MAX
                    && (0..self.nr.len()).all(|m| self.apply(m, gamma) == self.apply(m, delta))
                {
                    class_of[delta] = id;
                    class.insert(delta);
                }
            }
            classes.push(class);
        }
        classes
    }

    /// The ~ class id of each carrier element, classes numbered by
    /// smallest member.
    pub fn class_ids(&self) -> Vec<usize> {
        let classes = self.equiv_classes();
        let mut ids = alloc::vec![0usize; self.carrier().order()];
        for (id, class) in classes.iter().enumerate() {
            for gamma in class.iter() {
                ids[gamma] = id;
            }
        }
        ids
    }

    /// Aut_N(Gamma, +): all group automorphisms commuting with the
    /// action, s(m (.) gamma) = m (.) s(gamma).
    pub fn aut_n(&self) -> Result<AutomorphismSet> {
        let full = automorphism_group(self.carrier())?;
        let order = self.carrier().order();
        let compatible: Vec<_> = full
            .maps()
            .iter()
            .filter(|s| {
                (0..self.nr.len()).all(|m| {
                    (0..order).all(|gamma| {
                        s.apply(self.apply(m, gamma)) == self.apply(m, s.apply(gamma))
                    })
                })
            })
            .cloned()
            .collect();
        AutomorphismSet::from_maps(self.carrier(), compatible)
    }

    /// A set X = {0} union X1 with X1 inside theta1, one representative
    /// per ~ class, and S(X) inside X for S = Aut_N(Gamma, +).
    ///
    /// Greedy construction: repeatedly take the smallest gamma in theta1
    /// whose class is still unrepresented and adjoin its whole S-orbit.
    pub fn invariant_representatives(&self) -> Result<ElementSet> {
        let (theta1, _, other) = self.generators_split();
        if !other.is_empty() {
            return Err(Error::NotType1);
        }
        let s = self.aut_n()?;
        let class_ids = self.class_ids();
        let class_count = self.equiv_classes().len();
        let mut covered = alloc::vec![false; class_count];
        let mut x = ElementSet::singleton(0);
        covered[class_ids[0]] = true;
        for gamma in theta1.iter() {
            if covered[class_ids[gamma]] {
                continue;
            }
            for member in s.orbit_of(gamma).iter() {
                if covered[class_ids[member]] {
                    return Err(Error::InternalInconsistency(format!(
                        "orbit of {gamma} meets an already represented class at {member}"
                    )));
                }
                covered[class_ids[member]] = true;
                x.insert(member);
            }
        }
        if covered.iter().any(|&c| !c) {
            return Err(Error::InternalInconsistency(String::from(
                "some ~ class has no representative in theta1 or {0}",
            )));
        }
        Ok(x)
    }
}
