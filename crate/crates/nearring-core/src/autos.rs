//! Endomorphisms and automorphisms of a finite group, automorphism
//! groups S, their orbits, and fixedpointfreeness.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::group::{ElementSet, FiniteGroup, MAX_ENUMERATION_ORDER};
use crate::Result;

/// A total self-map of a group, stored as its full image array.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupMap {
    image: Vec<usize>,
}

impl GroupMap {
    pub fn new(image: Vec<usize>) -> Self {
        GroupMap { image }
    }

    pub fn identity(n: usize) -> Self {
        GroupMap { image: (0..n).collect() }
    }

    /// x -> -x.
    pub fn negation(g: &FiniteGroup) -> Self {
        GroupMap { image: (0..g.order()).map(|a| g.inverse(a)).collect() }
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.image[a]
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// self after other: x -> self(other(x)).
    pub fn compose(&self, other: &GroupMap) -> GroupMap {
        GroupMap { image: other.image.iter().map(|&x| self.image[x]).collect() }
    }

    pub fn inverse_map(&self) -> Option<GroupMap> {
        let n = self.image.len();
        let mut inv = vec![usize::MAX; n];
        for (a, &b) in self.image.iter().enumerate() {
            if b >= n || inv[b] != usize::MAX {
                return None;
            }
            inv[b] = a;
        }
        Some(GroupMap { image: inv })
    }
}

/// True iff `m` is an additive bijection of `g`.
pub fn is_automorphism(g: &FiniteGroup, m: &GroupMap) -> Result<bool> {
    let n = g.order();
    if m.len() != n {
        return Err(Error::InvalidArgument(format!(
            "map has length {}, group has order {n}",
            m.len()
        )));
    }
    if m.image().iter().any(|&x| x >= n) {
        return Ok(false);
    }
    let mut seen = vec![false; n];
    for &x in m.image() {
        if seen[x] {
            return Ok(false);
        }
        seen[x] = true;
    }
    for a in 0..n {
        for b in 0..n {
            if m.apply(g.op(a, b)) != g.op(m.apply(a), m.apply(b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A finite group of automorphisms, closed under composition and
/// inverses and containing the identity map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismSet {
    maps: Vec<GroupMap>,
    identity: usize,
}

impl AutomorphismSet {
    pub fn trivial(n: usize) -> Self {
        AutomorphismSet { maps: vec![GroupMap::identity(n)], identity: 0 }
    }

    /// Wraps a list of maps after verifying the group axioms hold.
    pub fn from_maps(g: &FiniteGroup, maps: Vec<GroupMap>) -> Result<Self> {
        let set = Self::closure_as_group(g, &maps)?;
        if set.maps.len() != {
            let mut sorted: Vec<&GroupMap> = maps.iter().collect();
            sorted.sort();
            sorted.dedup();
            sorted.len()
        } {
            return Err(Error::InvalidArgument(String::from(
                "maps are not closed under composition and inverse",
            )));
        }
        Ok(set)
    }

    /// Smallest automorphism group containing the given maps.
    pub fn closure_as_group(g: &FiniteGroup, gens: &[GroupMap]) -> Result<Self> {
        for m in gens {
            if !is_automorphism(g, m)? {
                return Err(Error::InvalidArgument(String::from(
                    "generator is not an automorphism",
                )));
            }
        }
        let n = g.order();
        let mut set: BTreeSet<GroupMap> = BTreeSet::new();
        set.insert(GroupMap::identity(n));
        let mut frontier: Vec<GroupMap> = vec![GroupMap::identity(n)];
        while let Some(m) = frontier.pop() {
            for gen in gens {
                let prod = gen.compose(&m);
                if set.insert(prod.clone()) {
                    frontier.push(prod);
                }
            }
        }
        let maps: Vec<GroupMap> = set.into_iter().collect();
        let identity = maps.iter().position(|m| m.is_identity()).unwrap();
        Ok(AutomorphismSet { maps, identity })
    }

    pub fn maps(&self) -> &[GroupMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn identity_index(&self) -> usize {
        self.identity
    }

    pub fn is_trivial(&self) -> bool {
        self.maps.len() == 1
    }

    pub fn contains(&self, m: &GroupMap) -> bool {
        self.maps.binary_search(m).is_ok()
    }

    pub fn index_of(&self, m: &GroupMap) -> Option<usize> {
        self.maps.binary_search(m).ok()
    }

    /// Orbit of a single element, sorted.
    pub fn orbit_of(&self, a: usize) -> ElementSet {
        self.maps.iter().map(|m| m.apply(a)).collect()
    }

    /// Partition of `carrier` into orbits, each sorted, ordered by
    /// smallest member. Fails if the carrier is not S-invariant.
    pub fn orbits(&self, carrier: &ElementSet) -> Result<Vec<ElementSet>> {
        self.check_invariant(carrier)?;
        let mut seen = ElementSet::empty();
        let mut out = Vec::new();
        for a in carrier.iter() {
            if seen.contains(a) {
                continue;
            }
            let orbit = self.orbit_of(a);
            for x in orbit.iter() {
                seen.insert(x);
            }
            out.push(orbit);
        }
        Ok(out)
    }

    /// Smallest element of each orbit, in orbit order.
    pub fn orbit_representatives(&self, carrier: &ElementSet) -> Result<Vec<usize>> {
        Ok(self
            .orbits(carrier)?
            .iter()
            .map(|o| o.iter().next().unwrap())
            .collect())
    }

    fn check_invariant(&self, carrier: &ElementSet) -> Result<()> {
        for a in carrier.iter() {
            for m in &self.maps {
                if !carrier.contains(m.apply(a)) {
                    return Err(Error::InvalidArgument(format!(
                        "carrier is not S-invariant: s({a}) = {} escapes",
                        m.apply(a)
                    )));
                }
            }
        }
        Ok(())
    }

    /// True iff no non-identity map fixes any element of `m`.
    /// Requires 0 not in m and m invariant under S.
    pub fn is_fixedpointfree_on(&self, m: &ElementSet) -> Result<bool> {
        if m.contains(0) {
            return Err(Error::InvalidArgument(String::from(
                "fixedpointfree test requires 0 not in the set",
            )));
        }
        self.check_invariant(m)?;
        for (i, s) in self.maps.iter().enumerate() {
            if i == self.identity {
                continue;
            }
            if m.iter().any(|a| s.apply(a) == a) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All subgroups of this automorphism group, as automorphism sets.
    pub fn subgroups(&self) -> Vec<AutomorphismSet> {
        // BFS over one-generator extensions, dedup by sorted map list.
        let id = GroupMap::identity(self.maps[0].len());
        let trivial = vec![id.clone()];
        let mut all: BTreeSet<Vec<GroupMap>> = BTreeSet::new();
        all.insert(trivial.clone());
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for m in &self.maps {
                if h.binary_search(m).is_ok() {
                    continue;
                }
                let mut gens = h.clone();
                gens.push(m.clone());
                let ext = close_maps(&gens);
                if all.insert(ext.clone()) {
                    frontier.push(ext);
                }
            }
        }
        all.into_iter()
            .map(|maps| {
                let identity = maps.iter().position(|m| m.is_identity()).unwrap();
                AutomorphismSet { maps, identity }
            })
            .collect()
    }
}

fn close_maps(gens: &[GroupMap]) -> Vec<GroupMap> {
    let mut set: BTreeSet<GroupMap> = gens.iter().cloned().collect();
    set.insert(GroupMap::identity(gens[0].len()));
    let mut frontier: Vec<GroupMap> = set.iter().cloned().collect();
    while let Some(m) = frontier.pop() {
        for gen in gens {
            let prod = gen.compose(&m);
            if set.insert(prod.clone()) {
                frontier.push(prod);
            }
        }
    }
    set.into_iter().collect()
}

/// The full automorphism group of `g`, by backtracking over images of a
/// generating set. Bounded at order 64.
pub fn automorphism_group(g: &FiniteGroup) -> Result<AutomorphismSet> {
    automorphism_group_bounded(g, MAX_ENUMERATION_ORDER)
}

pub fn automorphism_group_bounded(g: &FiniteGroup, bound: usize) -> Result<AutomorphismSet> {
    let n = g.order();
    if n > bound {
        return Err(Error::ResourceLimit(format!(
            "automorphism enumeration is limited to order {bound}, got {n}"
        )));
    }
    let gens = g.generating_set();
    if gens.is_empty() {
        return Ok(AutomorphismSet::trivial(n));
    }
    let orders: Vec<usize> = (0..n).map(|a| g.element_order(a)).collect();
    let mut found: Vec<GroupMap> = Vec::new();
    let mut images = vec![0usize; gens.len()];
    search_autos(g, &gens, &orders, 0, &mut images, &mut found);
    let maps: Vec<GroupMap> = {
        let mut set: BTreeSet<GroupMap> = found.into_iter().collect();
        set.insert(GroupMap::identity(n));
        set.into_iter().collect()
    };
    let identity = maps.iter().position(|m| m.is_identity()).unwrap();
    Ok(AutomorphismSet { maps, identity })
}

fn search_autos(
    g: &FiniteGroup,
    gens: &[usize],
    orders: &[usize],
    k: usize,
    images: &mut Vec<usize>,
    found: &mut Vec<GroupMap>,
) {
    let n = g.order();
    if k == gens.len() {
        if let Some(map) = extend_homomorphism(g, gens, images) {
            let m = GroupMap::new(map);
            if is_automorphism(g, &m).unwrap_or(false) {
                found.push(m);
            }
        }
        return;
    }
    for cand in 0..n {
        // automorphisms preserve element order
        if orders[cand] != orders[gens[k]] {
            continue;
        }
        images[k] = cand;
        search_autos(g, gens, orders, k + 1, images, found);
    }
}

/// Propagates generator images to a total map via products of defined
/// elements; returns None on conflict.
fn extend_homomorphism(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    for (&a, &ia) in gens.iter().zip(images) {
        if map[a] != usize::MAX && map[a] != ia {
            return None;
        }
        map[a] = ia;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for a in 0..n {
            if map[a] == usize::MAX {
                continue;
            }
            for (&gen, &igen) in gens.iter().zip(images) {
                let ab = g.op(a, gen);
                let target = g.op(map[a], igen);
                if map[ab] == usize::MAX {
                    map[ab] = target;
                    changed = true;
                } else if map[ab] != target {
                    return None;
                }
            }
        }
    }
    if map.iter().any(|&x| x == usize::MAX) {
        return None;
    }
    Some(map)
}
