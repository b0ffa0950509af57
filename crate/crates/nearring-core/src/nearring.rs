//! Materialized finite near-rings: sandwich centralizer near-rings
//! M0(X, Gamma, phi, S), plain sandwich near-rings, and constrained
//! transformation near-rings, together with axiom verification.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::group::{ElementSet, FiniteGroup};
use crate::sandwich::SandwichScheme;
use crate::Result;

/// Default cap on the number of near-ring elements (8^4).
pub const DEFAULT_MAX_ELEMENTS: usize = 4096;

/// Exhaustive triple scans (axiom verification, ring oracle) are capped
/// at this element count.
pub const TABLE_LIMIT: usize = 512;

/// Operation tables are materialized eagerly up to this element count;
/// larger near-rings compute operations on demand (or on request via
/// [`NearRing::materialize_tables`]).
pub const EAGER_TABLE_LIMIT: usize = 64;

/// Which multiplication rule the near-ring carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NearRingKind {
    /// f o' g = f o phi o g with S-equivariant elements.
    SandwichCentralizer,
    /// f o' g = f o phi o g with trivial S.
    Sandwich,
    /// Plain composition of self-maps of Gamma.
    Transformation,
}

/// A zero-fixing function into Gamma, stored as its value array indexed
/// parallel to the owning near-ring's domain.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct NrElement {
    values: Vec<usize>,
}

impl NrElement {
    pub fn new(values: Vec<usize>) -> Self {
        NrElement { values }
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn value_at(&self, pos: usize) -> usize {
        self.values[pos]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }
}

/// First counterexample for one violated near-ring law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomWitness {
    pub law: &'static str,
    pub triple: (usize, usize, usize),
}

/// Outcome of [`NearRing::verify_axioms`]; empty failure list means all
/// axioms hold.
#[derive(Debug, Clone, Default)]
pub struct AxiomReport {
    pub failures: Vec<AxiomWitness>,
    pub triples_checked: usize,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Left/right/two-sided multiplicative identities found by table scan.
#[derive(Debug, Clone, Default)]
pub struct IdentityReport {
    pub right: Vec<usize>,
    pub left: Vec<usize>,
    pub two_sided: Option<usize>,
}

/// Element pairing witnessing a near-ring isomorphism, plus the target
/// near-ring it maps onto.
#[derive(Debug, Clone)]
pub struct IsoCertificate {
    /// pairs[i] = (source index, target index)
    pub pairs: Vec<(usize, usize)>,
    pub target: NearRing,
}

#[derive(Debug, Clone)]
pub struct NearRing {
    gamma: FiniteGroup,
    /// Sorted list of Gamma indices the functions are defined on.
    domain: Vec<usize>,
    /// position of each Gamma element in `domain`, usize::MAX if absent
    domain_pos: Vec<usize>,
    /// Lexicographically sorted by value array; index 0 is the zero map.
    elements: Vec<NrElement>,
    kind: NearRingKind,
    scheme: Option<SandwichScheme>,
    annihilated: Option<ElementSet>,
    add_table: Option<Vec<u32>>,
    mul_table: Option<Vec<u32>>,
}

impl NearRing {
    fn assemble(
        gamma: FiniteGroup,
        domain: Vec<usize>,
        mut elements: Vec<NrElement>,
        kind: NearRingKind,
        scheme: Option<SandwichScheme>,
        annihilated: Option<ElementSet>,
    ) -> NearRing {
        elements.sort_unstable();
        elements.dedup();
        let mut domain_pos = alloc::vec![usize::MAX; gamma.order()];
        for (pos, &a) in domain.iter().enumerate() {
            domain_pos[a] = pos;
        }
        let mut nr = NearRing {
            gamma,
            domain,
            domain_pos,
            elements,
            kind,
            scheme,
            annihilated,
            add_table: None,
            mul_table: None,
        };
        if nr.elements.len() <= EAGER_TABLE_LIMIT {
            nr.build_tables();
        }
        nr
    }

    /// Builds the operation tables on demand, within the triple-scan
    /// limit.
    pub fn materialize_tables(&mut self) -> Result<()> {
        if self.elements.len() > TABLE_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "operation tables are limited to {TABLE_LIMIT} elements, got {}",
                self.elements.len()
            )));
        }
        if self.add_table.is_none() {
            self.build_tables();
        }
        Ok(())
    }

    /// All S-equivariant zero-fixing maps X -> Gamma of a valid scheme.
    /// Exactly |Gamma|^k elements, k the number of S-orbits on X_1.
    pub fn enumerate_centralizer(
        scheme: &SandwichScheme,
        max_elements: usize,
    ) -> Result<NearRing> {
        let report = scheme.validate();
        if !report.is_valid() {
            return Err(Error::InvalidArgument(format!(
                "scheme is invalid: {:?}",
                report.first_failure()
            )));
        }
        let gamma = scheme.gamma().clone();
        let n = gamma.order();
        let x = scheme.x();
        let x1 = scheme.x1();
        let autos = scheme.autos();
        let orbits = autos.orbits(&x1)?;
        let k = orbits.len();
        match (n as u128).checked_pow(k as u32) {
            Some(sz) if sz <= max_elements as u128 => {}
            _ => {
                return Err(Error::ResourceLimit(format!(
                    "|Gamma|^k = {n}^{k} exceeds cap {max_elements}"
                )))
            }
        }
        let domain: Vec<usize> = x.iter().collect();
        let pos_of = |a: usize| domain.binary_search(&a).unwrap();
        // decompose each x in X1 as s(rep): fixedpointfreeness makes the
        // pair unique
        let reps: Vec<usize> = orbits.iter().map(|o| o.iter().next().unwrap()).collect();
        let mut decomp: Vec<(usize, usize)> = alloc::vec![(0, 0); domain.len()];
        for (oi, orbit) in orbits.iter().enumerate() {
            for (si, s) in autos.maps().iter().enumerate() {
                let target = s.apply(reps[oi]);
                debug_assert!(orbit.contains(target));
                decomp[pos_of(target)] = (si, oi);
            }
        }
        let zero_pos = pos_of(0);
        let mut elements = Vec::with_capacity(n.pow(k as u32));
        let mut counters = alloc::vec![0usize; k];
        loop {
            let mut values = alloc::vec![0usize; domain.len()];
            for (pos, &a) in domain.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let (si, oi) = decomp[pos];
                values[pos] = autos.maps()[si].apply(counters[oi]);
            }
            values[zero_pos] = 0;
            elements.push(NrElement::new(values));
            let mut i = 0;
            loop {
                if i == k {
                    break;
                }
                counters[i] += 1;
                if counters[i] < n {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
        }
        let kind = if autos.is_trivial() {
            NearRingKind::Sandwich
        } else {
            NearRingKind::SandwichCentralizer
        };
        let nr = Self::assemble(gamma, domain, elements, kind, Some(scheme.clone()), None);
        if nr.elements.len() != n.pow(k as u32) {
            return Err(Error::InternalInconsistency(format!(
                "expected {} elements, enumerated {}",
                n.pow(k as u32),
                nr.elements.len()
            )));
        }
        Ok(nr)
    }

    /// The transformation near-ring of all f: Gamma -> Gamma with
    /// f(0) = 0 and f vanishing on `z`, under pointwise + and plain
    /// composition.
    pub fn annihilating(
        gamma: &FiniteGroup,
        z: &ElementSet,
        max_elements: usize,
    ) -> Result<NearRing> {
        if !z.contains(0) {
            return Err(Error::InvalidArgument(String::from(
                "annihilated set must contain 0",
            )));
        }
        let n = gamma.order();
        if z.iter().any(|a| a >= n) {
            return Err(Error::InvalidArgument(String::from(
                "annihilated element out of range",
            )));
        }
        let free: Vec<usize> = (1..n).filter(|&a| !z.contains(a)).collect();
        match (n as u128).checked_pow(free.len() as u32) {
            Some(sz) if sz <= max_elements as u128 => {}
            _ => {
                return Err(Error::ResourceLimit(format!(
                    "{n}^{} exceeds cap {max_elements}",
                    free.len()
                )))
            }
        }
        let mut elements = Vec::with_capacity(n.pow(free.len() as u32));
        let mut counters = alloc::vec![0usize; free.len()];
        loop {
            let mut values = alloc::vec![0usize; n];
            for (i, &a) in free.iter().enumerate() {
                values[a] = counters[i];
            }
            elements.push(NrElement::new(values));
            let mut i = 0;
            loop {
                if i == free.len() {
                    break;
                }
                counters[i] += 1;
                if counters[i] < n {
                    break;
                }
                counters[i] = 0;
                i += 1;
            }
            if i == free.len() {
                break;
            }
        }
        Ok(Self::assemble(
            gamma.clone(),
            (0..n).collect(),
            elements,
            NearRingKind::Transformation,
            None,
            Some(z.clone()),
        ))
    }

    /// Wraps explicit tables without validation; [`NearRing::verify_axioms`]
    /// is the check. Mainly for fault-injection tests and file ingestion.
    pub fn from_raw(
        gamma: FiniteGroup,
        domain: Vec<usize>,
        elements: Vec<NrElement>,
        add_table: Vec<u32>,
        mul_table: Vec<u32>,
    ) -> Result<NearRing> {
        let n = elements.len();
        if add_table.len() != n * n || mul_table.len() != n * n {
            return Err(Error::InvalidArgument(String::from("table size mismatch")));
        }
        if elements.iter().any(|e| e.values.len() != domain.len()) {
            return Err(Error::InvalidArgument(String::from("element arity mismatch")));
        }
        let mut domain_pos = alloc::vec![usize::MAX; gamma.order()];
        for (pos, &a) in domain.iter().enumerate() {
            domain_pos[a] = pos;
        }
        Ok(NearRing {
            gamma,
            domain,
            domain_pos,
            elements,
            kind: NearRingKind::Transformation,
            scheme: None,
            annihilated: None,
            add_table: Some(add_table),
            mul_table: Some(mul_table),
        })
    }

    fn build_tables(&mut self) {
        let n = self.elements.len();
        let mut add = alloc::vec![0u32; n * n];
        let mut mul = alloc::vec![0u32; n * n];
        for i in 0..n {
            for j in 0..n {
                add[i * n + j] = self
                    .index_of(&self.add_el(&self.elements[i], &self.elements[j]))
                    .expect("near-ring closed under +") as u32;
                mul[i * n + j] = self
                    .index_of(&self.mul_el(&self.elements[i], &self.elements[j]))
                    .expect("near-ring closed under o'") as u32;
            }
        }
        self.add_table = Some(add);
        self.mul_table = Some(mul);
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn domain(&self) -> &[usize] {
        &self.domain
    }

    pub fn elements(&self) -> &[NrElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &NrElement {
        &self.elements[i]
    }

    pub fn kind(&self) -> NearRingKind {
        self.kind
    }

    pub fn scheme(&self) -> Option<&SandwichScheme> {
        self.scheme.as_ref()
    }

    pub fn annihilated(&self) -> Option<&ElementSet> {
        self.annihilated.as_ref()
    }

    pub fn has_tables(&self) -> bool {
        self.add_table.is_some()
    }

    pub fn add_table(&self) -> Option<&[u32]> {
        self.add_table.as_deref()
    }

    pub fn mul_table(&self) -> Option<&[u32]> {
        self.mul_table.as_deref()
    }

    /// Index of the zero function (lexicographic sorting puts it first
    /// in every constructed near-ring).
    pub fn zero_index(&self) -> usize {
        self.elements
            .iter()
            .position(|e| e.is_zero())
            .expect("zero function present")
    }

    pub fn index_of(&self, el: &NrElement) -> Option<usize> {
        self.elements.binary_search(el).ok()
    }

    #[inline]
    pub fn domain_position(&self, a: usize) -> Option<usize> {
        match self.domain_pos.get(a) {
            Some(&p) if p != usize::MAX => Some(p),
            _ => None,
        }
    }

    /// Pointwise sum.
    pub fn add_el(&self, a: &NrElement, b: &NrElement) -> NrElement {
        NrElement::new(
            a.values
                .iter()
                .zip(&b.values)
                .map(|(&x, &y)| self.gamma.op(x, y))
                .collect(),
        )
    }

    /// x -> a(phi(b(x))) for sandwich kinds; plain a(b(x)) for
    /// transformation near-rings.
    pub fn mul_el(&self, a: &NrElement, b: &NrElement) -> NrElement {
        match self.kind {
            NearRingKind::Transformation => {
                NrElement::new(b.values.iter().map(|&v| a.values[v]).collect())
            }
            _ => {
                let scheme = self.scheme.as_ref().expect("sandwich kind carries a scheme");
                NrElement::new(
                    b.values
                        .iter()
                        .map(|&v| {
                            let y = scheme.phi_at(v);
                            a.values[self.domain_pos[y]]
                        })
                        .collect(),
                )
            }
        }
    }

    /// Like [`NearRing::mul_el`] but rejects foreign elements.
    pub fn mul_checked(&self, a: &NrElement, b: &NrElement) -> Result<NrElement> {
        if self.index_of(a).is_none() || self.index_of(b).is_none() {
            return Err(Error::InvalidArgument(String::from(
                "element does not belong to this near-ring",
            )));
        }
        Ok(self.mul_el(a, b))
    }

    #[inline]
    pub fn add(&self, i: usize, j: usize) -> usize {
        match &self.add_table {
            Some(t) => t[i * self.elements.len() + j] as usize,
            None => self
                .index_of(&self.add_el(&self.elements[i], &self.elements[j]))
                .expect("near-ring closed under +"),
        }
    }

    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.mul_table {
            Some(t) => t[i * self.elements.len() + j] as usize,
            None => self
                .index_of(&self.mul_el(&self.elements[i], &self.elements[j]))
                .expect("near-ring closed under o'"),
        }
    }

    pub fn neg(&self, i: usize) -> usize {
        let negated = NrElement::new(
            self.elements[i]
                .values
                .iter()
                .map(|&v| self.gamma.inverse(v))
                .collect(),
        );
        self.index_of(&negated).expect("near-ring closed under negation")
    }

    /// Exhaustive axiom check over all triples: additive group,
    /// associativity of o', right distributivity, zero symmetry.
    /// Limited to |N| <= TABLE_LIMIT.
    pub fn verify_axioms(&self) -> Result<AxiomReport> {
        let n = self.elements.len();
        if n > TABLE_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "axiom verification over all triples is limited to {TABLE_LIMIT} elements, got {n}"
            )));
        }
        let mut report = AxiomReport::default();
        let zero = self.zero_index();
        let fail = |law: &'static str, triple: (usize, usize, usize),
                        fs: &mut Vec<AxiomWitness>| {
            if fs.iter().all(|w| w.law != law) {
                fs.push(AxiomWitness { law, triple });
            }
        };
        // additive identity and inverses
        for a in 0..n {
            if self.add(zero, a) != a || self.add(a, zero) != a {
                fail("additive-identity", (a, zero, 0), &mut report.failures);
            }
            if (0..n).all(|b| self.add(a, b) != zero) {
                fail("additive-inverse", (a, 0, 0), &mut report.failures);
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.add(a, b);
                let ab_m = self.mul(a, b);
                if ab >= n || ab_m >= n {
                    fail("table-range", (a, b, 0), &mut report.failures);
                    continue;
                }
                for c in 0..n {
                    report.triples_checked += 1;
                    if self.add(ab, c) != self.add(a, self.add(b, c)) {
                        fail("additive-associativity", (a, b, c), &mut report.failures);
                    }
                    if self.mul(ab_m, c) != self.mul(a, self.mul(b, c)) {
                        fail("mul-associativity", (a, b, c), &mut report.failures);
                    }
                    if self.mul(ab, c) != self.add(self.mul(a, c), self.mul(b, c)) {
                        fail("right-distributivity", (a, b, c), &mut report.failures);
                    }
                }
            }
        }
        for a in 0..n {
            if self.mul(zero, a) != zero || self.mul(a, zero) != zero {
                fail("zero-symmetry", (a, zero, 0), &mut report.failures);
            }
        }
        Ok(report)
    }

    /// Scans for multiplicative left, right and two-sided identities.
    pub fn identities(&self) -> IdentityReport {
        let n = self.elements.len();
        let mut report = IdentityReport::default();
        for e in 0..n {
            if (0..n).all(|a| self.mul(a, e) == a) {
                report.right.push(e);
            }
            if (0..n).all(|a| self.mul(e, a) == a) {
                report.left.push(e);
            }
        }
        report.two_sided = report
            .right
            .iter()
            .copied()
            .find(|e| report.left.contains(e));
        report
    }

    /// True iff + is commutative and the left distributive law holds.
    ///
    /// Scheme-backed and annihilating near-rings use an exact reduction:
    /// at any X_1 element the values of independent elements range over
    /// all of Gamma, so commutativity of + collapses to commutativity of
    /// Gamma and left distributivity to
    /// a(phi(b + c)) = a(phi(b)) + a(phi(c)) over all pairs from Gamma.
    /// Raw-table near-rings fall back to the full triple scan.
    pub fn is_ring(&self) -> Result<bool> {
        match (&self.scheme, &self.annihilated) {
            (Some(scheme), _) => {
                if self.len() == 1 {
                    return Ok(true);
                }
                if !self.gamma.is_abelian() {
                    return Ok(false);
                }
                let n = self.gamma.order();
                for a in &self.elements {
                    for beta in 0..n {
                        let fb = a.values[self.domain_pos[scheme.phi_at(beta)]];
                        for delta in 0..n {
                            let left =
                                a.values[self.domain_pos[scheme.phi_at(self.gamma.op(beta, delta))]];
                            let fd = a.values[self.domain_pos[scheme.phi_at(delta)]];
                            if left != self.gamma.op(fb, fd) {
                                return Ok(false);
                            }
                        }
                    }
                }
                Ok(true)
            }
            (None, Some(z)) => {
                if z.len() == self.gamma.order() {
                    return Ok(true); // zero near-ring
                }
                if !self.gamma.is_abelian() {
                    return Ok(false);
                }
                let n = self.gamma.order();
                for a in &self.elements {
                    for beta in 0..n {
                        for delta in 0..n {
                            if a.values[self.gamma.op(beta, delta)]
                                != self.gamma.op(a.values[beta], a.values[delta])
                            {
                                return Ok(false);
                            }
                        }
                    }
                }
                Ok(true)
            }
            _ => self.is_ring_exhaustive(),
        }
    }

    /// Triple-scan oracle for [`NearRing::is_ring`]; limited to
    /// TABLE_LIMIT elements.
    pub fn is_ring_exhaustive(&self) -> Result<bool> {
        let n = self.elements.len();
        if n > TABLE_LIMIT {
            return Err(Error::ResourceLimit(format!(
                "exhaustive ring check is limited to {TABLE_LIMIT} elements, got {n}"
            )));
        }
        for a in 0..n {
            for b in 0..n {
                if self.add(a, b) != self.add(b, a) {
                    return Ok(false);
                }
                for c in 0..n {
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// First witness violating the left distributive law, if any.
    pub fn left_distributivity_witness(&self) -> Result<Option<(usize, usize, usize)>> {
        let n = self.elements.len();
        if n > TABLE_LIMIT {
            return Err(Error::ResourceLimit(String::from(
                "left distributivity witness scan needs tables",
            )));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Ok(Some((a, b, c)));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Checks right distributivity on every triple. For near-rings over
    /// the triple-scan limit the check reduces exactly to closure of the
    /// element set under + together with pointwise evaluation of sums,
    /// which covers all triples because (a+b) o' c evaluates a+b only at
    /// points phi(c(x)) of the common domain.
    pub fn check_right_distributivity(&self, triple_limit: usize) -> Result<bool> {
        let n = self.elements.len();
        if n <= triple_limit {
            for a in 0..n {
                for b in 0..n {
                    let ab = self.add(a, b);
                    for c in 0..n {
                        if self.mul(ab, c) != self.add(self.mul(a, c), self.mul(b, c)) {
                            return Ok(false);
                        }
                    }
                }
            }
            return Ok(true);
        }
        for a in 0..n {
            for b in 0..n {
                let sum = self.add_el(&self.elements[a], &self.elements[b]);
                if self.index_of(&sum).is_none() {
                    return Ok(false);
                }
                for pos in 0..self.domain.len() {
                    if sum.value_at(pos)
                        != self
                            .gamma
                            .op(self.elements[a].value_at(pos), self.elements[b].value_at(pos))
                    {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Closure of a generating set under +, - and o'. Test utility;
    /// proper dense subnear-rings never arise at finite scale.
    pub fn subnearring_closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut in_set = alloc::vec![false; self.elements.len()];
        in_set[self.zero_index()] = true;
        let mut members: Vec<usize> = alloc::vec![self.zero_index()];
        for &g in gens {
            if !in_set[g] {
                in_set[g] = true;
                members.push(g);
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            let snapshot = members.clone();
            for &a in &snapshot {
                let na = self.neg(a);
                if !in_set[na] {
                    in_set[na] = true;
                    members.push(na);
                    changed = true;
                }
                for &b in &snapshot {
                    for x in [self.add(a, b), self.mul(a, b)] {
                        if !in_set[x] {
                            in_set[x] = true;
                            members.push(x);
                            changed = true;
                        }
                    }
                }
            }
        }
        members.sort_unstable();
        members
    }
}

/// Verifies that restriction to X maps the annihilating near-ring `n`
/// isomorphically onto the centralizer near-ring of `scheme`, returning
/// the element pairing.
pub fn restriction_isomorphism(
    n: &NearRing,
    scheme: &SandwichScheme,
    max_elements: usize,
) -> Result<IsoCertificate> {
    if n.kind() != NearRingKind::Transformation {
        return Err(Error::InvalidArgument(String::from(
            "restriction source must be a transformation near-ring",
        )));
    }
    if n.gamma() != scheme.gamma() {
        return Err(Error::NotIsomorphic(String::from("different carrier groups")));
    }
    let target = NearRing::enumerate_centralizer(scheme, max_elements)?;
    if target.len() != n.len() {
        return Err(Error::NotIsomorphic(format!(
            "size mismatch: {} vs {}",
            n.len(),
            target.len()
        )));
    }
    let x: Vec<usize> = target.domain().to_vec();
    let mut pairs = Vec::with_capacity(n.len());
    let mut hit = alloc::vec![false; target.len()];
    for (i, f) in n.elements().iter().enumerate() {
        let restricted = NrElement::new(x.iter().map(|&a| f.value_at(a)).collect());
        let j = target.index_of(&restricted).ok_or_else(|| {
            Error::NotIsomorphic(format!("restriction of element {i} is not in the target"))
        })?;
        if hit[j] {
            return Err(Error::NotIsomorphic(format!(
                "restriction is not injective at element {i}"
            )));
        }
        hit[j] = true;
        pairs.push((i, j));
    }
    // structure preservation on all pairs
    for &(i, ti) in &pairs {
        for &(j, tj) in &pairs {
            let sum_src = pairs[n.add(i, j)].1;
            if target.add(ti, tj) != sum_src {
                return Err(Error::NotIsomorphic(format!(
                    "additivity fails at pair ({i},{j})"
                )));
            }
            let prod_src = pairs[n.mul(i, j)].1;
            if target.mul(ti, tj) != prod_src {
                return Err(Error::NotIsomorphic(format!(
                    "multiplicativity fails at pair ({i},{j})"
                )));
            }
        }
    }
    Ok(IsoCertificate { pairs, target })
}
