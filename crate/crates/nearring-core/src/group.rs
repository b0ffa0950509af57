//! Finite group arithmetic over dense element indices.
//!
//! Elements are `0..n-1` with `0` fixed as the group identity; the group
//! operation is a fully materialized Cayley table, so every lookup is O(1).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::Result;

/// Largest group order for which subgroup and automorphism enumeration
/// is attempted.
pub const MAX_ENUMERATION_ORDER: usize = 64;

/// A sorted, deduplicated set of element indices of some [`FiniteGroup`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ElementSet(Vec<usize>);

impl ElementSet {
    pub fn new(mut elems: Vec<usize>) -> Self {
        elems.sort_unstable();
        elems.dedup();
        ElementSet(elems)
    }

    pub fn empty() -> Self {
        ElementSet(Vec::new())
    }

    pub fn singleton(a: usize) -> Self {
        ElementSet(vec![a])
    }

    pub fn contains(&self, a: usize) -> bool {
        self.0.binary_search(&a).is_ok()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn insert(&mut self, a: usize) {
        if let Err(pos) = self.0.binary_search(&a) {
            self.0.insert(pos, a);
        }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ElementSet::new(v)
    }

    pub fn is_subset_of(&self, other: &ElementSet) -> bool {
        self.iter().all(|a| other.contains(a))
    }

    /// Complement within `0..order`.
    pub fn complement(&self, order: usize) -> ElementSet {
        ElementSet((0..order).filter(|&a| !self.contains(a)).collect())
    }

    pub fn minus(&self, other: &ElementSet) -> ElementSet {
        ElementSet(self.iter().filter(|&a| !other.contains(a)).collect())
    }

    pub fn full(order: usize) -> ElementSet {
        ElementSet((0..order).collect())
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        ElementSet::new(iter.into_iter().collect())
    }
}

/// A finite group on element indices `0..n-1`, identity at index 0,
/// given by its full Cayley table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Flattened n*n table; entry `a*n + b` is `a + b`.
    table: Vec<usize>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// The cyclic group Z_n.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = (a + b) % n;
            }
        }
        let inverse = (0..n).map(|a| (n - a) % n).collect();
        Ok(FiniteGroup { order: n, table, inverse })
    }

    /// Validates a square Cayley table and wraps it. The identity must
    /// already sit at index 0; relabeling is rejected, not performed.
    pub fn from_cayley_table(table: &[Vec<usize>]) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidOrder);
        }
        for row in table {
            if row.len() != n {
                return Err(Error::NotAGroup(String::from("table is not square")));
            }
            if row.iter().any(|&x| x >= n) {
                return Err(Error::NotAGroup(String::from("entry out of range")));
            }
        }
        // identity at index 0
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                // distinguish "some other element is the identity" from junk
                let is_identity_row =
                    |e: usize| (0..n).all(|x| table[e][x] == x && table[x][e] == x);
                if (0..n).any(is_identity_row) {
                    return Err(Error::BadLabeling);
                }
                return Err(Error::NotAGroup(String::from("no identity element")));
            }
        }
        // Latin square
        for a in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for b in 0..n {
                if seen_row[table[a][b]] || seen_col[table[b][a]] {
                    return Err(Error::NotAGroup(format!(
                        "row or column {a} is not a permutation"
                    )));
                }
                seen_row[table[a][b]] = true;
                seen_col[table[b][a]] = true;
            }
        }
        // associativity, all n^3 triples
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        let mut inverse = vec![0usize; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a][b] == 0)
                .expect("latin square row contains identity");
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            flat.extend_from_slice(row);
        }
        Ok(FiniteGroup { order: n, table: flat, inverse })
    }

    /// Direct product with index pairing (a, b) -> a * |h| + b.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let n = g.order * h.order;
        let mut table = vec![0usize; n * n];
        for a1 in 0..g.order {
            for b1 in 0..h.order {
                for a2 in 0..g.order {
                    for b2 in 0..h.order {
                        let x = a1 * h.order + b1;
                        let y = a2 * h.order + b2;
                        table[x * n + y] = g.op(a1, a2) * h.order + h.op(b1, b2);
                    }
                }
            }
        }
        let inverse = (0..g.order)
            .flat_map(|a| (0..h.order).map(move |b| (a, b)))
            .map(|(a, b)| g.inverse(a) * h.order + h.inverse(b))
            .collect();
        FiniteGroup { order: n, table, inverse }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// a - b, i.e. a + (-b).
    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.op(a, self.inverse[b])
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.op(a, b) == self.op(b, a)))
    }

    /// Order of a single element.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    /// Cayley table as nested rows, mostly for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }

    fn mask_closure(&self, mut mask: u128) -> u128 {
        loop {
            let mut next = mask;
            for a in 0..self.order {
                if mask >> a & 1 == 0 {
                    continue;
                }
                next |= 1u128 << self.inverse[a];
                for b in 0..self.order {
                    if mask >> b & 1 == 1 {
                        next |= 1u128 << self.op(a, b);
                    }
                }
            }
            if next == mask {
                return mask;
            }
            mask = next;
        }
    }

    /// All subgroups, sorted by size then lexicographically.
    ///
    /// Breadth-first closure over one-element extensions; practical for
    /// order <= 64, rejected above that.
    pub fn subgroups(&self) -> Result<Vec<ElementSet>> {
        let n = self.order;
        if n > MAX_ENUMERATION_ORDER {
            return Err(Error::ResourceLimit(format!(
                "subgroup enumeration is limited to order {MAX_ENUMERATION_ORDER}, got {n}"
            )));
        }
        let trivial: u128 = 1;
        let mut all: BTreeSet<u128> = BTreeSet::new();
        all.insert(trivial);
        let mut frontier = vec![trivial];
        while let Some(h) = frontier.pop() {
            for a in 1..n {
                if h >> a & 1 == 1 {
                    continue;
                }
                let extended = self.mask_closure(h | 1u128 << a);
                if all.insert(extended) {
                    frontier.push(extended);
                }
            }
        }
        let mut out: Vec<ElementSet> = all
            .into_iter()
            .map(|mask| (0..n).filter(|&a| mask >> a & 1 == 1).collect())
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(out)
    }

    /// Subgroups invariant under conjugation.
    pub fn normal_subgroups(&self) -> Result<Vec<ElementSet>> {
        Ok(self
            .subgroups()?
            .into_iter()
            .filter(|h| self.is_normal(h))
            .collect())
    }

    pub fn is_normal(&self, h: &ElementSet) -> bool {
        (0..self.order)
            .all(|a| h.iter().all(|i| h.contains(self.sub(self.op(a, i), a))))
    }

    /// Closure check without enumerating everything.
    pub fn is_subgroup(&self, h: &ElementSet) -> bool {
        h.contains(0)
            && h.iter().all(|a| {
                h.contains(self.inverse[a]) && h.iter().all(|b| h.contains(self.op(a, b)))
            })
    }

    /// True iff `a` is a union of cosets delta + i of the subgroup `i`.
    pub fn is_union_of_cosets(&self, a: &ElementSet, i: &ElementSet) -> Result<bool> {
        if !self.is_subgroup(i) {
            return Err(Error::InvalidArgument(String::from(
                "coset test requires a subgroup",
            )));
        }
        Ok(a.iter().all(|d| i.iter().all(|x| a.contains(self.op(d, x)))))
    }

    /// Smallest generating set found by greedy extension.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: u128 = 1;
        while span.count_ones() as usize != self.order {
            let a = (1..self.order).find(|&a| span >> a & 1 == 0).unwrap();
            gens.push(a);
            span = self.mask_closure(span | 1u128 << a);
        }
        gens
    }
}

/// Dihedral group of order 2n: indices 0..n-1 are rotations r^i,
/// n..2n-1 are reflections s r^i.
pub fn dihedral(n: usize) -> Result<FiniteGroup> {
    if n < 1 {
        return Err(Error::InvalidOrder);
    }
    let order = 2 * n;
    let mut table = vec![vec![0usize; order]; order];
    for i in 0..order {
        for j in 0..order {
            let (ri, fi) = (i % n, i >= n);
            let (rj, fj) = (j % n, j >= n);
            // (f, r) pairs compose as in the semidirect product
            let rot = if fj { (rj + n - ri) % n } else { (ri + rj) % n };
            let flip = fi ^ fj;
            table[i][j] = rot + if flip { n } else { 0 };
        }
    }
    FiniteGroup::from_cayley_table(&table)
}

/// Dicyclic group of order 4n (n = 2 gives the quaternion group Q8).
pub fn dicyclic(n: usize) -> Result<FiniteGroup> {
    if n < 1 {
        return Err(Error::InvalidOrder);
    }
    let order = 4 * n;
    // elements a^i b^e with 0 <= i < 2n, e in {0,1};
    // relations: a^{2n} = 1, b^2 = a^n, b a = a^{-1} b.
    let idx = |i: usize, e: usize| e * 2 * n + i;
    let mut table = vec![vec![0usize; order]; order];
    for i in 0..2 * n {
        for e in 0..2 {
            for j in 0..2 * n {
                for f in 0..2 {
                    // (a^i b^e)(a^j b^f)
                    let (k, g) = if e == 0 {
                        ((i + j) % (2 * n), f)
                    } else if f == 0 {
                        // b a^j = a^{-j} b
                        ((i + 2 * n - j % (2 * n)) % (2 * n), 1)
                    } else {
                        // b a^j b = a^{-j} b^2 = a^{n-j}
                        ((i + n + 2 * n - j % (2 * n)) % (2 * n), 0)
                    };
                    table[idx(i, e)][idx(j, f)] = idx(k, g);
                }
            }
        }
    }
    FiniteGroup::from_cayley_table(&table)
}

pub fn quaternion_8() -> FiniteGroup {
    dicyclic(2).expect("Q8 construction")
}

/// Symmetric group S3 as the dihedral group of the triangle.
pub fn symmetric_3() -> FiniteGroup {
    dihedral(3).expect("S3 construction")
}

/// Alternating group A4 via its twelve even permutations of 4 points.
pub fn alternating_4() -> FiniteGroup {
    let mut perms: Vec<[usize; 4]> = Vec::new();
    let mut items = [0usize, 1, 2, 3];
    permute(&mut items, 0, &mut perms);
    perms.retain(|p| parity(p) == 0);
    perms.sort();
    // put identity first
    let id_pos = perms.iter().position(|p| *p == [0, 1, 2, 3]).unwrap();
    perms.swap(0, id_pos);
    let n = perms.len();
    let mut table = vec![vec![0usize; n]; n];
    for (i, p) in perms.iter().enumerate() {
        for (j, q) in perms.iter().enumerate() {
            let comp = [p[q[0]], p[q[1]], p[q[2]], p[q[3]]];
            table[i][j] = perms.iter().position(|r| *r == comp).unwrap();
        }
    }
    FiniteGroup::from_cayley_table(&table).expect("A4 construction")
}

fn permute(items: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        out.push(*items);
        return;
    }
    for i in k..4 {
        items.swap(k, i);
        permute(items, k + 1, out);
        items.swap(k, i);
    }
}

fn parity(p: &[usize; 4]) -> usize {
    let mut inv = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2
}

/// All groups of order <= 12 up to isomorphism, with short names.
/// Complete through order 12; used by the census and the sweep.
pub fn small_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let mut out: Vec<(String, FiniteGroup)> = Vec::new();
    let z = |n: usize| FiniteGroup::cyclic(n).unwrap();
    for n in 1..=max_order.min(12) {
        match n {
            4 => {
                out.push((String::from("Z4"), z(4)));
                out.push((String::from("Z2xZ2"), FiniteGroup::direct_product(&z(2), &z(2))));
            }
            6 => {
                out.push((String::from("Z6"), z(6)));
                out.push((String::from("S3"), symmetric_3()));
            }
            8 => {
                out.push((String::from("Z8"), z(8)));
                out.push((String::from("Z2xZ4"), FiniteGroup::direct_product(&z(2), &z(4))));
                out.push((
                    String::from("Z2xZ2xZ2"),
                    FiniteGroup::direct_product(&z(2), &FiniteGroup::direct_product(&z(2), &z(2))),
                ));
                out.push((String::from("D4"), dihedral(4).unwrap()));
                out.push((String::from("Q8"), quaternion_8()));
            }
            9 => {
                out.push((String::from("Z9"), z(9)));
                out.push((String::from("Z3xZ3"), FiniteGroup::direct_product(&z(3), &z(3))));
            }
            10 => {
                out.push((String::from("Z10"), z(10)));
                out.push((String::from("D5"), dihedral(5).unwrap()));
            }
            12 => {
                out.push((String::from("Z12"), z(12)));
                out.push((String::from("Z2xZ6"), FiniteGroup::direct_product(&z(2), &z(6))));
                out.push((String::from("D6"), dihedral(6).unwrap()));
                out.push((String::from("A4"), alternating_4()));
                out.push((String::from("Dic3"), dicyclic(3).unwrap()));
            }
            _ => out.push((format!("Z{n}"), z(n))),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn cyclic_basics() {
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.table_rows(), vec![vec![0]]);
        let g = FiniteGroup::cyclic(4).unwrap();
        assert_eq!(g.op(1, 3), 0);
        assert_eq!(g.inverse(1), 3);
        let g = FiniteGroup::cyclic(7).unwrap();
        assert_eq!(g.inverse(2), 5);
        assert!(matches!(FiniteGroup::cyclic(0), Err(Error::InvalidOrder)));
    }

    #[test]
    fn cayley_table_validation() {
        assert!(FiniteGroup::from_cayley_table(&[vec![0]]).is_ok());
        // Klein four-group: every element self-inverse
        let klein = vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        let g = FiniteGroup::from_cayley_table(&klein).unwrap();
        for a in 0..4 {
            assert_eq!(g.inverse(a), a);
        }
        // non-identity idempotent violates the Latin square
        let bad = vec![
            vec![0, 1, 2, 3],
            vec![1, 1, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_cayley_table(&bad),
            Err(Error::NotAGroup(_))
        ));
        // identity at index 1 instead of 0
        let relabeled = vec![vec![1, 0], vec![0, 1]];
        assert!(matches!(
            FiniteGroup::from_cayley_table(&relabeled),
            Err(Error::BadLabeling)
        ));
    }

    #[test]
    fn direct_products() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        let klein = FiniteGroup::direct_product(&z2, &z2);
        for a in 0..4 {
            assert_eq!(klein.op(a, a), 0);
        }
        let g = FiniteGroup::cyclic(5).unwrap();
        let same = FiniteGroup::direct_product(&FiniteGroup::cyclic(1).unwrap(), &g);
        assert_eq!(same.table_rows(), g.table_rows());
    }

    /// Brute-force isomorphism search over all bijections fixing 0.
    fn isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
        if g.order() != h.order() {
            return false;
        }
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        fn rec(g: &FiniteGroup, h: &FiniteGroup, perm: &mut Vec<usize>, k: usize) -> bool {
            let n = g.order();
            if k == n {
                return (0..n).all(|a| {
                    (0..n).all(|b| perm[g.op(a, b)] == h.op(perm[a], perm[b]))
                });
            }
            for i in k..n {
                perm.swap(k, i);
                if perm[0] == 0 && rec(g, h, perm, k + 1) {
                    return true;
                }
                perm.swap(k, i);
            }
            false
        }
        rec(g, h, &mut perm, 0)
    }

    #[test]
    fn z2_times_z3_is_z6() {
        let p = FiniteGroup::direct_product(
            &FiniteGroup::cyclic(2).unwrap(),
            &FiniteGroup::cyclic(3).unwrap(),
        );
        assert!(isomorphic(&p, &FiniteGroup::cyclic(6).unwrap()));
    }

    #[test]
    fn subgroup_enumeration() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let subs = g.subgroups().unwrap();
        assert_eq!(
            subs,
            vec![
                ElementSet::new(vec![0]),
                ElementSet::new(vec![0, 2]),
                ElementSet::full(4)
            ]
        );
        let g = FiniteGroup::cyclic(7).unwrap();
        assert_eq!(g.subgroups().unwrap().len(), 2);
        let g = FiniteGroup::cyclic(15).unwrap();
        let subs = g.subgroups().unwrap();
        assert_eq!(
            subs,
            vec![
                ElementSet::new(vec![0]),
                ElementSet::new(vec![0, 5, 10]),
                ElementSet::new(vec![0, 3, 6, 9, 12]),
                ElementSet::full(15)
            ]
        );
    }

    /// Independent oracle: scan all subsets (order <= 12) closed under
    /// the operation and inverses.
    fn subgroups_by_subset_scan(g: &FiniteGroup) -> Vec<ElementSet> {
        let n = g.order();
        assert!(n <= 12);
        let mut out = Vec::new();
        for mask in 1u32..1 << n {
            if mask & 1 == 0 {
                continue;
            }
            let set: ElementSet = (0..n).filter(|&a| mask >> a & 1 == 1).collect();
            if g.is_subgroup(&set) {
                out.push(set);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    #[test]
    fn subgroups_match_subset_scan() {
        for (_, g) in small_groups(10) {
            assert_eq!(g.subgroups().unwrap(), subgroups_by_subset_scan(&g));
        }
    }

    #[test]
    fn lagrange() {
        for (_, g) in small_groups(12) {
            for h in g.subgroups().unwrap() {
                assert_eq!(g.order() % h.len(), 0);
            }
        }
    }

    #[test]
    fn normal_subgroups_of_s3() {
        let s3 = symmetric_3();
        let normals = s3.normal_subgroups().unwrap();
        assert_eq!(
            normals,
            vec![
                ElementSet::new(vec![0]),
                ElementSet::new(vec![0, 1, 2]),
                ElementSet::full(6)
            ]
        );
        // abelian: all subgroups normal
        let g = FiniteGroup::cyclic(12).unwrap();
        assert_eq!(g.normal_subgroups().unwrap(), g.subgroups().unwrap());
        let g = FiniteGroup::cyclic(1).unwrap();
        assert_eq!(g.normal_subgroups().unwrap(), vec![ElementSet::new(vec![0])]);
    }

    #[test]
    fn union_of_cosets() {
        let z4 = FiniteGroup::cyclic(4).unwrap();
        let i = ElementSet::new(vec![0, 2]);
        assert!(!z4
            .is_union_of_cosets(&ElementSet::new(vec![0, 2, 3]), &i)
            .unwrap());
        assert!(z4.is_union_of_cosets(&i, &i).unwrap());
        assert!(z4
            .is_union_of_cosets(&ElementSet::new(vec![1, 3]), &ElementSet::singleton(0))
            .unwrap());
        assert!(matches!(
            z4.is_union_of_cosets(&i, &ElementSet::new(vec![0, 1])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn named_groups_are_groups() {
        // from_cayley_table validates associativity for all of these
        assert_eq!(symmetric_3().order(), 6);
        assert_eq!(quaternion_8().order(), 8);
        assert_eq!(alternating_4().order(), 12);
        assert_eq!(dihedral(4).unwrap().order(), 8);
        assert_eq!(dicyclic(3).unwrap().order(), 12);
        assert!(!quaternion_8().is_abelian());
        assert!(!alternating_4().is_abelian());
    }
}
