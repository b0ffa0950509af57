//! JSON document types for groups, automorphism sets, schemes, recipes
//! and near-ring dumps, with conversions to and from the core types.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use nearring_core::autos::{AutomorphismSet, GroupMap};
use nearring_core::group::{ElementSet, FiniteGroup};
use nearring_core::nearring::{NearRing, NearRingKind, NrElement};
use nearring_core::sandwich::{build_phi, PhiRecipe, SandwichScheme};
use nearring_core::{Error, Result};

/// { "order": n, "table": [[...], ...] }
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupDoc {
    pub order: usize,
    pub table: Vec<Vec<usize>>,
}

impl GroupDoc {
    pub fn from_core(g: &FiniteGroup) -> GroupDoc {
        GroupDoc { order: g.order(), table: g.table_rows() }
    }

    pub fn to_core(&self) -> Result<FiniteGroup> {
        if self.table.len() != self.order {
            return Err(Error::InvalidArgument(format!(
                "order field says {}, table has {} rows",
                self.order,
                self.table.len()
            )));
        }
        FiniteGroup::from_cayley_table(&self.table)
    }
}

/// { "group": <group doc>, "autos": [image arrays], "phi": [indices] }
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SchemeDoc {
    pub group: GroupDoc,
    pub autos: Vec<Vec<usize>>,
    pub phi: Vec<usize>,
}

pub fn autos_to_core(g: &FiniteGroup, images: &[Vec<usize>]) -> Result<AutomorphismSet> {
    let maps: Vec<GroupMap> = images.iter().map(|im| GroupMap::new(im.clone())).collect();
    AutomorphismSet::from_maps(g, maps)
}

impl SchemeDoc {
    pub fn from_core(scheme: &SandwichScheme) -> SchemeDoc {
        SchemeDoc {
            group: GroupDoc::from_core(scheme.gamma()),
            autos: scheme.autos().maps().iter().map(|m| m.image().to_vec()).collect(),
            phi: scheme.phi().to_vec(),
        }
    }

    pub fn to_core(&self) -> Result<SandwichScheme> {
        let g = self.group.to_core()?;
        let autos = autos_to_core(&g, &self.autos)?;
        SandwichScheme::from_parts(g, autos, self.phi.clone())
    }
}

/// Input to build-phi: a group, an automorphism set, and the recipe
/// data (G, representatives, J indices, f as a rep -> image map).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RecipeDoc {
    pub group: GroupDoc,
    pub autos: Vec<Vec<usize>>,
    pub g: Vec<usize>,
    pub reps: Vec<usize>,
    pub j: Vec<usize>,
    /// JSON object keys are strings; they are parsed back to element
    /// indices.
    #[serde(default)]
    pub f: BTreeMap<String, usize>,
}

impl RecipeDoc {
    pub fn build(&self) -> Result<SandwichScheme> {
        let gamma = self.group.to_core()?;
        let autos = autos_to_core(&gamma, &self.autos)?;
        let mut f = BTreeMap::new();
        for (k, &v) in &self.f {
            let key: usize = k
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("bad f key {k:?}")))?;
            f.insert(key, v);
        }
        let recipe = PhiRecipe {
            g: ElementSet::new(self.g.clone()),
            reps: self.reps.clone(),
            j: self.j.clone(),
            f,
        };
        build_phi(&gamma, &autos, &recipe)
    }
}

/// { "domain": [...], "elements": [[values...]...], "add": [[...]],
///   "mul": [[...]] }
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NearRingDump {
    pub domain: Vec<usize>,
    pub elements: Vec<Vec<usize>>,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
}

impl NearRingDump {
    /// Requires operation tables, so the near-ring must be within the
    /// table limit.
    pub fn from_core(nr: &NearRing) -> Result<NearRingDump> {
        let n = nr.len();
        let (add, mul) = match (nr.add_table(), nr.mul_table()) {
            (Some(a), Some(m)) => (a, m),
            _ => {
                return Err(Error::ResourceLimit(format!(
                    "near-ring with {n} elements has no materialized tables to dump"
                )))
            }
        };
        let rows = |t: &[u32]| -> Vec<Vec<usize>> {
            (0..n)
                .map(|i| t[i * n..(i + 1) * n].iter().map(|&x| x as usize).collect())
                .collect()
        };
        Ok(NearRingDump {
            domain: nr.domain().to_vec(),
            elements: nr.elements().iter().map(|e| e.values().to_vec()).collect(),
            add: rows(add),
            mul: rows(mul),
        })
    }

    /// Rebuilds an unvalidated near-ring over `gamma`; run verify_axioms
    /// on the result.
    pub fn to_core(&self, gamma: FiniteGroup) -> Result<NearRing> {
        let n = self.elements.len();
        let flat = |rows: &[Vec<usize>], name: &str| -> Result<Vec<u32>> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::InvalidArgument(format!("{name} table is not {n}x{n}")));
            }
            let mut out = Vec::with_capacity(n * n);
            for row in rows {
                for &x in row {
                    if x >= n {
                        return Err(Error::InvalidArgument(format!(
                            "{name} table entry {x} out of range"
                        )));
                    }
                    out.push(x as u32);
                }
            }
            Ok(out)
        };
        let add = flat(&self.add, "add")?;
        let mul = flat(&self.mul, "mul")?;
        let elements = self.elements.iter().map(|v| NrElement::new(v.clone())).collect();
        NearRing::from_raw(gamma, self.domain.clone(), elements, add, mul)
    }
}

/// Input to axioms and embed: a transformation near-ring given by its
/// carrier group and the value arrays of its elements (over all of
/// Gamma).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TransformationDoc {
    pub group: GroupDoc,
    pub elements: Vec<Vec<usize>>,
}

impl TransformationDoc {
    /// Builds the near-ring under pointwise + and composition, verifying
    /// closure of the element set under both.
    pub fn to_core(&self) -> Result<NearRing> {
        let g = self.group.to_core()?;
        let order = g.order();
        let mut elements: Vec<NrElement> = Vec::with_capacity(self.elements.len());
        for values in &self.elements {
            if values.len() != order || values.iter().any(|&v| v >= order) {
                return Err(Error::InvalidArgument(String::from(
                    "element value array does not match the group order",
                )));
            }
            if values[0] != 0 {
                return Err(Error::InvalidArgument(String::from(
                    "elements must fix 0",
                )));
            }
            elements.push(NrElement::new(values.clone()));
        }
        elements.sort_unstable();
        elements.dedup();
        if !elements.iter().any(|e| e.is_zero()) {
            return Err(Error::InvalidArgument(String::from(
                "the zero function must be among the elements",
            )));
        }
        let n = elements.len();
        let index_of = |el: &NrElement| -> Result<u32> {
            elements
                .binary_search(el)
                .map(|i| i as u32)
                .map_err(|_| Error::InvalidArgument(String::from("element set is not closed")))
        };
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let sum =
                    NrElement::new(a.values().iter().zip(b.values()).map(|(&x, &y)| g.op(x, y)).collect());
                let prod = NrElement::new(b.values().iter().map(|&v| a.values()[v]).collect());
                add.push(index_of(&sum)?);
                mul.push(index_of(&prod)?);
            }
        }
        let domain: Vec<usize> = (0..order).collect();
        let nr = NearRing::from_raw(g, domain, elements, add, mul)?;
        debug_assert_eq!(nr.kind(), NearRingKind::Transformation);
        Ok(nr)
    }
}
