use std::collections::BTreeMap;
use std::fmt;

use crate::error::{check_dim, Error, Result};

use super::torus::TranslatedTorus;

/// A finite union of translated subtori of `(C^*)^n`, pruned so that no
/// component contains another, in sorted order.
#[derive(Clone, PartialEq, Eq)]
pub struct VarietyDescription {
    n: usize,
    components: Vec<TranslatedTorus>,
}

impl VarietyDescription {
    pub fn new(n: usize, components: Vec<TranslatedTorus>) -> Result<Self> {
        for c in &components {
            check_dim(n, c.ambient_dim())?;
        }
        Ok(VarietyDescription { n, components: prune(components)? })
    }

    pub fn empty(n: usize) -> Self {
        VarietyDescription { n, components: Vec::new() }
    }

    /// `{1}`.
    pub fn identity(n: usize) -> Self {
        VarietyDescription { n, components: vec![TranslatedTorus::identity(n)] }
    }

    pub fn full(n: usize) -> Self {
        VarietyDescription { n, components: vec![TranslatedTorus::full(n)] }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[TranslatedTorus] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        Self::new(self.n, self.components.iter().chain(&other.components).cloned().collect())
    }

    /// Whether the set contains `c`. Exact when `c` is irreducible and lies in
    /// one component, which is the only way an irreducible set can be covered.
    pub fn contains_component(&self, c: &TranslatedTorus) -> Result<bool> {
        for d in &self.components {
            if d.contains(c)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn contains_identity(&self) -> bool {
        self.components.iter().any(|c| c.is_subtorus())
    }

    /// All components are points.
    pub fn is_finite(&self) -> bool {
        self.components.iter().all(TranslatedTorus::is_point)
    }

    pub fn positive_dimensional(&self) -> impl Iterator<Item = &TranslatedTorus> {
        self.components.iter().filter(|c| !c.is_point())
    }
}

fn prune(mut comps: Vec<TranslatedTorus>) -> Result<Vec<TranslatedTorus>> {
    comps.sort();
    comps.dedup();
    let mut keep = Vec::with_capacity(comps.len());
    for (i, c) in comps.iter().enumerate() {
        let mut covered = false;
        for (j, d) in comps.iter().enumerate() {
            if i != j && d.dim() > c.dim() && d.contains(c)? {
                covered = true;
                break;
            }
        }
        if !covered {
            keep.push(c.clone());
        }
    }
    Ok(keep)
}

impl fmt::Display for VarietyDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.components.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

impl fmt::Debug for VarietyDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `W^0 ⊆ W^1 ⊆ ... ⊆ W^k`, stored cumulatively.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GradedDescription {
    n: usize,
    degrees: BTreeMap<usize, VarietyDescription>,
}

impl GradedDescription {
    /// Entry `i` holds the degree-`i` jump locus; lower degrees are folded in
    /// so the filtration is ascending.
    pub fn new(n: usize, by_degree: Vec<VarietyDescription>) -> Result<Self> {
        let mut degrees = BTreeMap::new();
        let mut acc = VarietyDescription::empty(n);
        for (i, d) in by_degree.into_iter().enumerate() {
            check_dim(n, d.ambient_dim())?;
            acc = acc.union(&d)?;
            degrees.insert(i, acc.clone());
        }
        Ok(GradedDescription { n, degrees })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.degrees.keys().next_back().copied()
    }

    pub fn degree(&self, i: usize) -> Result<&VarietyDescription> {
        self.degrees.get(&i).ok_or_else(|| {
            Error::InvalidArgument(format!("degree {i} not available (top degree {:?})", self.top_degree()))
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &VarietyDescription)> {
        self.degrees.iter().map(|(i, d)| (*i, d))
    }
}
