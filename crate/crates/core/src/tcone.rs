//! Exponential tangent cones: admissible partitions of Laurent supports and
//! the subspace arrangements they cut out.

use std::fmt;

use crate::error::{check_dim, Error, Result};
use crate::laurent::LaurentPoly;
use crate::qlinalg::RationalSubspace;
use crate::rational::Q;
use crate::tori::VarietyDescription;

/// Default cap on the support size handed to the partition search.
pub const DEFAULT_SUPPORT_LIMIT: usize = 16;

/// A partition of the support (indices in lexicographic exponent order) into
/// blocks with vanishing coefficient sums. Blocks are sorted, and ordered by
/// their first element.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct AdmissiblePartition {
    parts: Vec<Vec<usize>>,
}

impl AdmissiblePartition {
    pub fn new(mut parts: Vec<Vec<usize>>) -> Self {
        for p in &mut parts {
            p.sort_unstable();
        }
        parts.sort();
        AdmissiblePartition { parts }
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    /// Whether every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Self) -> bool {
        self.parts.iter().all(|p| coarser.parts.iter().any(|c| p.iter().all(|x| c.contains(x))))
    }
}

/// Rational subspaces, none containing another, sorted by dimension and then
/// basis. No subspaces at all encodes the empty cone, which is distinct from
/// the cone `{0}`.
#[derive(Clone, PartialEq, Eq)]
pub struct SubspaceArrangement {
    n: usize,
    subspaces: Vec<RationalSubspace>,
}

impl SubspaceArrangement {
    pub fn new(n: usize, mut subspaces: Vec<RationalSubspace>) -> Result<Self> {
        for s in &subspaces {
            check_dim(n, s.ambient_dim())?;
        }
        subspaces.sort();
        subspaces.dedup();
        let mut keep = Vec::with_capacity(subspaces.len());
        for (i, s) in subspaces.iter().enumerate() {
            let mut covered = false;
            for (j, t) in subspaces.iter().enumerate() {
                if i != j && t.dim() > s.dim() && t.contains(s)? {
                    covered = true;
                    break;
                }
            }
            if !covered {
                keep.push(s.clone());
            }
        }
        Ok(SubspaceArrangement { n, subspaces: keep })
    }

    pub fn empty(n: usize) -> Self {
        SubspaceArrangement { n, subspaces: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn subspaces(&self) -> &[RationalSubspace] {
        &self.subspaces
    }

    /// `τ_1 = ∅`.
    pub fn is_empty_cone(&self) -> bool {
        self.subspaces.is_empty()
    }

    /// The union as a set contains `v`.
    pub fn contains_vector(&self, v: &[Q]) -> Result<bool> {
        for s in &self.subspaces {
            if s.contains_vector(v)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        Self::new(self.n, self.subspaces.iter().chain(&other.subspaces).cloned().collect())
    }

    /// Set intersection of the unions: all pairwise intersections.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_dim(self.n, other.n)?;
        let mut out = Vec::new();
        for a in &self.subspaces {
            for b in &other.subspaces {
                out.push(a.intersect(b)?);
            }
        }
        Self::new(self.n, out)
    }
}

impl fmt::Display for SubspaceArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.subspaces.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.subspaces.iter().map(|s| format!("{s:?}")).collect();
        write!(f, "{}", parts.join(" ∪ "))
    }
}

impl fmt::Debug for SubspaceArrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn support_and_coeffs(f: &LaurentPoly, limit: usize) -> Result<(Vec<Vec<i64>>, Vec<Q>)> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.len() > limit {
        return Err(Error::SupportTooLarge { size: f.len(), limit });
    }
    Ok(f.terms().map(|(e, c)| (e.clone(), c.clone())).unzip())
}

/// Every admissible partition, each exactly once: the block holding the
/// smallest unassigned index is chosen among zero-sum subsets of the rest.
pub fn admissible_partitions(f: &LaurentPoly, limit: usize) -> Result<Vec<AdmissiblePartition>> {
    let (_, coeffs) = support_and_coeffs(f, limit)?;
    if coeffs.iter().sum::<Q>() != Q::default() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let all: Vec<usize> = (0..coeffs.len()).collect();
    partition_search(&coeffs, &all, &mut Vec::new(), &mut out);
    Ok(out)
}

fn partition_search(coeffs: &[Q], remaining: &[usize], blocks: &mut Vec<Vec<usize>>, out: &mut Vec<AdmissiblePartition>) {
    let Some((&anchor, rest)) = remaining.split_first() else {
        out.push(AdmissiblePartition::new(blocks.clone()));
        return;
    };
    let mut chosen = vec![anchor];
    block_search(coeffs, rest, 0, coeffs[anchor].clone(), &mut chosen, remaining, blocks, out);
}

#[allow(clippy::too_many_arguments)]
fn block_search(
    coeffs: &[Q],
    rest: &[usize],
    at: usize,
    sum: Q,
    chosen: &mut Vec<usize>,
    remaining: &[usize],
    blocks: &mut Vec<Vec<usize>>,
    out: &mut Vec<AdmissiblePartition>,
) {
    if at == rest.len() {
        if sum == Q::default() {
            let left: Vec<usize> = remaining.iter().copied().filter(|x| !chosen.contains(x)).collect();
            blocks.push(chosen.clone());
            partition_search(coeffs, &left, blocks, out);
            blocks.pop();
        }
        return;
    }
    let x = rest[at];
    chosen.push(x);
    block_search(coeffs, rest, at + 1, &sum + &coeffs[x], chosen, remaining, blocks, out);
    chosen.pop();
    block_search(coeffs, rest, at + 1, sum, chosen, remaining, blocks, out);
}

/// `L(p) = { x : (a - b)·x = 0 for a, b in a common block }`.
pub fn partition_subspace(p: &AdmissiblePartition, f: &LaurentPoly) -> Result<RationalSubspace> {
    let support = f.support();
    let n = f.nvars();
    let mut eqs = Vec::new();
    for block in p.parts() {
        for w in block.windows(2) {
            let (a, b) = (&support[w[0]], &support[w[1]]);
            eqs.push(a.iter().zip(b).map(|(x, y)| Q::from_integer((x - y).into())).collect());
        }
    }
    RationalSubspace::from_equations(n, &eqs)
}

/// Admissible partitions whose subspace is maximal among all of them.
/// `f(1) ≠ 0` gives no partitions at all.
pub fn admissible_partitions_maximal(f: &LaurentPoly, limit: usize) -> Result<Vec<AdmissiblePartition>> {
    let all = admissible_partitions(f, limit)?;
    let spaces = all.iter().map(|p| partition_subspace(p, f)).collect::<Result<Vec<_>>>()?;
    let mut out = Vec::new();
    for (i, p) in all.iter().enumerate() {
        let mut dominated = false;
        for (j, s) in spaces.iter().enumerate() {
            if i != j && s.dim() > spaces[i].dim() && s.contains(&spaces[i])? {
                dominated = true;
                break;
            }
        }
        if !dominated {
            out.push(p.clone());
        }
    }
    Ok(out)
}

/// `τ_1(V(f))`.
pub fn tangent_cone_poly(f: &LaurentPoly, limit: usize) -> Result<SubspaceArrangement> {
    let maximal = admissible_partitions_maximal(f, limit)?;
    let spaces = maximal.iter().map(|p| partition_subspace(p, f)).collect::<Result<Vec<_>>>()?;
    SubspaceArrangement::new(f.nvars(), spaces)
}

/// `τ_1(V(f_1, ..., f_k)) = ∩_j τ_1(V(f_j))`.
pub fn tangent_cone_polys(polys: &[LaurentPoly], limit: usize) -> Result<SubspaceArrangement> {
    let Some(first) = polys.first() else {
        return Err(Error::InvalidArgument("no polynomials given".into()));
    };
    let n = first.nvars();
    for f in polys {
        check_dim(n, f.nvars())?;
        if f.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
    }
    if polys.iter().any(|f| f.value_at_one() != Q::default()) {
        return Ok(SubspaceArrangement::empty(n));
    }
    let mut acc = tangent_cone_poly(first, limit)?;
    for f in &polys[1..] {
        acc = acc.intersect(&tangent_cone_poly(f, limit)?)?;
    }
    Ok(acc)
}

/// `τ_1(W)`: the subspaces of components passing through `1`.
pub fn tangent_cone_description(w: &VarietyDescription) -> Result<SubspaceArrangement> {
    let spaces = w.components().iter().filter(|c| c.is_subtorus()).map(|c| c.subspace().clone()).collect();
    SubspaceArrangement::new(w.ambient_dim(), spaces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::parse_laurent;
    use crate::rational::q;
    use crate::tori::{TorsionCharacter, TranslatedTorus};

    fn poly(s: &str) -> LaurentPoly {
        parse_laurent(s, None).unwrap()
    }

    fn sub(n: usize, rows: &[&[i64]]) -> RationalSubspace {
        RationalSubspace::from_int_rows(n, rows).unwrap()
    }

    #[test]
    fn chain_link_cone() {
        let d = poly("t1+t2+t3-t1*t2-t1*t3-t2*t3");
        let maximal = admissible_partitions_maximal(&d, DEFAULT_SUPPORT_LIMIT).unwrap();
        assert_eq!(maximal.len(), 3);
        let cone = tangent_cone_poly(&d, DEFAULT_SUPPORT_LIMIT).unwrap();
        let expect = SubspaceArrangement::new(
            3,
            vec![sub(3, &[&[0, 1, -1]]), sub(3, &[&[1, 0, -1]]), sub(3, &[&[1, -1, 0]])],
        )
        .unwrap();
        assert_eq!(cone, expect);
    }

    #[test]
    fn toy_and_trivial_cones() {
        let f = poly("t1+t2-2");
        let m = admissible_partitions_maximal(&f, 16).unwrap();
        assert_eq!(m, vec![AdmissiblePartition::new(vec![vec![0, 1, 2]])]);
        assert_eq!(tangent_cone_poly(&f, 16).unwrap().subspaces(), &[RationalSubspace::zero(2)]);
        assert!(admissible_partitions_maximal(&poly("t1+t2"), 16).unwrap().is_empty());
        assert!(tangent_cone_polys(&[poly("t1+t2")], 16).unwrap().is_empty_cone());
        assert_eq!(tangent_cone_poly(&LaurentPoly::zero(2), 16), Err(Error::ZeroPolynomial));
        let big = poly("t1+t1^2+t1^3+t1^4-4");
        assert!(matches!(tangent_cone_poly(&big, 4), Err(Error::SupportTooLarge { size: 5, limit: 4 })));
    }

    #[test]
    fn binomials_and_intersections() {
        let b = poly("t1^2 t2 - t3");
        let c = tangent_cone_poly(&b, 16).unwrap();
        assert_eq!(c.subspaces(), &[RationalSubspace::from_equations(3, &[vec![q(2), q(1), q(-1)]]).unwrap()]);
        let two = tangent_cone_polys(&[parse_laurent("t1-1", Some(2)).unwrap(), poly("t2-1")], 16).unwrap();
        assert_eq!(two.subspaces(), &[RationalSubspace::coordinate(2, &[0, 1]).unwrap()]);
    }

    #[test]
    fn description_cone() {
        let line = TranslatedTorus::new(vec![q(0), crate::rational::qr(1, 2)], sub(2, &[&[1, 1]])).unwrap();
        let w = VarietyDescription::new(2, vec![TranslatedTorus::identity(2), line]).unwrap();
        assert_eq!(tangent_cone_description(&w).unwrap().subspaces(), &[RationalSubspace::zero(2)]);
        let p = VarietyDescription::new(2, vec![TranslatedTorus::point(TorsionCharacter::new(vec![q(0), q(0)]))]);
        assert_eq!(tangent_cone_description(&p.unwrap()).unwrap().subspaces().len(), 1);
        assert!(tangent_cone_description(&VarietyDescription::empty(2)).unwrap().is_empty_cone());
    }
}
