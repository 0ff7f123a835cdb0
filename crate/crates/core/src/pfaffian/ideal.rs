//! Triangular ideals: each generator is `v - g` for a distinct variable `v`.
//!
//! Reduction substitutes `v := g` in a topological order, so membership is
//! decided by checking that the normal form vanishes.

use std::collections::BTreeSet;

use super::{PfaffianError, SparsePoly};

#[derive(Clone, Debug)]
pub struct TriangularIdeal {
    /// `(leading variable index, tail)` pairs, already in substitution order.
    generators: Vec<(usize, SparsePoly)>,
    min_degree: Option<u32>,
}

impl TriangularIdeal {
    /// Orients each generator as `v - tail` with `v` occurring only in a `+-v` term,
    /// choosing distinct leading variables with an acyclic substitution order.
    pub fn new(generators: &[SparsePoly]) -> Result<Self, PfaffianError> {
        let mut options = Vec::new();
        for (i, g) in generators.iter().enumerate() {
            if g.is_zero() {
                return Err(PfaffianError::NotTriangular(format!("generator {} is zero", i + 1)));
            }
            let opts: Vec<(usize, SparsePoly)> = (0..g.ring().len())
                .filter_map(|v| {
                    g.linear_in(v).map(|(c, rest)| {
                        // c v + rest = 0  =>  v = -rest / c, and c = +-1.
                        (v, -&rest.scale(&c))
                    })
                })
                .collect();
            if opts.is_empty() {
                return Err(PfaffianError::NotTriangular(format!("generator {} ({g}) has no linear variable", i + 1)));
            }
            options.push(opts);
        }
        let mut chosen = Vec::new();
        if !assign(&options, 0, &mut chosen) {
            return Err(PfaffianError::NotTriangular("no acyclic choice of leading variables".into()));
        }
        let ordered = topological(&chosen).expect("assign only accepts acyclic choices");
        let min_degree = generators.iter().filter_map(SparsePoly::degree).min();
        Ok(Self { generators: ordered, min_degree })
    }

    pub fn leading_variables(&self) -> Vec<usize> {
        self.generators.iter().map(|(v, _)| *v).collect()
    }

    /// Least degree among homogeneous generators.
    pub fn min_generator_degree(&self) -> Option<u32> {
        self.min_degree
    }

    /// Normal form: `p` with every leading variable substituted away.
    pub fn reduce(&self, p: &SparsePoly) -> SparsePoly {
        let mut out = p.clone();
        for (v, tail) in &self.generators {
            if out.contains_var(*v) {
                out = out.substitute(*v, tail);
            }
        }
        out
    }

    pub fn is_member(&self, p: &SparsePoly) -> bool {
        self.reduce(p).is_zero()
    }
}

fn assign(options: &[Vec<(usize, SparsePoly)>], at: usize, chosen: &mut Vec<(usize, SparsePoly)>) -> bool {
    if at == options.len() {
        return topological(chosen).is_some();
    }
    for (v, tail) in &options[at] {
        if chosen.iter().any(|(w, _)| w == v) {
            continue;
        }
        chosen.push((*v, tail.clone()));
        if assign(options, at + 1, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Orders generators so that each tail only mentions leading variables substituted later.
fn topological(gens: &[(usize, SparsePoly)]) -> Option<Vec<(usize, SparsePoly)>> {
    let n = gens.len();
    // i must precede j when tail_i mentions v_j.
    let edges: Vec<Vec<usize>> =
        gens.iter().map(|(_, tail)| (0..n).filter(|&j| tail.contains_var(gens[j].0)).collect()).collect();
    let mut indegree = vec![0usize; n];
    for e in &edges {
        for &j in e {
            indegree[j] += 1;
        }
    }
    let mut ready: BTreeSet<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
    let mut order = Vec::new();
    while let Some(i) = ready.pop_first() {
        order.push(i);
        for &j in &edges[i] {
            indegree[j] -= 1;
            if indegree[j] == 0 {
                ready.insert(j);
            }
        }
    }
    (order.len() == n).then(|| order.into_iter().map(|i| gens[i].clone()).collect())
}
