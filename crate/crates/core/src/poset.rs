//! Finite ordered sets over dense boolean relations.

use std::collections::HashMap;

use crate::error::OrderError;

/// Square boolean matrix over element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation { n, bits: vec![false; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.set(i, i, true);
        }
        r
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            for j in 0..n {
                r.bits[i * n + j] = f(i, j);
            }
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        self.bits[i * self.n + j] = v;
    }

    /// Pairs `(i, j)` in the relation, row-major.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n * self.n)
            .filter(|&k| self.bits[k])
            .map(move |k| (k / self.n, k % self.n))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.n, |i, j| self.get(j, i))
    }

    /// Reflexive-transitive closure (Warshall).
    pub fn reflexive_transitive_closure(&self) -> Self {
        let mut r = self.clone();
        for i in 0..self.n {
            r.set(i, i, true);
        }
        for k in 0..self.n {
            for i in 0..self.n {
                if r.get(i, k) {
                    for j in 0..self.n {
                        if r.get(k, j) {
                            r.set(i, j, true);
                        }
                    }
                }
            }
        }
        r
    }

    /// Transitive reduction of a partial order: strict pairs with nothing strictly between.
    pub fn transitive_reduction(&self) -> Self {
        let n = self.n;
        Self::from_fn(n, |i, j| {
            i != j
                && self.get(i, j)
                && !(0..n).any(|k| k != i && k != j && self.get(i, k) && self.get(k, j))
        })
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.get(i, i))
    }

    /// First `(i, j, k)` with `i R j`, `j R k` but not `i R k`.
    pub fn transitivity_violation(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.n {
            for j in 0..self.n {
                if !self.get(i, j) {
                    continue;
                }
                for k in 0..self.n {
                    if self.get(j, k) && !self.get(i, k) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First distinct pair related both ways.
    pub fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.get(i, j) && self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// A finite ordered set with labelled elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    labels: Vec<String>,
    leq: Relation,
    covers: Relation,
}

impl FinitePoset {
    /// Builds the order as the reflexive-transitive closure of the cover pairs `(lower, upper)`.
    pub fn from_covers<S: AsRef<str>>(labels: &[S], covers: &[(S, S)]) -> Result<Self, OrderError> {
        let labels: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
        let index = label_index(&labels)?;
        let mut pairs = Vec::with_capacity(covers.len());
        for (a, b) in covers {
            let ia = *index
                .get(a.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(a.as_ref().to_string()))?;
            let ib = *index
                .get(b.as_ref())
                .ok_or_else(|| OrderError::UnknownElement(b.as_ref().to_string()))?;
            pairs.push((ia, ib));
        }
        Self::from_cover_indices(labels, &pairs)
    }

    pub fn from_cover_indices(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<Self, OrderError> {
        label_index(&labels)?;
        let n = labels.len();
        let mut base = Relation::empty(n);
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(OrderError::UnknownElement(format!("#{}", a.max(b))));
            }
            if a == b {
                return Err(OrderError::SelfCover(labels[a].clone()));
            }
            base.set(a, b, true);
        }
        let leq = base.reflexive_transitive_closure();
        if let Some((i, j)) = leq.antisymmetry_violation() {
            return Err(OrderError::Cycle(labels[i].clone(), labels[j].clone()));
        }
        let covers = leq.transitive_reduction();
        Ok(FinitePoset { labels, leq, covers })
    }

    /// Validates a full order relation.
    pub fn from_relation(labels: Vec<String>, leq: Relation) -> Result<Self, OrderError> {
        label_index(&labels)?;
        if leq.size() != labels.len() {
            return Err(OrderError::SizeMismatch { relation: leq.size(), labels: labels.len() });
        }
        if let Some(i) = (0..labels.len()).find(|&i| !leq.get(i, i)) {
            return Err(OrderError::NotReflexive(labels[i].clone()));
        }
        if let Some((i, j)) = leq.antisymmetry_violation() {
            return Err(OrderError::Cycle(labels[i].clone(), labels[j].clone()));
        }
        if let Some((i, j, k)) = leq.transitivity_violation() {
            return Err(OrderError::NotTransitive(
                labels[i].clone(),
                labels[j].clone(),
                labels[k].clone(),
            ));
        }
        let covers = leq.transitive_reduction();
        Ok(FinitePoset { labels, leq, covers })
    }

    pub fn from_order_fn(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self, OrderError> {
        let rel = Relation::from_fn(labels.len(), leq);
        Self::from_relation(labels, rel)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn order(&self) -> &Relation {
        &self.leq
    }

    pub fn cover_relation(&self) -> &Relation {
        &self.covers
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq.get(i, j)
    }

    #[inline]
    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq.get(i, j)
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) || self.leq(j, i)
    }

    /// True when `upper` covers `lower`.
    #[inline]
    pub fn covers(&self, lower: usize, upper: usize) -> bool {
        self.covers.get(lower, upper)
    }

    /// Cover pairs `(lower, upper)` in declared order.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        self.covers.pairs().collect()
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.covers(i, j)).collect()
    }

    pub fn lower_covers(&self, i: usize) -> Vec<usize> {
        (0..self.len()).filter(|&j| self.covers(j, i)).collect()
    }

    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| !self.lt(j, i))).collect()
    }

    pub fn maximal(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| (0..self.len()).all(|j| !self.lt(i, j))).collect()
    }

    pub fn least(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(i, j)))
    }

    pub fn greatest(&self) -> Option<usize> {
        (0..self.len()).find(|&i| (0..self.len()).all(|j| self.leq(j, i)))
    }

    pub fn upper_bounds(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.leq(i, k) && self.leq(j, k)).collect()
    }

    pub fn lower_bounds(&self, i: usize, j: usize) -> Vec<usize> {
        (0..self.len()).filter(|&k| self.leq(k, i) && self.leq(k, j)).collect()
    }

    pub fn is_chain(&self, subset: &[usize]) -> bool {
        subset
            .iter()
            .enumerate()
            .all(|(a, &i)| subset[a + 1..].iter().all(|&j| self.comparable(i, j)))
    }

    pub fn is_antichain(&self, subset: &[usize]) -> bool {
        subset
            .iter()
            .enumerate()
            .all(|(a, &i)| subset[a + 1..].iter().all(|&j| !self.comparable(i, j)))
    }

    /// A linear extension, stable with respect to declared order.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut placed = vec![false; n];
        let mut out = Vec::with_capacity(n);
        while out.len() < n {
            let next = (0..n)
                .find(|&i| !placed[i] && (0..n).all(|j| placed[j] || !self.lt(j, i)))
                .expect("partial order is acyclic");
            placed[next] = true;
            out.push(next);
        }
        out
    }

    /// Length of the longest chain ending at each element, counted in edges.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0usize; self.len()];
        for i in self.linear_extension() {
            h[i] = self
                .lower_covers(i)
                .iter()
                .map(|&j| h[j] + 1)
                .max()
                .unwrap_or(0);
        }
        h
    }

    /// Length of the longest chain (number of edges); zero for the empty poset.
    pub fn length(&self) -> usize {
        self.heights().into_iter().max().unwrap_or(0)
    }

    /// Width and a minimum partition into chains, via bipartite matching on the strict order.
    ///
    /// Each chain is listed bottom to top; chains are ordered by their least element.
    pub fn width_and_chains(&self) -> (usize, Vec<Vec<usize>>) {
        let n = self.len();
        // succ[i] = the element matched above i in its chain.
        let mut match_right: Vec<Option<usize>> = vec![None; n];
        let mut succ: Vec<Option<usize>> = vec![None; n];
        for u in 0..n {
            let mut seen = vec![false; n];
            self.augment(u, &mut seen, &mut match_right, &mut succ);
        }
        let mut chains = Vec::new();
        for start in 0..n {
            if match_right[start].is_some() {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = succ[cur] {
                chain.push(next);
                cur = next;
            }
            chains.push(chain);
        }
        chains.sort_by_key(|c| c[0]);
        (chains.len(), chains)
    }

    fn augment(
        &self,
        u: usize,
        seen: &mut [bool],
        match_right: &mut [Option<usize>],
        succ: &mut [Option<usize>],
    ) -> bool {
        for v in 0..self.len() {
            if !self.lt(u, v) || seen[v] {
                continue;
            }
            seen[v] = true;
            let free = match match_right[v] {
                None => true,
                Some(w) => self.augment(w, seen, match_right, succ),
            };
            if free {
                match_right[v] = Some(u);
                succ[u] = Some(v);
                return true;
            }
        }
        false
    }

    /// Sub-poset on `subset` with the inherited order; labels are kept.
    pub fn induced(&self, subset: &[usize]) -> FinitePoset {
        let labels: Vec<String> = subset.iter().map(|&i| self.labels[i].clone()).collect();
        let leq = Relation::from_fn(subset.len(), |a, b| self.leq(subset[a], subset[b]));
        let covers = leq.transitive_reduction();
        FinitePoset { labels, leq, covers }
    }

    /// Same carrier, reversed order.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset {
            labels: self.labels.clone(),
            leq: self.leq.transpose(),
            covers: self.covers.transpose(),
        }
    }

    pub fn relabel(&self, labels: Vec<String>) -> Result<FinitePoset, OrderError> {
        if labels.len() != self.len() {
            return Err(OrderError::SizeMismatch { relation: self.len(), labels: labels.len() });
        }
        label_index(&labels)?;
        Ok(FinitePoset { labels, leq: self.leq.clone(), covers: self.covers.clone() })
    }

    /// Same order with every label prefixed.
    pub fn with_prefix(&self, prefix: &str) -> FinitePoset {
        FinitePoset {
            labels: self.labels.iter().map(|l| format!("{prefix}{l}")).collect(),
            leq: self.leq.clone(),
            covers: self.covers.clone(),
        }
    }
}

fn label_index(labels: &[String]) -> Result<HashMap<&str, usize>, OrderError> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, l) in labels.iter().enumerate() {
        if index.insert(l.as_str(), i).is_some() {
            return Err(OrderError::DuplicateElement(l.clone()));
        }
    }
    Ok(index)
}
