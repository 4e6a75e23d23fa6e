//! Signed graphs: the data model, switching, canonical forms and
//! switching-equivalence witnesses, plus the `.sg` text format.

use std::cmp::Ordering;
use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::SymmetricIntMatrix;

/// A signed graph on vertices `0..n`: every unordered pair carries `+1`
/// (positive edge), `-1` (negative edge) or `0` (non-edge). Positive and
/// negative edge sets are disjoint by construction, loops are rejected.
/// Values are immutable once built; all operations return new graphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    adj: Vec<i8>,
}

impl SignedGraph {
    pub fn empty(n: usize) -> Self {
        SignedGraph { n, adj: vec![0; n * n] }
    }

    pub fn with_edges(n: usize, edges: &[(usize, usize, i8)]) -> Result<Self> {
        let mut g = Self::empty(n);
        for &(u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    /// Adds a signed edge; `sign` must be `+1` or `-1`. Rejects loops,
    /// out-of-range endpoints and pairs that already carry an edge of either
    /// sign.
    pub fn add_edge(&mut self, u: usize, v: usize, sign: i8) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(Error::Parse(format!("loop at vertex {u}")));
        }
        if sign != 1 && sign != -1 {
            return Err(Error::Parse(format!("invalid sign {sign}")));
        }
        if self.adj[u * self.n + v] != 0 {
            return Err(Error::Parse(format!("duplicate edge {{{u},{v}}}")));
        }
        self.adj[u * self.n + v] = sign;
        self.adj[v * self.n + u] = sign;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn sign(&self, u: usize, v: usize) -> i8 {
        self.adj[u * self.n + v]
    }

    /// Edges as `(u, v, sign)` with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> Vec<(usize, usize, i8)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                let s = self.sign(u, v);
                if s != 0 {
                    out.push((u, v, s));
                }
            }
        }
        out
    }

    pub fn pos_edges(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().filter(|e| e.2 > 0).map(|e| (e.0, e.1)).collect()
    }

    pub fn neg_edges(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().filter(|e| e.2 < 0).map(|e| (e.0, e.1)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&s| s != 0).count() / 2
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.n).filter(|&u| self.sign(u, v) != 0).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.sign(u, v) != 0).count()
    }

    /// Minimum degree of the underlying graph; 0 for the empty graph.
    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn adjacency_matrix(&self) -> SymmetricIntMatrix {
        let mut m = SymmetricIntMatrix::zero(self.n);
        for (u, v, s) in self.edges() {
            m.set(u, v, s as i64);
        }
        m
    }

    /// Underlying (unsigned) graph: every edge made positive.
    pub fn underlying(&self) -> SignedGraph {
        SignedGraph {
            n: self.n,
            adj: self.adj.iter().map(|&s| if s != 0 { 1 } else { 0 }).collect(),
        }
    }

    /// The negative `-S`: positive and negative edge sets exchanged.
    pub fn negated(&self) -> SignedGraph {
        SignedGraph { n: self.n, adj: self.adj.iter().map(|&s| -s).collect() }
    }

    /// Induced subgraph on `verts` (new labels follow the order given).
    pub fn induced(&self, verts: &[usize]) -> Result<SignedGraph> {
        if verts.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &v in verts {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let k = verts.len();
        let mut g = SignedGraph::empty(k);
        for i in 0..k {
            for j in i + 1..k {
                let s = self.sign(verts[i], verts[j]);
                if s != 0 {
                    g.adj[i * k + j] = s;
                    g.adj[j * k + i] = s;
                }
            }
        }
        Ok(g)
    }

    /// Removes one vertex, relabeling the rest in order.
    pub fn delete_vertex(&self, v: usize) -> Result<SignedGraph> {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Switching at the vertex set `w`: an edge flips sign exactly when one
    /// endpoint is inside `w`.
    pub fn switch(&self, w: &[usize]) -> Result<SignedGraph> {
        let mut mask = vec![false; self.n];
        for &v in w {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            mask[v] = true;
        }
        Ok(self.switch_mask(&mask))
    }

    pub fn switch_mask(&self, mask: &[bool]) -> SignedGraph {
        debug_assert_eq!(mask.len(), self.n);
        let mut g = self.clone();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if mask[u] != mask[v] {
                    g.adj[u * self.n + v] = -g.adj[u * self.n + v];
                    g.adj[v * self.n + u] = -g.adj[v * self.n + u];
                }
            }
        }
        g
    }

    /// Relabels vertices: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> SignedGraph {
        debug_assert_eq!(perm.len(), self.n);
        let mut g = SignedGraph::empty(self.n);
        for u in 0..self.n {
            for v in 0..self.n {
                g.adj[perm[u] * self.n + perm[v]] = self.adj[u * self.n + v];
            }
        }
        g
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.component_of(0).len() == self.n
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        let mut out = vec![start];
        while let Some(u) = queue.pop_front() {
            for v in self.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    out.push(v);
                    queue.push_back(v);
                }
            }
        }
        out
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = self.component_of(s);
            comp.sort_unstable();
            for &v in &comp {
                seen[v] = true;
            }
            comps.push(comp);
        }
        comps
    }

    /// Upper-triangle adjacency encoding, used as a total order on labeled
    /// signed graphs.
    pub fn encode(&self) -> Vec<i8> {
        let mut out = Vec::with_capacity(self.n * (self.n.saturating_sub(1)) / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                out.push(self.sign(u, v));
            }
        }
        out
    }

    /// The unique member of this graph's switching class (labels fixed) in
    /// which every edge of the deterministic BFS spanning forest is positive.
    /// The forest is grown from the lowest-index vertex of each component
    /// with neighbors visited in sorted order. Returns the graph and one
    /// switching set realizing it (roots kept out of the set).
    pub fn canonical_switch_form(&self) -> (SignedGraph, Vec<bool>) {
        let mut mask = vec![false; self.n];
        let mut seen = vec![false; self.n];
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut queue = VecDeque::new();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        // After switching, the tree edge {u, v} must be
                        // positive: flip v when the switched sign is negative.
                        let s = self.sign(u, v) < 0;
                        mask[v] = mask[u] ^ s;
                        queue.push_back(v);
                    }
                }
            }
        }
        (self.switch_mask(&mask), mask)
    }

    /// `.sg` text form: header `sg <n>`, one `u v +|-` line per edge in
    /// sorted order, LF endings.
    pub fn to_sg_string(&self) -> String {
        let mut s = format!("sg {}\n", self.n);
        for (u, v, sign) in self.edges() {
            let c = if sign > 0 { '+' } else { '-' };
            let _ = writeln!(s, "{u} {v} {c}");
        }
        s
    }

    pub fn parse_sg(text: &str) -> Result<SignedGraph> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
        let mut parts = header.split_whitespace();
        match parts.next() {
            Some("sg") => {}
            _ => return Err(Error::Parse("expected 'sg <n>' header".into())),
        }
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::Parse("bad vertex count".into()))?;
        if parts.next().is_some() {
            return Err(Error::Parse("trailing tokens in header".into()));
        }
        let mut g = SignedGraph::empty(n);
        for line in lines {
            let toks: Vec<&str> = line.split_whitespace().collect();
            if toks.len() != 3 {
                return Err(Error::Parse(format!("bad edge line '{line}'")));
            }
            let u: usize = toks[0].parse().map_err(|_| Error::Parse(format!("bad vertex '{}'", toks[0])))?;
            let v: usize = toks[1].parse().map_err(|_| Error::Parse(format!("bad vertex '{}'", toks[1])))?;
            let s = match toks[2] {
                "+" => 1,
                "-" => -1,
                other => return Err(Error::Parse(format!("bad sign '{other}'"))),
            };
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    /// Degree multiset, sorted; a cheap switching-isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Canonical representative of the switching-isomorphism class, with a
    /// transform realizing it. Minimizes the encoding of
    /// `canonical_switch_form(relabel(S, perm))` over all permutations that
    /// sort degrees nondecreasingly (a class-invariant restriction).
    pub fn canonical_signed_form(&self) -> (SignedGraph, SwitchTransform) {
        let mut best: Option<(Vec<i8>, SignedGraph, SwitchTransform)> = None;
        for perm in degree_sorted_permutations(self) {
            let relabeled = self.relabel(&perm);
            let (csf, mask) = relabeled.canonical_switch_form();
            let enc = csf.encode();
            let better = match &best {
                None => true,
                Some((best_enc, _, _)) => enc.as_slice() < best_enc.as_slice(),
            };
            if better {
                // T(S) = relabel(switch(S, W0), perm) with W0 = perm^{-1}(mask).
                let mut w0 = vec![false; self.n];
                for v in 0..self.n {
                    w0[v] = mask[perm[v]];
                }
                best = Some((enc, csf, SwitchTransform { switch_mask: w0, perm }));
            }
        }
        let (_, g, t) = best.expect("at least one permutation");
        (g, t)
    }

    /// Decides switching equivalence (some relabeling of `other` lies in this
    /// graph's switching class) and returns a replayable witness.
    pub fn switching_equivalent(&self, other: &SignedGraph) -> Option<SwitchWitness> {
        if self.n != other.n {
            return None;
        }
        if self.degree_sequence() != other.degree_sequence() {
            return None;
        }
        let (c1, t1) = self.canonical_signed_form();
        let (c2, t2) = other.canonical_signed_form();
        if c1 != c2 {
            return None;
        }
        let w = t2.invert().compose_after(&t1).into_witness();
        debug_assert!(w.replay(self).as_ref() == Some(other));
        Some(w)
    }
}

/// A switching-plus-relabeling transform: `T(S) = relabel(switch(S, W), perm)`.
#[derive(Debug, Clone)]
pub struct SwitchTransform {
    pub switch_mask: Vec<bool>,
    pub perm: Vec<usize>,
}

impl SwitchTransform {
    pub fn identity(n: usize) -> Self {
        SwitchTransform { switch_mask: vec![false; n], perm: (0..n).collect() }
    }

    pub fn apply(&self, g: &SignedGraph) -> SignedGraph {
        g.switch_mask(&self.switch_mask).relabel(&self.perm)
    }

    pub fn invert(&self) -> SwitchTransform {
        let n = self.perm.len();
        let mut inv_perm = vec![0; n];
        for v in 0..n {
            inv_perm[self.perm[v]] = v;
        }
        let mut mask = vec![false; n];
        for v in 0..n {
            mask[self.perm[v]] = self.switch_mask[v];
        }
        SwitchTransform { switch_mask: mask, perm: inv_perm }
    }

    /// The composite `self ∘ first` (apply `first`, then `self`).
    pub fn compose_after(&self, first: &SwitchTransform) -> SwitchTransform {
        let n = self.perm.len();
        let mut mask = vec![false; n];
        for v in 0..n {
            // W = W1 xor perm1^{-1}(W2)
            mask[v] = first.switch_mask[v] ^ self.switch_mask[first.perm[v]];
        }
        let perm = (0..n).map(|v| self.perm[first.perm[v]]).collect();
        SwitchTransform { switch_mask: mask, perm }
    }

    pub fn into_witness(self) -> SwitchWitness {
        let subset = self
            .switch_mask
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(v, _)| v)
            .collect();
        SwitchWitness { subset, bijection: self.perm }
    }
}

/// Certificate of switching equivalence: switching the source at `subset`
/// and relabeling by `bijection` reproduces the target exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchWitness {
    pub subset: Vec<usize>,
    pub bijection: Vec<usize>,
}

impl SwitchWitness {
    pub fn identity(n: usize) -> Self {
        SwitchWitness { subset: vec![], bijection: (0..n).collect() }
    }

    pub fn replay(&self, source: &SignedGraph) -> Option<SignedGraph> {
        if self.bijection.len() != source.n() {
            return None;
        }
        let switched = source.switch(&self.subset).ok()?;
        Some(switched.relabel(&self.bijection))
    }

    pub fn to_transform(&self, n: usize) -> SwitchTransform {
        let mut mask = vec![false; n];
        for &v in &self.subset {
            mask[v] = true;
        }
        SwitchTransform { switch_mask: mask, perm: self.bijection.clone() }
    }

    /// Witness for the reverse direction.
    pub fn invert(&self, n: usize) -> SwitchWitness {
        self.to_transform(n).invert().into_witness()
    }

    /// Witness for the composition source -> mid -> target.
    pub fn then(&self, next: &SwitchWitness, n: usize) -> SwitchWitness {
        next.to_transform(n).compose_after(&self.to_transform(n)).into_witness()
    }
}

/// All permutations `perm` (old -> new) for which the relabeled graph has a
/// nondecreasing degree sequence. Closed under isomorphism, so minimizing an
/// encoding over this set yields a class function.
fn degree_sorted_permutations(g: &SignedGraph) -> Vec<Vec<usize>> {
    let n = g.n();
    // Group vertices by degree; block k occupies a fixed range of new labels.
    let mut by_degree: Vec<(usize, usize)> = (0..n).map(|v| (g.degree(v), v)).collect();
    by_degree.sort_unstable();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (d, v) in by_degree {
        match blocks.last_mut() {
            Some(last) if g.degree(last[0]) == d => last.push(v),
            _ => blocks.push(vec![v]),
        }
    }
    let mut out = Vec::new();
    let mut perm = vec![0usize; n];
    fn rec(
        blocks: &[Vec<usize>],
        offset: usize,
        bi: usize,
        perm: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if bi == blocks.len() {
            out.push(perm.clone());
            return;
        }
        let block = &blocks[bi];
        let k = block.len();
        let mut arrangement: Vec<usize> = (0..k).collect();
        loop {
            for (slot, &idx) in arrangement.iter().enumerate() {
                perm[block[idx]] = offset + slot;
            }
            rec(blocks, offset + k, bi + 1, perm, out);
            if !next_permutation(&mut arrangement) {
                break;
            }
        }
    }
    rec(&blocks, 0, 0, &mut perm, &mut out);
    out
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All bijections old -> new realizing an isomorphism of the *labeled signed*
/// graphs, found by degree-pruned backtracking. Used for automorphism groups
/// and multigraph isomorphism elsewhere.
pub fn signed_isomorphisms(a: &SignedGraph, b: &SignedGraph) -> Vec<Vec<usize>> {
    if a.n() != b.n() || a.degree_sequence() != b.degree_sequence() {
        return vec![];
    }
    let n = a.n();
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        a: &SignedGraph,
        b: &SignedGraph,
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = a.n();
        if v == n {
            out.push(map.clone());
            return;
        }
        for target in 0..n {
            if used[target] || a.degree(v) != b.degree(target) {
                continue;
            }
            let ok = (0..v).all(|u| a.sign(u, v) == b.sign(map[u], target));
            if ok {
                map[v] = target;
                used[target] = true;
                rec(a, b, v + 1, map, used, out);
                used[target] = false;
                map[v] = usize::MAX;
            }
        }
    }
    rec(a, b, 0, &mut map, &mut used, &mut out);
    out
}

/// Compares two graphs by their canonical switching-class encodings.
pub fn cmp_by_canonical(a: &SignedGraph, b: &SignedGraph) -> Ordering {
    a.canonical_signed_form().0.encode().cmp(&b.canonical_signed_form().0.encode())
}

// Small constructors used across the crate and its tests.

pub fn path(n: usize) -> SignedGraph {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1, 1)).collect();
    SignedGraph::with_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> SignedGraph {
    assert!(n >= 3);
    let mut edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1, 1)).collect();
    edges.push((n - 1, 0, 1));
    SignedGraph::with_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> SignedGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v, 1));
        }
    }
    SignedGraph::with_edges(n, &edges).unwrap()
}

pub fn star(leaves: usize) -> SignedGraph {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v, 1)).collect();
    SignedGraph::with_edges(leaves + 1, &edges).unwrap()
}
