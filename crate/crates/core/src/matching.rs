//! Maximum-weight matching on general graphs.
//!
//! The solver follows the primal-dual blossom method as presented by Galil
//! ("Efficient Algorithms for Finding Maximum Matching in Graphs", ACM
//! Computing Surveys, 1986) in the O(n^3) formulation popularized by Joris
//! van Rantwijk's reference implementation. Weights are non-negative
//! integers; callers that need fractional weights pre-scale them (see the
//! equimatchability pipeline). In debug builds every solve is checked
//! against the dual certificate before returning.

use crate::error::{Error, Result};
use crate::graph::{Graph, Matching};

const NONE: usize = usize::MAX;

/// Returns a matching of maximum total weight. Zero-weight edges may be
/// left out: only the weight is optimal, not the cardinality.
pub fn max_weight_matching(g: &Graph, weights: &[i64]) -> Result<Matching> {
    if weights.len() != g.m() {
        return Err(Error::DimensionMismatch {
            expected: g.m(),
            got: weights.len(),
        });
    }
    if let Some((edge, &weight)) = weights.iter().enumerate().find(|(_, &w)| w < 0) {
        return Err(Error::NegativeWeight { edge, weight });
    }
    if g.m() == 0 {
        return Ok(Matching::empty());
    }
    let mate = Solver::new(g, weights).solve();
    let mut edges = Vec::new();
    for v in 0..g.n() {
        let w = mate[v];
        if w != NONE && v < w {
            edges.push(g.edge_index(v, w).expect("mate pairs are edges"));
        }
    }
    Matching::new(g, edges)
}

/// Greedily grows `m` to a maximal matching, scanning edges in canonical
/// order. Idempotent on already-maximal inputs.
pub fn extend_to_maximal(g: &Graph, m: &Matching) -> Matching {
    let mut covered = vec![false; g.n()];
    for &i in m.edge_indices() {
        let (u, v) = g.edge(i);
        covered[u] = true;
        covered[v] = true;
    }
    let mut edges: Vec<usize> = m.edge_indices().to_vec();
    for i in 0..g.m() {
        let (u, v) = g.edge(i);
        if !covered[u] && !covered[v] {
            covered[u] = true;
            covered[v] = true;
            edges.push(i);
        }
    }
    Matching::new(g, edges).expect("greedy extension keeps the matching property")
}

/// Scratch state for one solve. Vertices are 0..n-1; non-trivial blossoms
/// are numbered n..2n-1. Edge k has endpoints 2k and 2k+1; `endpoint[p]`
/// is the vertex endpoint p is attached to.
struct Solver<'a> {
    n: usize,
    m: usize,
    edges: &'a [(usize, usize)],
    weights: &'a [i64],
    endpoint: Vec<usize>,
    neighbend: Vec<Vec<usize>>,
    mate: Vec<usize>,
    label: Vec<u8>,
    labelend: Vec<usize>,
    inblossom: Vec<usize>,
    blossomparent: Vec<usize>,
    blossomchilds: Vec<Vec<usize>>,
    blossombase: Vec<usize>,
    blossomendps: Vec<Vec<usize>>,
    bestedge: Vec<usize>,
    blossombestedges: Vec<Option<Vec<usize>>>,
    unusedblossoms: Vec<usize>,
    dualvar: Vec<i64>,
    allowedge: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, weights: &'a [i64]) -> Self {
        let n = g.n();
        let m = g.m();
        let edges = g.edges();
        let maxweight = weights.iter().copied().max().unwrap_or(0);
        let endpoint = (0..2 * m)
            .map(|p| if p % 2 == 0 { edges[p / 2].0 } else { edges[p / 2].1 })
            .collect();
        let mut neighbend = vec![Vec::new(); n];
        for (k, &(i, j)) in edges.iter().enumerate() {
            neighbend[i].push(2 * k + 1);
            neighbend[j].push(2 * k);
        }
        let mut blossombase: Vec<usize> = (0..n).collect();
        blossombase.extend(std::iter::repeat(NONE).take(n));
        let mut dualvar = vec![maxweight; n];
        dualvar.extend(std::iter::repeat(0).take(n));
        Solver {
            n,
            m,
            edges,
            weights,
            endpoint,
            neighbend,
            mate: vec![NONE; n],
            label: vec![0; 2 * n],
            labelend: vec![NONE; 2 * n],
            inblossom: (0..n).collect(),
            blossomparent: vec![NONE; 2 * n],
            blossomchilds: vec![Vec::new(); 2 * n],
            blossombase,
            blossomendps: vec![Vec::new(); 2 * n],
            bestedge: vec![NONE; 2 * n],
            blossombestedges: vec![None; 2 * n],
            unusedblossoms: (n..2 * n).collect(),
            dualvar,
            allowedge: vec![false; m],
            queue: Vec::new(),
        }
    }

    /// 2 * slack of edge k (not meaningful inside blossoms).
    fn slack(&self, k: usize) -> i64 {
        let (i, j) = self.edges[k];
        self.dualvar[i] + self.dualvar[j] - 2 * self.weights[k]
    }

    fn blossom_leaves(&self, b: usize, out: &mut Vec<usize>) {
        if b < self.n {
            out.push(b);
        } else {
            for &child in &self.blossomchilds[b] {
                self.blossom_leaves(child, out);
            }
        }
    }

    fn leaves(&self, b: usize) -> Vec<usize> {
        let mut out = Vec::new();
        self.blossom_leaves(b, &mut out);
        out
    }

    /// Label the top-level blossom containing w with t, reached through the
    /// edge with remote endpoint p.
    fn assign_label(&mut self, w: usize, t: u8, p: usize) {
        let b = self.inblossom[w];
        assert!(self.label[w] == 0 && self.label[b] == 0);
        self.label[w] = t;
        self.label[b] = t;
        self.labelend[w] = p;
        self.labelend[b] = p;
        self.bestedge[w] = NONE;
        self.bestedge[b] = NONE;
        if t == 1 {
            // S-blossom: scan its vertices.
            let mut l = self.leaves(b);
            self.queue.append(&mut l);
        } else if t == 2 {
            // T-blossom: its base's mate becomes an S-vertex.
            let base = self.blossombase[b];
            assert!(self.mate[base] != NONE);
            let mbase = self.mate[base];
            self.assign_label(self.endpoint[mbase], 1, mbase ^ 1);
        }
    }

    /// Trace back from v and w; returns the base of a new blossom, or NONE
    /// if an augmenting path was found instead.
    fn scan_blossom(&mut self, v: usize, w: usize) -> usize {
        let mut path = Vec::new();
        let mut base = NONE;
        let mut v = v;
        let mut w = w;
        while v != NONE || w != NONE {
            let mut b = self.inblossom[v];
            if self.label[b] & 4 != 0 {
                base = self.blossombase[b];
                break;
            }
            assert_eq!(self.label[b], 1);
            path.push(b);
            self.label[b] = 5;
            assert_eq!(self.labelend[b], self.mate[self.blossombase[b]]);
            if self.labelend[b] == NONE {
                // Base of b is single; this path ends here.
                v = NONE;
            } else {
                v = self.endpoint[self.labelend[b]];
                b = self.inblossom[v];
                assert_eq!(self.label[b], 2);
                assert!(self.labelend[b] != NONE);
                v = self.endpoint[self.labelend[b]];
            }
            if w != NONE {
                std::mem::swap(&mut v, &mut w);
            }
        }
        for b in path {
            self.label[b] = 1;
        }
        base
    }

    /// Create a new blossom with the given base, through edge k joining two
    /// S-blossoms.
    fn add_blossom(&mut self, base: usize, k: usize) {
        let (mut v, mut w) = self.edges[k];
        let bb = self.inblossom[base];
        let mut bv = self.inblossom[v];
        let mut bw = self.inblossom[w];
        let b = self.unusedblossoms.pop().expect("blossom numbers available");
        self.blossombase[b] = base;
        self.blossomparent[b] = NONE;
        self.blossomparent[bb] = b;
        let mut childs = Vec::new();
        let mut endps = Vec::new();
        while bv != bb {
            self.blossomparent[bv] = b;
            childs.push(bv);
            endps.push(self.labelend[bv]);
            assert!(
                self.label[bv] == 2
                    || (self.label[bv] == 1
                        && self.labelend[bv] == self.mate[self.blossombase[bv]])
            );
            assert!(self.labelend[bv] != NONE);
            v = self.endpoint[self.labelend[bv]];
            bv = self.inblossom[v];
        }
        childs.push(bb);
        childs.reverse();
        endps.reverse();
        endps.push(2 * k);
        while bw != bb {
            self.blossomparent[bw] = b;
            childs.push(bw);
            endps.push(self.labelend[bw] ^ 1);
            assert!(
                self.label[bw] == 2
                    || (self.label[bw] == 1
                        && self.labelend[bw] == self.mate[self.blossombase[bw]])
            );
            assert!(self.labelend[bw] != NONE);
            w = self.endpoint[self.labelend[bw]];
            bw = self.inblossom[w];
        }
        assert_eq!(self.label[bb], 1);
        self.label[b] = 1;
        self.labelend[b] = self.labelend[bb];
        self.dualvar[b] = 0;
        self.blossomchilds[b] = childs;
        self.blossomendps[b] = endps;
        for v in self.leaves(b) {
            if self.label[self.inblossom[v]] == 2 {
                // Former T-vertex becomes S through the new blossom.
                self.queue.push(v);
            }
            self.inblossom[v] = b;
        }
        // Recompute least-slack edges to neighbouring S-blossoms.
        let mut bestedgeto = vec![NONE; 2 * self.n];
        for bv in self.blossomchilds[b].clone() {
            let nblists: Vec<Vec<usize>> = match self.blossombestedges[bv].take() {
                Some(list) => vec![list],
                None => self
                    .leaves(bv)
                    .iter()
                    .map(|&v| self.neighbend[v].iter().map(|&p| p / 2).collect())
                    .collect(),
            };
            for nblist in nblists {
                for k in nblist {
                    let (mut i, mut j) = self.edges[k];
                    if self.inblossom[j] == b {
                        std::mem::swap(&mut i, &mut j);
                    }
                    let bj = self.inblossom[j];
                    if bj != b
                        && self.label[bj] == 1
                        && (bestedgeto[bj] == NONE || self.slack(k) < self.slack(bestedgeto[bj]))
                    {
                        bestedgeto[bj] = k;
                    }
                }
            }
            self.bestedge[bv] = NONE;
        }
        let best: Vec<usize> = bestedgeto.into_iter().filter(|&k| k != NONE).collect();
        self.bestedge[b] = NONE;
        for &k in &best {
            if self.bestedge[b] == NONE || self.slack(k) < self.slack(self.bestedge[b]) {
                self.bestedge[b] = k;
            }
        }
        self.blossombestedges[b] = Some(best);
    }

    /// Expand blossom b, turning its children into top-level blossoms.
    fn expand_blossom(&mut self, b: usize, endstage: bool) {
        for s in self.blossomchilds[b].clone() {
            self.blossomparent[s] = NONE;
            if s < self.n {
                self.inblossom[s] = s;
            } else if endstage && self.dualvar[s] == 0 {
                self.expand_blossom(s, endstage);
            } else {
                for v in self.leaves(s) {
                    self.inblossom[v] = s;
                }
            }
        }
        // A T-blossom expanded mid-stage needs its children relabeled.
        if !endstage && self.label[b] == 2 {
            assert!(self.labelend[b] != NONE);
            let entrychild = self.inblossom[self.endpoint[self.labelend[b] ^ 1]];
            let mut j = self.blossomchilds[b]
                .iter()
                .position(|&c| c == entrychild)
                .expect("entry child present") as i32;
            let (jstep, endptrick): (i32, usize) = if j & 1 != 0 {
                j -= self.blossomchilds[b].len() as i32;
                (1, 0)
            } else {
                (-1, 1)
            };
            let mut p = self.labelend[b];
            while j != 0 {
                // Relabel the T-sub-blossom.
                self.label[self.endpoint[p ^ 1]] = 0;
                let q = at(&self.blossomendps[b], j - endptrick as i32) ^ endptrick ^ 1;
                self.label[self.endpoint[q]] = 0;
                let ep = self.endpoint[p ^ 1];
                self.assign_label(ep, 2, p);
                // Step to the next S-sub-blossom and note its forward endpoint.
                self.allowedge[at(&self.blossomendps[b], j - endptrick as i32) / 2] = true;
                j += jstep;
                p = at(&self.blossomendps[b], j - endptrick as i32) ^ endptrick;
                // Step to the next T-sub-blossom.
                self.allowedge[p / 2] = true;
                j += jstep;
            }
            // Relabel the base T-sub-blossom without stepping to its mate.
            let bv = at(&self.blossomchilds[b], j);
            self.label[self.endpoint[p ^ 1]] = 2;
            self.label[bv] = 2;
            self.labelend[self.endpoint[p ^ 1]] = p;
            self.labelend[bv] = p;
            self.bestedge[bv] = NONE;
            // Continue along the blossom until back at entrychild.
            j += jstep;
            while at(&self.blossomchilds[b], j) != entrychild {
                let bv = at(&self.blossomchilds[b], j);
                if self.label[bv] == 1 {
                    j += jstep;
                    continue;
                }
                let mut v = NONE;
                for leaf in self.leaves(bv) {
                    v = leaf;
                    if self.label[v] != 0 {
                        break;
                    }
                }
                if v != NONE && self.label[v] != 0 {
                    assert_eq!(self.label[v], 2);
                    assert_eq!(self.inblossom[v], bv);
                    self.label[v] = 0;
                    self.label[self.endpoint[self.mate[self.blossombase[bv]]]] = 0;
                    let lblend = self.labelend[v];
                    self.assign_label(v, 2, lblend);
                }
                j += jstep;
            }
        }
        self.label[b] = 0;
        self.labelend[b] = NONE;
        self.blossombase[b] = NONE;
        self.bestedge[b] = NONE;
        self.blossomchilds[b].clear();
        self.blossomendps[b].clear();
        self.blossombestedges[b] = None;
        self.unusedblossoms.push(b);
    }

    /// Swap matched/unmatched edges along the path from v to the base of
    /// blossom b, and rotate the blossom so v becomes the base.
    fn augment_blossom(&mut self, b: usize, v: usize) {
        let mut t = v;
        while self.blossomparent[t] != b {
            t = self.blossomparent[t];
        }
        if t >= self.n {
            self.augment_blossom(t, v);
        }
        let i = self.blossomchilds[b]
            .iter()
            .position(|&c| c == t)
            .expect("t is a child of b");
        let mut j = i as i32;
        let (jstep, endptrick): (i32, usize) = if i & 1 != 0 {
            j -= self.blossomchilds[b].len() as i32;
            (1, 0)
        } else {
            (-1, 1)
        };
        while j != 0 {
            j += jstep;
            let mut t = at(&self.blossomchilds[b], j);
            let p = at(&self.blossomendps[b], j - endptrick as i32) ^ endptrick;
            if t >= self.n {
                self.augment_blossom(t, self.endpoint[p]);
            }
            j += jstep;
            t = at(&self.blossomchilds[b], j);
            if t >= self.n {
                self.augment_blossom(t, self.endpoint[p ^ 1]);
            }
            self.mate[self.endpoint[p]] = p ^ 1;
            self.mate[self.endpoint[p ^ 1]] = p;
        }
        self.blossomchilds[b].rotate_left(i);
        self.blossomendps[b].rotate_left(i);
        self.blossombase[b] = self.blossombase[self.blossomchilds[b][0]];
        assert_eq!(self.blossombase[b], v);
    }

    /// Augment along the path through edge k, which joins two S-vertices.
    fn augment_matching(&mut self, k: usize) {
        let (v, w) = self.edges[k];
        for (mut s, mut p) in [(v, 2 * k + 1), (w, 2 * k)] {
            loop {
                let bs = self.inblossom[s];
                assert_eq!(self.label[bs], 1);
                assert_eq!(self.labelend[bs], self.mate[self.blossombase[bs]]);
                if bs >= self.n {
                    self.augment_blossom(bs, s);
                }
                self.mate[s] = p;
                if self.labelend[bs] == NONE {
                    // Reached a single vertex.
                    break;
                }
                let t = self.endpoint[self.labelend[bs]];
                let bt = self.inblossom[t];
                assert_eq!(self.label[bt], 2);
                assert!(self.labelend[bt] != NONE);
                s = self.endpoint[self.labelend[bt]];
                let j = self.endpoint[self.labelend[bt] ^ 1];
                assert_eq!(self.blossombase[bt], t);
                if bt >= self.n {
                    self.augment_blossom(bt, j);
                }
                self.mate[j] = self.labelend[bt];
                p = self.labelend[bt] ^ 1;
            }
        }
    }

    /// Dual certificate: feasibility plus complementary slackness.
    fn verify_optimum(&self) {
        assert!(self.dualvar[..self.n].iter().all(|&d| d >= 0));
        assert!(self.dualvar[self.n..].iter().all(|&d| d >= 0));
        for k in 0..self.m {
            let (i, j) = self.edges[k];
            let mut s = self.dualvar[i] + self.dualvar[j] - 2 * self.weights[k];
            let mut iblossoms = vec![i];
            let mut jblossoms = vec![j];
            while self.blossomparent[*iblossoms.last().unwrap()] != NONE {
                iblossoms.push(self.blossomparent[*iblossoms.last().unwrap()]);
            }
            while self.blossomparent[*jblossoms.last().unwrap()] != NONE {
                jblossoms.push(self.blossomparent[*jblossoms.last().unwrap()]);
            }
            iblossoms.reverse();
            jblossoms.reverse();
            for (&bi, &bj) in iblossoms.iter().zip(jblossoms.iter()) {
                if bi != bj {
                    break;
                }
                s += 2 * self.dualvar[bi];
            }
            assert!(s >= 0);
            if self.mate[i] / 2 == k || self.mate[j] / 2 == k {
                assert!(self.mate[i] / 2 == k && self.mate[j] / 2 == k);
                assert_eq!(s, 0);
            }
        }
        for v in 0..self.n {
            assert!(self.mate[v] != NONE || self.dualvar[v] == 0);
        }
        for b in self.n..2 * self.n {
            if self.blossombase[b] != NONE && self.dualvar[b] > 0 {
                assert!(self.blossomendps[b].len() % 2 == 1);
                for (ix, &p) in self.blossomendps[b].iter().enumerate() {
                    if ix % 2 == 1 {
                        assert_eq!(self.mate[self.endpoint[p]], p ^ 1);
                        assert_eq!(self.mate[self.endpoint[p ^ 1]], p);
                    }
                }
            }
        }
    }

    fn solve(mut self) -> Vec<usize> {
        for _stage in 0..self.n {
            self.label = vec![0; 2 * self.n];
            self.bestedge = vec![NONE; 2 * self.n];
            for entry in &mut self.blossombestedges[self.n..] {
                *entry = None;
            }
            self.allowedge = vec![false; self.m];
            self.queue.clear();
            for v in 0..self.n {
                if self.mate[v] == NONE && self.label[self.inblossom[v]] == 0 {
                    self.assign_label(v, 1, NONE);
                }
            }
            let mut augmented = false;
            loop {
                while let Some(v) = self.queue.pop() {
                    assert_eq!(self.label[self.inblossom[v]], 1);
                    let mut found_augmenting = false;
                    for p in self.neighbend[v].clone() {
                        let k = p / 2;
                        let w = self.endpoint[p];
                        if self.inblossom[v] == self.inblossom[w] {
                            continue;
                        }
                        let mut kslack = 0;
                        if !self.allowedge[k] {
                            kslack = self.slack(k);
                            if kslack <= 0 {
                                self.allowedge[k] = true;
                            }
                        }
                        if self.allowedge[k] {
                            if self.label[self.inblossom[w]] == 0 {
                                self.assign_label(w, 2, p ^ 1);
                            } else if self.label[self.inblossom[w]] == 1 {
                                let base = self.scan_blossom(v, w);
                                if base != NONE {
                                    self.add_blossom(base, k);
                                } else {
                                    self.augment_matching(k);
                                    augmented = true;
                                    found_augmenting = true;
                                    break;
                                }
                            } else if self.label[w] == 0 {
                                assert_eq!(self.label[self.inblossom[w]], 2);
                                self.label[w] = 2;
                                self.labelend[w] = p ^ 1;
                            }
                        } else if self.label[self.inblossom[w]] == 1 {
                            let b = self.inblossom[v];
                            if self.bestedge[b] == NONE
                                || kslack < self.slack(self.bestedge[b])
                            {
                                self.bestedge[b] = k;
                            }
                        } else if self.label[w] == 0
                            && (self.bestedge[w] == NONE
                                || kslack < self.slack(self.bestedge[w]))
                        {
                            self.bestedge[w] = k;
                        }
                    }
                    if found_augmenting {
                        break;
                    }
                }
                if augmented {
                    break;
                }

                // No augmenting path under the current duals: compute the
                // tightest delta and pump slack out of the dual problem.
                let mut deltatype = 1;
                let mut delta = *self.dualvar[..self.n].iter().min().expect("n > 0");
                let mut deltaedge = NONE;
                let mut deltablossom = NONE;
                for v in 0..self.n {
                    if self.label[self.inblossom[v]] == 0 && self.bestedge[v] != NONE {
                        let d = self.slack(self.bestedge[v]);
                        if d < delta {
                            delta = d;
                            deltatype = 2;
                            deltaedge = self.bestedge[v];
                        }
                    }
                }
                for b in 0..2 * self.n {
                    if self.blossomparent[b] == NONE
                        && self.label[b] == 1
                        && self.bestedge[b] != NONE
                    {
                        let kslack = self.slack(self.bestedge[b]);
                        // Integer weights keep S-S slacks even.
                        debug_assert_eq!(kslack % 2, 0);
                        let d = kslack / 2;
                        if d < delta {
                            delta = d;
                            deltatype = 3;
                            deltaedge = self.bestedge[b];
                        }
                    }
                }
                for b in self.n..2 * self.n {
                    if self.blossombase[b] != NONE
                        && self.blossomparent[b] == NONE
                        && self.label[b] == 2
                        && self.dualvar[b] < delta
                    {
                        delta = self.dualvar[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                for v in 0..self.n {
                    match self.label[self.inblossom[v]] {
                        0 => {}
                        1 => self.dualvar[v] -= delta,
                        2 => self.dualvar[v] += delta,
                        _ => unreachable!("labels are 0, 1 or 2"),
                    }
                }
                for b in self.n..2 * self.n {
                    if self.blossombase[b] != NONE && self.blossomparent[b] == NONE {
                        match self.label[b] {
                            0 => {}
                            1 => self.dualvar[b] += delta,
                            2 => self.dualvar[b] -= delta,
                            _ => unreachable!("labels are 0, 1 or 2"),
                        }
                    }
                }
                match deltatype {
                    1 => break, // optimum reached
                    2 => {
                        self.allowedge[deltaedge] = true;
                        let (mut i, j) = self.edges[deltaedge];
                        if self.label[self.inblossom[i]] == 0 {
                            i = j;
                        }
                        assert_eq!(self.label[self.inblossom[i]], 1);
                        self.queue.push(i);
                    }
                    3 => {
                        self.allowedge[deltaedge] = true;
                        let (i, _) = self.edges[deltaedge];
                        assert_eq!(self.label[self.inblossom[i]], 1);
                        self.queue.push(i);
                    }
                    4 => self.expand_blossom(deltablossom, false),
                    _ => unreachable!(),
                }
            }
            if !augmented {
                break;
            }
            // End of stage: expand S-blossoms whose dual dropped to zero.
            for b in self.n..2 * self.n {
                if self.blossomparent[b] == NONE
                    && self.blossombase[b] != NONE
                    && self.label[b] == 1
                    && self.dualvar[b] == 0
                {
                    self.expand_blossom(b, true);
                }
            }
        }
        if cfg!(debug_assertions) {
            self.verify_optimum();
        }
        let mut mate = self.mate;
        for v in 0..self.n {
            if mate[v] != NONE {
                mate[v] = self.endpoint[mate[v]];
            }
        }
        for v in 0..self.n {
            assert!(mate[v] == NONE || mate[mate[v]] == v);
        }
        mate
    }
}

/// Python-style indexing: negative indices wrap from the end.
fn at(v: &[usize], index: i32) -> usize {
    if index >= 0 {
        v[index as usize]
    } else {
        v[v.len() - (-index) as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::oracle;
    use rand::Rng;

    fn solve(n: usize, weighted_edges: &[(usize, usize, i64)]) -> (Matching, i64) {
        let g = Graph::new(n, weighted_edges.iter().map(|&(u, v, _)| (u, v))).unwrap();
        let mut weights = vec![0i64; g.m()];
        for &(u, v, w) in weighted_edges {
            weights[g.edge_index(u, v).unwrap()] = w;
        }
        let m = max_weight_matching(&g, &weights).unwrap();
        let total = m.edge_indices().iter().map(|&i| weights[i]).sum();
        (m, total)
    }

    #[test]
    fn triangle_takes_the_heavy_edge() {
        let (m, total) = solve(3, &[(0, 1, 5), (0, 2, 1), (1, 2, 1)]);
        assert_eq!(total, 5);
        assert_eq!(m.len(), 1);
    }

    #[test]
    fn middle_edge_beats_two_light_ends() {
        let (_, total) = solve(4, &[(0, 1, 1), (1, 2, 3), (2, 3, 1)]);
        assert_eq!(total, 3);
    }

    #[test]
    fn c4_unit_weights_perfect_matching() {
        let (m, total) = solve(4, &[(0, 1, 1), (1, 2, 1), (2, 3, 1), (0, 3, 1)]);
        assert_eq!(total, 2);
        assert_eq!(m.len(), 2);
    }

    #[test]
    fn odd_cycles_force_blossoms() {
        for k in 1..=5 {
            let n = 2 * k + 1;
            let g = corpus::cycle_graph(n);
            let m = max_weight_matching(&g, &vec![1; n]).unwrap();
            assert_eq!(m.len(), k, "C_{n} optimum");
        }
    }

    #[test]
    fn rejects_negative_weights() {
        let g = corpus::path_graph(3);
        assert!(matches!(
            max_weight_matching(&g, &[1, -2]),
            Err(Error::NegativeWeight { edge: 1, weight: -2 })
        ));
        assert!(max_weight_matching(&g, &[1]).is_err());
    }

    #[test]
    fn empty_and_edgeless_graphs() {
        let g = Graph::new(0, []).unwrap();
        assert!(max_weight_matching(&g, &[]).unwrap().is_empty());
        let g = Graph::new(3, []).unwrap();
        assert!(max_weight_matching(&g, &[]).unwrap().is_empty());
    }

    // Structured instances exercising blossom creation, relabeling and
    // expansion (van Rantwijk's classic vectors, shifted to 0-based).
    #[test]
    fn blossom_stress_instances() {
        let cases: Vec<(usize, Vec<(usize, usize, i64)>, i64)> = vec![
            // create S-blossom and use it for augmentation
            (4, vec![(0, 1, 8), (0, 2, 9), (1, 2, 10), (2, 3, 7)], 15),
            (
                6,
                vec![(0, 1, 8), (0, 2, 9), (1, 2, 10), (2, 3, 7), (0, 5, 5), (3, 4, 6)],
                21,
            ),
            // S-blossom, relabel as T-blossom, use for augmentation
            (
                6,
                vec![(0, 1, 9), (0, 2, 8), (1, 2, 10), (0, 3, 5), (3, 4, 4), (0, 5, 3)],
                17,
            ),
            (
                6,
                vec![(0, 1, 9), (0, 2, 8), (1, 2, 10), (0, 3, 5), (3, 4, 3), (0, 5, 4)],
                17,
            ),
            (
                6,
                vec![(0, 1, 9), (0, 2, 8), (1, 2, 10), (0, 3, 5), (3, 4, 3), (2, 5, 4)],
                16,
            ),
            // nested S-blossom, use for augmentation
            (
                6,
                vec![
                    (0, 1, 9),
                    (0, 2, 9),
                    (1, 2, 10),
                    (1, 3, 8),
                    (2, 4, 8),
                    (3, 4, 10),
                    (4, 5, 6),
                ],
                23,
            ),
            // S-blossom, relabel as T, expand
            (
                8,
                vec![
                    (0, 1, 23),
                    (0, 4, 22),
                    (0, 5, 15),
                    (1, 2, 25),
                    (2, 3, 22),
                    (3, 4, 25),
                    (3, 7, 14),
                    (4, 6, 13),
                ],
                67,
            ),
            // nested S-blossom, relabel as T, expand
            (
                8,
                vec![
                    (0, 1, 19),
                    (0, 2, 20),
                    (0, 7, 8),
                    (1, 2, 25),
                    (1, 3, 18),
                    (2, 4, 18),
                    (3, 4, 13),
                    (3, 6, 7),
                    (4, 5, 7),
                ],
                47,
            ),
        ];
        for (n, edges, expected) in cases {
            let (m, total) = solve(n, &edges);
            assert_eq!(total, expected, "instance {edges:?}");
            let g = Graph::new(n, edges.iter().map(|&(u, v, _)| (u, v))).unwrap();
            assert!(g.is_matching(m.edge_indices()));
        }
    }

    #[test]
    fn matches_brute_force_on_random_graphs() {
        let mut rng = corpus::seeded_rng(0xB10550);
        for _ in 0..60 {
            let n = rng.gen_range(2..=8);
            let g = corpus::random_graph(n, 0.5, &mut rng);
            let weights: Vec<i64> = (0..g.m()).map(|_| rng.gen_range(0..=20)).collect();
            let m = max_weight_matching(&g, &weights).unwrap();
            let got: i64 = m.edge_indices().iter().map(|&i| weights[i]).sum();
            let best = oracle::all_matchings(&g)
                .into_iter()
                .map(|mm| mm.iter().map(|&i| weights[i]).sum::<i64>())
                .max()
                .unwrap_or(0);
            assert_eq!(got, best, "graph {:?} weights {weights:?}", g.edges());
        }
    }

    #[test]
    fn extend_to_maximal_examples() {
        let p4 = corpus::path_graph(4);
        let m = extend_to_maximal(&p4, &Matching::empty());
        assert_eq!(
            m.edge_indices(),
            &[p4.edge_index(0, 1).unwrap(), p4.edge_index(2, 3).unwrap()]
        );
        let c4 = corpus::cycle_graph(4);
        let start = Matching::new(&c4, [c4.edge_index(0, 1).unwrap()]).unwrap();
        let m = extend_to_maximal(&c4, &start);
        assert!(m.contains(c4.edge_index(0, 1).unwrap()));
        assert!(m.contains(c4.edge_index(2, 3).unwrap()));
        // Idempotence on maximal inputs.
        let again = extend_to_maximal(&c4, &m);
        assert_eq!(again, m);
    }

    #[test]
    fn extension_is_always_maximal_and_a_superset() {
        let mut rng = corpus::seeded_rng(17);
        for _ in 0..40 {
            let n = rng.gen_range(2..=8);
            let g = corpus::random_graph(n, 0.4, &mut rng);
            let m = max_weight_matching(&g, &vec![1; g.m()]).unwrap();
            let ext = extend_to_maximal(&g, &m);
            assert!(ext.is_maximal(&g));
            assert!(m.edge_indices().iter().all(|i| ext.contains(*i)));
        }
    }
}
