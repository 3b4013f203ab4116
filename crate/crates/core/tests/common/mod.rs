//! Generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wltl_core::automata::{Buchi, Muller, Rabin, RabinPair, Sym, Ts, Wba};
use wltl_core::logic::{classify, Formula};
use wltl_core::monoid::{ExtRat, Monoid, OmegaMonoid, WeightSeq};
use wltl_core::semantics::{Lasso, Letter};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn aps(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn lasso(s: &str) -> Lasso {
    s.parse().unwrap()
}

pub fn random_letter(r: &mut impl Rng, aps: &[String]) -> Letter {
    aps.iter().filter(|_| r.gen_bool(0.5)).cloned().collect()
}

/// A lasso with prefix and cycle lengths at most 4.
pub fn random_lasso(r: &mut impl Rng, aps: &[String]) -> Lasso {
    let p = r.gen_range(0..=4);
    let c = r.gen_range(1..=4);
    Lasso::new((0..p).map(|_| random_letter(r, aps)).collect(), (0..c).map(|_| random_letter(r, aps)).collect())
}

pub fn random_ts(r: &mut impl Rng, n: usize, aps: &[String], density: f64) -> Ts {
    let mut ts = Ts::new(aps.to_vec()).unwrap();
    for i in 0..n {
        ts.add_state(format!("q{i}"));
    }
    for p in 0..n {
        for a in 0..ts.num_letters() as Sym {
            for q in 0..n {
                if r.gen_bool(density) {
                    ts.add_edge(p, a, q);
                }
            }
        }
    }
    ts
}

fn random_mask(r: &mut impl Rng, n: usize, p: f64) -> Vec<bool> {
    (0..n).map(|_| r.gen_bool(p)).collect()
}

pub fn random_buchi(r: &mut impl Rng, n: usize, aps: &[String]) -> Buchi {
    let ts = random_ts(r, n, aps, 0.3);
    let mut init: Vec<usize> = (0..n).filter(|_| r.gen_bool(0.3)).collect();
    if init.is_empty() {
        init.push(0);
    }
    Buchi { ts, init, fin: random_mask(r, n, 0.4) }
}

pub fn random_muller(r: &mut impl Rng, n: usize, aps: &[String]) -> Muller {
    let ts = random_ts(r, n, aps, 0.35);
    let s = random_mask(r, n, 0.7);
    let f1 = (0..n).map(|i| s[i] && r.gen_bool(0.5)).collect();
    let f2 = (0..n).map(|i| s[i] && r.gen_bool(0.5)).collect();
    Muller { ts, init: 0, f1, f2, s }
}

pub fn random_rabin(r: &mut impl Rng, n: usize, aps: &[String]) -> Rabin {
    let ts = random_ts(r, n, aps, 0.35);
    let pairs = (0..r.gen_range(1..=3))
        .map(|_| RabinPair {
            avoid: random_mask(r, n, 0.25),
            visit: (0..r.gen_range(1..=2)).map(|_| random_mask(r, n, 0.4)).collect(),
        })
        .collect();
    Rabin { ts, init: 0, pairs }
}

pub const WEIGHT_POOL: [i64; 4] = [1, 2, 3, 5];

pub fn random_weight(r: &mut impl Rng) -> ExtRat {
    if r.gen_bool(0.2) {
        ExtRat::PosInf
    } else {
        ExtRat::int(*WEIGHT_POOL.choose(r).unwrap())
    }
}

pub fn random_wba(r: &mut impl Rng, m: Monoid, n: usize, aps: &[String]) -> Wba {
    let mut a = Wba::new(m, aps.to_vec()).unwrap();
    for i in 0..n {
        a.add_state(format!("q{i}"), r.gen_bool(0.4));
    }
    let letters = 1u32 << aps.len();
    for p in 0..n {
        for s in 0..letters {
            for q in 0..n {
                if r.gen_bool(0.3) {
                    a.set_weight(p, s, q, random_weight(r));
                }
            }
        }
    }
    a.init = (0..n).filter(|_| r.gen_bool(0.35)).collect();
    if a.init.is_empty() {
        a.init.push(0);
    }
    a
}

/// Transitive closure of an adjacency matrix, in place.
fn warshall(c: &mut [Vec<bool>]) {
    for m in 0..c.len() {
        let via = c[m].clone();
        for row in c.iter_mut().filter(|row| row[m]) {
            row.iter_mut().zip(&via).for_each(|(x, &y)| *x |= y);
        }
    }
}

/// Nodes of the product of a transition structure with a lasso, with a
/// transitive-closure matrix. Independent of the library's graph code.
struct Product {
    n: usize,
    edges: Vec<Vec<usize>>,
    closure: Vec<Vec<bool>>,
}

impl Product {
    fn new(ts: &Ts, w: &Lasso) -> Product {
        let k = w.positions();
        let n = ts.num_states() * k;
        let mut edges = vec![Vec::new(); n];
        for q in 0..ts.num_states() {
            for i in 0..k {
                if let Some(a) = ts.sym(w.at(i)) {
                    for &q2 in ts.succ(q, a) {
                        edges[q * k + i].push(q2 * k + w.next(i));
                    }
                }
            }
        }
        let mut closure = vec![vec![false; n]; n];
        for (v, es) in edges.iter().enumerate() {
            for &u in es {
                closure[v][u] = true;
            }
        }
        warshall(&mut closure);
        Product { n, edges, closure }
    }

    fn reachable_from(&self, starts: &[usize]) -> Vec<bool> {
        (0..self.n).map(|v| starts.iter().any(|&s| s == v || self.closure[s][v])).collect()
    }

    /// Is there a cycle within `allowed` that meets every set in `visits`,
    /// reachable from the starts? Checked per candidate SCC via the closure
    /// matrix restricted to `allowed`.
    fn fair(&self, starts: &[usize], allowed: &[bool], visits: &[Vec<bool>]) -> bool {
        let reach = self.reachable_from(starts);
        // Closure inside `allowed` only.
        let n = self.n;
        let mut c = vec![vec![false; n]; n];
        for v in (0..n).filter(|&v| allowed[v]) {
            for &u in &self.edges[v] {
                if allowed[u] {
                    c[v][u] = true;
                }
            }
        }
        warshall(&mut c);
        (0..n).any(|v| {
            reach[v] && allowed[v] && c[v][v] && visits.iter().all(|set| (0..n).any(|u| set[u] && c[v][u] && c[u][v]))
        })
    }
}

fn lift(ts: &Ts, w: &Lasso, states: &[bool]) -> Vec<bool> {
    let k = w.positions();
    (0..ts.num_states() * k).map(|v| states[v / k]).collect()
}

pub fn oracle_buchi(b: &Buchi, w: &Lasso) -> bool {
    let p = Product::new(&b.ts, w);
    let starts: Vec<usize> = b.init.iter().map(|&q| q * w.positions()).collect();
    p.fair(&starts, &vec![true; p.n], &[lift(&b.ts, w, &b.fin)])
}

pub fn oracle_muller(m: &Muller, w: &Lasso) -> bool {
    let p = Product::new(&m.ts, w);
    p.fair(&[m.init * w.positions()], &lift(&m.ts, w, &m.s), &[lift(&m.ts, w, &m.f1), lift(&m.ts, w, &m.f2)])
}

pub fn oracle_rabin(r: &Rabin, w: &Lasso) -> bool {
    let p = Product::new(&r.ts, w);
    r.pairs.iter().any(|pair| {
        let allowed: Vec<bool> = pair.avoid.iter().map(|x| !x).collect();
        let visits: Vec<Vec<bool>> = pair.visit.iter().map(|u| lift(&r.ts, w, u)).collect();
        p.fair(&[r.init * w.positions()], &lift(&r.ts, w, &allowed), &visits)
    })
}

/// Exact behavior of a weighted automaton on a lasso, by exploring run
/// summaries on the product: for stems the set of weights seen, for cycles
/// through a node the set of weights seen and whether a final state was
/// visited. A run's value depends only on the weights it sees at all and
/// the weights it sees infinitely often, and every union of closed walks
/// through a node is again one.
pub fn oracle_behavior(a: &Wba, w: &Lasso) -> ExtRat {
    let k = w.positions();
    let n = a.num_states() * k;
    let image: Vec<ExtRat> = a.image();
    let bit = |v: &ExtRat| 1u64 << image.iter().position(|x| x == v).unwrap();
    let mut out_edges: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
    for q in 0..a.num_states() {
        for i in 0..k {
            if let Some(s) = a.ts.sym(w.at(i)) {
                for (q2, wt) in a.succ(q, s) {
                    out_edges[q * k + i].push((q2 * k + w.next(i), bit(wt)));
                }
            }
        }
    }
    let fin = |v: usize| a.fin[v / k];
    // Stems: (node, weights seen).
    let mut stems: HashSet<(usize, u64)> = HashSet::new();
    let mut queue: VecDeque<(usize, u64)> = VecDeque::new();
    for &q in &a.init {
        if stems.insert((q * k, 0)) {
            queue.push_back((q * k, 0));
        }
    }
    while let Some((v, s)) = queue.pop_front() {
        for &(u, b) in &out_edges[v] {
            if stems.insert((u, s | b)) {
                queue.push_back((u, s | b));
            }
        }
    }
    let to_vals = |mask: u64| -> Vec<ExtRat> { (0..image.len()).filter(|i| mask >> i & 1 == 1).map(|i| image[i].clone()).collect() };
    let mut best = ExtRat::NegInf;
    let anchors: BTreeSet<usize> = stems.iter().map(|&(v, _)| v).collect();
    for x in anchors {
        // Closed walks through x: (node, weights, final seen).
        let mut seen: HashSet<(usize, u64, bool)> = HashSet::new();
        let mut queue: VecDeque<(usize, u64, bool)> = VecDeque::new();
        let mut cycles: BTreeSet<u64> = BTreeSet::new();
        for &(u, b) in &out_edges[x] {
            let st = (u, b, fin(u));
            if seen.insert(st) {
                queue.push_back(st);
            }
        }
        while let Some((v, s, f)) = queue.pop_front() {
            if v == x && f {
                cycles.insert(s);
            }
            for &(u, b) in &out_edges[v] {
                let st = (u, s | b, f || fin(u));
                if seen.insert(st) {
                    queue.push_back(st);
                }
            }
        }
        for &(v, stem) in stems.iter().filter(|&&(v, _)| v == x) {
            let _ = v;
            for &cyc in &cycles {
                let seq = WeightSeq::new(to_vals(stem | cyc), to_vals(cyc));
                let val = a.monoid.val_omega(&seq);
                if val > best {
                    best = val;
                }
            }
        }
    }
    best
}

/// Weighted formula generators for the k-indexed fragments. Guards are
/// safe boolean formulas over `a`, `b`; step weights are at least `k`.
pub struct FormulaGen {
    pub k: i64,
    pub weights: Vec<i64>,
    pub atoms: Vec<&'static str>,
}

impl FormulaGen {
    pub fn new(k: i64) -> Self {
        FormulaGen { k, weights: vec![2, 3, 5, 7].into_iter().filter(|&w| w >= k).collect(), atoms: vec!["a", "b"] }
    }

    fn literal(&self, r: &mut impl Rng) -> Formula {
        let a = self.atoms.choose(r).unwrap();
        if r.gen_bool(0.3) {
            Formula::neg_atom(a)
        } else {
            Formula::atom(a)
        }
    }

    /// A safe boolean formula of depth at most `d`.
    pub fn guard(&self, r: &mut impl Rng, d: usize) -> Formula {
        if d == 0 || r.gen_bool(0.45) {
            return self.literal(r);
        }
        match r.gen_range(0..5) {
            0 => Formula::and(self.guard(r, d - 1), self.guard(r, d - 1)),
            1 => Formula::or(self.guard(r, d - 1), self.guard(r, d - 1)),
            2 => Formula::next(self.guard(r, d - 1)),
            3 => Formula::always(self.guard(r, d - 1)),
            _ => Formula::weak_until(self.guard(r, d - 1), self.guard(r, d - 1)),
        }
    }

    fn weight(&self, r: &mut impl Rng) -> Formula {
        Formula::konst(*self.weights.choose(r).unwrap())
    }

    pub fn step(&self, r: &mut impl Rng, d: usize) -> Formula {
        let atom = |r: &mut _| Formula::and(self.weight(r), self.guard(r, d.saturating_sub(1)));
        let mut f = atom(r);
        for _ in 0..r.gen_range(0..2) {
            f = Formula::or(f, atom(r));
        }
        f
    }

    pub fn special(&self, r: &mut impl Rng, d: usize) -> Formula {
        match r.gen_range(0..3) {
            0 => self.step(r, d),
            1 => Formula::always(self.step(r, d.saturating_sub(1))),
            _ => Formula::weak_until(self.step(r, d.saturating_sub(1)), self.step(r, d.saturating_sub(1))),
        }
    }

    /// A formula of the k-indexed fragment; `restricted_or` limits `|` to
    /// step operands.
    pub fn formula(&self, r: &mut impl Rng, d: usize, restricted_or: bool) -> Formula {
        if d == 0 {
            return self.step(r, 1);
        }
        match r.gen_range(0..7) {
            0 => Formula::konst(*self.weights.choose(r).unwrap()),
            1 => self.guard(r, d),
            2 => Formula::next(self.formula(r, d - 1, restricted_or)),
            3 if restricted_or => Formula::or(self.step(r, d - 1), self.step(r, d - 1)),
            3 => Formula::or(self.formula(r, d - 1, restricted_or), self.formula(r, d - 1, restricted_or)),
            4 => Formula::and(self.special(r, d - 1), self.guard(r, d - 1)),
            _ => self.special(r, d),
        }
    }

    /// Keeps drawing until the formula classifies into the fragment of `m`.
    pub fn member(&self, r: &mut impl Rng, m: Monoid, depth: usize) -> Formula {
        let k = ExtRat::int(self.k);
        loop {
            let f = self.formula(r, depth, m != Monoid::K1);
            let rep = classify(&f, Some(&k)).unwrap();
            let ok = if m == Monoid::K1 { rep.k_t_rultl } else { rep.k_or_t_rultl };
            if ok && f.depth() <= depth + 1 {
                return f;
            }
        }
    }
}

pub fn fixture(name: &str) -> String {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"))
}
