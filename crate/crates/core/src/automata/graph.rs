//! Small graph utilities shared by the automaton algorithms.

use std::collections::VecDeque;

/// Strongly connected components by iterative Tarjan. Returns the component
/// index of every node (components are numbered in reverse topological
/// order) and the component count.
pub fn scc(n: usize, succ: &dyn Fn(usize) -> Vec<usize>) -> (Vec<usize>, usize) {
    const UNSEEN: usize = usize::MAX;
    let mut index = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNSEEN; n];
    let mut stack = Vec::new();
    let mut next_index = 0;
    let mut ncomp = 0;
    for root in 0..n {
        if index[root] != UNSEEN {
            continue;
        }
        let mut work: Vec<(usize, Vec<usize>, usize)> = Vec::new();
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;
        work.push((root, succ(root), 0));
        while let Some((v, ss, i)) = work.last_mut() {
            let v = *v;
            if *i < ss.len() {
                let w = ss[*i];
                *i += 1;
                if index[w] == UNSEEN {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    let sw = succ(w);
                    work.push((w, sw, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                work.pop();
                if let Some((u, _, _)) = work.last() {
                    low[*u] = low[*u].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
    }
    (comp, ncomp)
}

/// Nodes reachable from `starts` (including them).
pub fn reachable(n: usize, starts: &[usize], succ: &dyn Fn(usize) -> Vec<usize>) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for &s in starts {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for w in succ(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Shortest path from any of `starts` to a node satisfying `goal`, as the
/// list of traversed edges `(from, label, to)`. Uses at least one edge when
/// `nonempty` is set, which allows searching for a cycle back to a start.
pub fn bfs_path<L: Clone>(
    n: usize,
    starts: &[usize],
    edges: &dyn Fn(usize) -> Vec<(L, usize)>,
    goal: &dyn Fn(usize) -> bool,
    nonempty: bool,
) -> Option<Vec<(usize, L, usize)>> {
    if !nonempty && starts.iter().any(|&s| goal(s)) {
        return Some(Vec::new());
    }
    let mut is_start = vec![false; n];
    starts.iter().for_each(|&s| is_start[s] = true);
    let mut parent: Vec<Option<(usize, L)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue: VecDeque<usize> = starts.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        for (l, w) in edges(v) {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            parent[w] = Some((v, l));
            if goal(w) {
                let mut path = Vec::new();
                let mut cur = w;
                loop {
                    let (p, l) = parent[cur].clone().expect("parent chain reaches a start");
                    path.push((p, l, cur));
                    cur = p;
                    if is_start[cur] {
                        break;
                    }
                }
                path.reverse();
                return Some(path);
            }
            queue.push_back(w);
        }
    }
    None
}

/// Assigns dense ids to keys in discovery order, for on-the-fly
/// constructions that explore `keys[i]` for increasing `i`.
pub struct Explorer<K> {
    ids: std::collections::HashMap<K, usize>,
    pub keys: Vec<K>,
}

impl<K: std::hash::Hash + Eq + Clone> Explorer<K> {
    pub fn new() -> Self {
        Explorer { ids: std::collections::HashMap::new(), keys: Vec::new() }
    }

    /// The id of `k`, and whether it was new.
    pub fn id(&mut self, k: K) -> (usize, bool) {
        if let Some(&i) = self.ids.get(&k) {
            return (i, false);
        }
        let i = self.keys.len();
        self.ids.insert(k.clone(), i);
        self.keys.push(k);
        (i, true)
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }
}

impl<K: std::hash::Hash + Eq + Clone> Default for Explorer<K> {
    fn default() -> Self {
        Self::new()
    }
}
