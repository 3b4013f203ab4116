//! Direct simulation and the language-preserving reductions it licenses.

use super::buchi::Buchi;
use super::ts::Sym;

/// `sim[p][q]` iff `q` directly simulates `p`: `q` is final when `p` is,
/// and every move of `p` is matched by a move of `q` on the same letter
/// into a simulating state.
pub fn direct_simulation(b: &Buchi) -> Vec<Vec<bool>> {
    let n = b.num_states();
    let letters = b.ts.num_letters() as Sym;
    let mut sim: Vec<Vec<bool>> = (0..n).map(|p| (0..n).map(|q| !b.fin[p] || b.fin[q]).collect()).collect();
    let mut changed = true;
    while changed {
        changed = false;
        for p in 0..n {
            for q in 0..n {
                if p == q || !sim[p][q] {
                    continue;
                }
                let ok = (0..letters).all(|a| {
                    b.ts.succ(p, a).iter().all(|&p2| b.ts.succ(q, a).iter().any(|&q2| sim[p2][q2]))
                });
                if !ok {
                    sim[p][q] = false;
                    changed = true;
                }
            }
        }
    }
    sim
}

/// Merges simulation-equivalent states and drops transitions into a
/// state when the same source reaches a strictly simulating state on the
/// same letter.
pub fn reduce(b: &Buchi) -> Buchi {
    let b = b.trim();
    let n = b.num_states();
    if n == 0 {
        return b;
    }
    let sim = direct_simulation(&b);
    let mut class = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for p in 0..n {
        if class[p] == usize::MAX {
            for q in p..n {
                if class[q] == usize::MAX && sim[p][q] && sim[q][p] {
                    class[q] = reps.len();
                }
            }
            reps.push(p);
        }
    }
    let mut out = Buchi::new(b.aps().to_vec()).expect("same propositions");
    for &p in &reps {
        out.add_state(b.ts.names[p].clone(), b.fin[p]);
    }
    let strictly = |x: usize, y: usize| sim[reps[x]][reps[y]] && !sim[reps[y]][reps[x]];
    for (c, &p) in reps.iter().enumerate() {
        for a in 0..b.ts.num_letters() as Sym {
            let mut targets: Vec<usize> = b.ts.succ(p, a).iter().map(|&q| class[q]).collect();
            targets.sort_unstable();
            targets.dedup();
            for &t in &targets {
                if !targets.iter().any(|&u| strictly(t, u)) {
                    out.ts.add_edge(c, a, t);
                }
            }
        }
    }
    let mut init: Vec<usize> = b.init.iter().map(|&p| class[p]).collect();
    init.sort_unstable();
    init.dedup();
    out.init = init.iter().copied().filter(|&i| !init.iter().any(|&j| strictly(i, j))).collect();
    out.trim()
}
