use crate::automata::Wba;
use crate::error::{Error, Result};
use crate::logic::{candidate_values, classify, loosest_k, threshold_formula, Formula};
use crate::monoid::Monoid;

use super::tableau::ltl_to_buchi_over;

/// Whether `f` lies in a fragment that [`formula_to_wba`] handles for `m`.
pub fn check_translatable(f: &Formula, m: Monoid) -> Result<()> {
    let r = classify(f, Some(&loosest_k(f)))?;
    let ok = match m {
        Monoid::K1 => r.t_rultl || r.k_t_rultl,
        Monoid::K2 | Monoid::K3 => r.or_t_rultl || r.k_or_t_rultl,
    };
    if ok {
        Ok(())
    } else {
        let want = if m == Monoid::K1 { "t-RULTL or k-t-RULTL" } else { "or-t-RULTL or k-or-t-RULTL" };
        Err(Error::OutsideFragment(format!("{f} is not in {want}")))
    }
}

/// A weighted automaton with the same behavior as `f` over its own
/// propositions.
pub fn formula_to_wba(f: &Formula, m: Monoid) -> Result<Wba> {
    let aps: Vec<String> = f.atoms().into_iter().collect();
    formula_to_wba_over(f, m, &aps)
}

/// Level-set assembly over `aps`: for each candidate value `v`, the
/// automaton of `f ≥ v` with every transition weighted `v`; the union takes
/// the maximum.
pub fn formula_to_wba_over(f: &Formula, m: Monoid, aps: &[String]) -> Result<Wba> {
    check_translatable(f, m)?;
    let mut out = Wba::new(m, aps.iter().cloned())?;
    for v in candidate_values(f) {
        let b = ltl_to_buchi_over(&threshold_formula(f, &v, m)?, out.aps())?.trim();
        let off = out.num_states();
        for p in 0..b.num_states() {
            out.add_state(format!("{}#{v}", b.ts.names[p]), b.fin[p]);
        }
        for p in 0..b.num_states() {
            for (s, q) in b.ts.edges(p) {
                out.set_weight(off + p, s, off + q, v.clone());
            }
        }
        out.init.extend(b.init.iter().map(|&p| off + p));
    }
    Ok(out)
}
