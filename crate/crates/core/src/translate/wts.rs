use crate::automata::Wba;
use crate::error::{Error, Result};
use crate::monoid::{ExtRat, Monoid};
use crate::semantics::Letter;

/// A weighted transition system: labelled states and positively weighted
/// edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Wts {
    pub aps: Vec<String>,
    pub names: Vec<String>,
    pub init: Vec<usize>,
    pub labels: Vec<Letter>,
    pub edges: Vec<(usize, usize, ExtRat)>,
}

impl Wts {
    pub fn new(aps: impl IntoIterator<Item = String>) -> Self {
        let mut aps: Vec<String> = aps.into_iter().collect();
        aps.sort();
        aps.dedup();
        Wts { aps, names: Vec::new(), init: Vec::new(), labels: Vec::new(), edges: Vec::new() }
    }

    pub fn add_state(&mut self, name: impl Into<String>, label: Letter) -> usize {
        self.names.push(name.into());
        self.labels.push(label);
        self.names.len() - 1
    }

    pub fn add_edge(&mut self, p: usize, q: usize, w: ExtRat) -> Result<()> {
        if !w.is_finite() || w <= ExtRat::int(0) {
            return Err(Error::InvalidValue(format!("edge weights must be positive rationals, got {w}")));
        }
        self.edges.push((p, q, w));
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        for (i, l) in self.labels.iter().enumerate() {
            if let Some(p) = l.iter().find(|p| self.aps.binary_search(p).is_err()) {
                return Err(Error::Malformed(format!("label of `{}` uses unknown proposition `{p}`", self.names[i])));
            }
        }
        Ok(())
    }
}

/// The automaton reading the label of the current state while taking an
/// edge; every state is final and the monoid is `limsup`.
pub fn wts_to_wba(t: &Wts) -> Result<Wba> {
    t.validate()?;
    let mut a = Wba::new(Monoid::K2, t.aps.clone())?;
    for name in &t.names {
        a.add_state(name.clone(), true);
    }
    a.init = t.init.clone();
    for (p, q, w) in &t.edges {
        let s = a.ts.sym(&t.labels[*p]).expect("validated label");
        let w = a.weight(*p, s, *q).max(w.clone());
        a.set_weight(*p, s, *q, w);
    }
    Ok(a)
}
