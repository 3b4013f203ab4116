//! Line-based text formats for Büchi automata, weighted automata and
//! weighted transition systems.
//!
//! ```text
//! monoid k2            # omitted for a plain Büchi automaton
//! aps a b
//! states q0 q1 q2
//! initial q0
//! final q1 q2
//! trans q0 {a} q1 2    # the weight is omitted for Büchi automata
//! ```
//!
//! ```text
//! wts
//! aps gather upload
//! states q0 q1
//! initial q0
//! label q1 {upload}
//! edge q0 q1 8
//! ```
//!
//! `#` starts a comment. In a weighted file a `trans` line without a weight
//! has weight `-inf`, i.e. it declares nothing.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::automata::{Buchi, Sym, Ts, Wba};
use crate::error::{Error, Result};
use crate::monoid::{ExtRat, Monoid};
use crate::semantics::{parse_letters, Letter};
use crate::translate::Wts;

/// Either kind of automaton file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AutomatonFile {
    Buchi(Buchi),
    Weighted(Wba),
}

struct Line<'a> {
    no: usize,
    key: &'a str,
    rest: &'a str,
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap().trim();
        if l.is_empty() {
            return None;
        }
        let (key, rest) = l.split_once(char::is_whitespace).unwrap_or((l, ""));
        Some(Line { no: i + 1, key, rest: rest.trim() })
    })
}

fn err(no: usize, msg: impl Into<String>) -> Error {
    Error::Malformed(format!("line {no}: {}", msg.into()))
}

fn words(s: &str) -> Vec<String> {
    s.split_whitespace().map(str::to_string).collect()
}

struct Names(HashMap<String, usize>);

impl Names {
    fn get(&self, no: usize, s: &str) -> Result<usize> {
        self.0.get(s).copied().ok_or_else(|| err(no, format!("unknown state `{s}`")))
    }
}

/// Splits `src {a,b} dst rest…`.
fn split_letter(no: usize, s: &str) -> Result<(String, Letter, Vec<String>)> {
    let open = s.find('{').ok_or_else(|| err(no, "expected a letter such as `{a,b}`"))?;
    let close = s[open..].find('}').ok_or_else(|| err(no, "unclosed letter"))? + open;
    let src = s[..open].trim().to_string();
    let letter = parse_letters(&s[open..=close]).map_err(|e| err(no, e.to_string()))?;
    Ok((src, letter.into_iter().next().unwrap(), words(&s[close + 1..])))
}

struct Header {
    monoid: Option<Monoid>,
    aps: Vec<String>,
    states: Vec<String>,
}

fn header(text: &str) -> Result<Header> {
    let mut h = Header { monoid: None, aps: Vec::new(), states: Vec::new() };
    for l in lines(text) {
        match l.key {
            "monoid" => h.monoid = Some(l.rest.parse().map_err(|e: Error| err(l.no, e.to_string()))?),
            "aps" => h.aps = words(l.rest),
            "states" => h.states = words(l.rest),
            _ => {}
        }
    }
    let mut seen = BTreeSet::new();
    if let Some(d) = h.states.iter().find(|s| !seen.insert(*s)) {
        return Err(Error::Malformed(format!("state `{d}` declared twice")));
    }
    Ok(h)
}

/// Reads an automaton file; the presence of a `monoid` line decides the kind.
pub fn parse_automaton(text: &str) -> Result<AutomatonFile> {
    let h = header(text)?;
    let mut ts = Ts::new(h.aps.clone())?;
    for s in &h.states {
        ts.add_state(s.clone());
    }
    let names = Names(h.states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect());
    let mut init = Vec::new();
    let mut fin = vec![false; h.states.len()];
    let mut trans: Vec<(usize, Sym, usize, Option<ExtRat>)> = Vec::new();
    for l in lines(text) {
        match l.key {
            "monoid" | "aps" | "states" => {}
            "initial" => {
                for s in l.rest.split_whitespace() {
                    init.push(names.get(l.no, s)?);
                }
            }
            "final" => {
                for s in l.rest.split_whitespace() {
                    fin[names.get(l.no, s)?] = true;
                }
            }
            "trans" => {
                let (src, letter, rest) = split_letter(l.no, l.rest)?;
                let p = names.get(l.no, &src)?;
                let a = ts.sym(&letter).ok_or_else(|| err(l.no, "letter uses an undeclared proposition"))?;
                let (dst, w) = match rest.as_slice() {
                    [d] => (d, None),
                    [d, w] => (d, Some(w.parse::<ExtRat>().map_err(|e| err(l.no, e.to_string()))?)),
                    _ => return Err(err(l.no, "expected `trans <src> <letter> <dst> [<weight>]`")),
                };
                trans.push((p, a, names.get(l.no, dst)?, w));
            }
            other => return Err(err(l.no, format!("unknown directive `{other}`"))),
        }
    }
    init.sort_unstable();
    init.dedup();
    match h.monoid {
        None => {
            let mut b = Buchi { ts, init, fin };
            for (p, a, q, w) in trans {
                if w.is_some() {
                    return Err(Error::Malformed("weights need a `monoid` line".into()));
                }
                b.ts.add_edge(p, a, q);
            }
            Ok(AutomatonFile::Buchi(b))
        }
        Some(m) => {
            let mut a = Wba { monoid: m, ts, wt: Default::default(), init, fin };
            for (p, s, q, w) in trans {
                if let Some(w) = w {
                    if a.wt.contains_key(&(p, s, q)) {
                        return Err(Error::Malformed(format!("transition {p} {s} {q} given twice")));
                    }
                    a.set_weight(p, s, q, w);
                }
            }
            Ok(AutomatonFile::Weighted(a))
        }
    }
}

pub fn parse_buchi(text: &str) -> Result<Buchi> {
    match parse_automaton(text)? {
        AutomatonFile::Buchi(b) => Ok(b),
        AutomatonFile::Weighted(_) => Err(Error::Malformed("expected a Büchi automaton, found a `monoid` line".into())),
    }
}

pub fn parse_wba(text: &str) -> Result<Wba> {
    match parse_automaton(text)? {
        AutomatonFile::Weighted(a) => Ok(a),
        AutomatonFile::Buchi(_) => Err(Error::Malformed("expected a weighted automaton with a `monoid` line".into())),
    }
}

fn letter_text(l: &Letter) -> String {
    format!("{{{}}}", l.iter().cloned().collect::<Vec<_>>().join(","))
}

/// State names safe to print: the given ones when they are distinct and
/// plain, otherwise `s0, s1, …`.
fn printable_names(names: &[String]) -> Vec<String> {
    let plain = |s: &String| !s.is_empty() && !s.contains(|c: char| c.is_whitespace() || "{}#".contains(c));
    let distinct = names.iter().collect::<BTreeSet<_>>().len() == names.len();
    if distinct && names.iter().all(plain) {
        names.to_vec()
    } else {
        (0..names.len()).map(|i| format!("s{i}")).collect()
    }
}

fn write_header(out: &mut String, ts: &Ts, names: &[String], init: &[usize], fin: &[bool]) {
    let _ = writeln!(out, "aps {}", ts.aps.join(" "));
    let _ = writeln!(out, "states {}", names.join(" "));
    let init: Vec<&str> = init.iter().map(|&i| names[i].as_str()).collect();
    let _ = writeln!(out, "initial {}", init.join(" "));
    let fin: Vec<&str> = (0..names.len()).filter(|&i| fin[i]).map(|i| names[i].as_str()).collect();
    let _ = writeln!(out, "final {}", fin.join(" "));
}

pub fn buchi_to_text(b: &Buchi) -> String {
    let names = printable_names(&b.ts.names);
    let mut out = String::new();
    write_header(&mut out, &b.ts, &names, &b.init, &b.fin);
    for p in 0..b.num_states() {
        for (a, q) in b.ts.edges(p) {
            let _ = writeln!(out, "trans {} {} {}", names[p], letter_text(&b.ts.letter(a)), names[q]);
        }
    }
    out
}

pub fn wba_to_text(a: &Wba) -> String {
    let names = printable_names(&a.ts.names);
    let mut out = format!("monoid {}\n", a.monoid);
    write_header(&mut out, &a.ts, &names, &a.init, &a.fin);
    for (&(p, s, q), w) in &a.wt {
        let _ = writeln!(out, "trans {} {} {} {w}", names[p], letter_text(&a.ts.letter(s)), names[q]);
    }
    out
}

pub fn parse_wts(text: &str) -> Result<Wts> {
    let mut it = lines(text).peekable();
    match it.peek() {
        Some(l) if l.key == "wts" && l.rest.is_empty() => {}
        _ => return Err(Error::Malformed("a transition system file starts with `wts`".into())),
    }
    let h = header(text)?;
    let mut t = Wts::new(h.aps);
    for s in &h.states {
        t.add_state(s.clone(), Letter::new());
    }
    let names = Names(h.states.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect());
    for l in lines(text) {
        match l.key {
            "wts" | "aps" | "states" => {}
            "initial" => {
                for s in l.rest.split_whitespace() {
                    t.init.push(names.get(l.no, s)?);
                }
            }
            "label" => {
                let (state, letter, rest) = split_letter(l.no, l.rest)?;
                if !rest.is_empty() {
                    return Err(err(l.no, "expected `label <state> {…}`"));
                }
                t.labels[names.get(l.no, &state)?] = letter;
            }
            "edge" => {
                let [p, q, w] = words(l.rest).try_into().map_err(|_| err(l.no, "expected `edge <src> <dst> <weight>`"))?;
                let w: ExtRat = w.parse().map_err(|e: Error| err(l.no, e.to_string()))?;
                t.add_edge(names.get(l.no, &p)?, names.get(l.no, &q)?, w).map_err(|e| err(l.no, e.to_string()))?;
            }
            other => return Err(err(l.no, format!("unknown directive `{other}`"))),
        }
    }
    t.validate()?;
    Ok(t)
}

pub fn wts_to_text(t: &Wts) -> String {
    let names = printable_names(&t.names);
    let mut out = String::from("wts\n");
    let _ = writeln!(out, "aps {}", t.aps.join(" "));
    let _ = writeln!(out, "states {}", names.join(" "));
    let init: Vec<&str> = t.init.iter().map(|&i| names[i].as_str()).collect();
    let _ = writeln!(out, "initial {}", init.join(" "));
    for (i, l) in t.labels.iter().enumerate() {
        let _ = writeln!(out, "label {} {}", names[i], letter_text(l));
    }
    for (p, q, w) in &t.edges {
        let _ = writeln!(out, "edge {} {} {w}", names[*p], names[*q]);
    }
    out
}
