//! Decides the robot case study and prints the verdict.

use std::time::Instant;

use wltl_core::decide::decide_formula_automaton;
use wltl_core::io::parse_wts;
use wltl_core::logic::parse_formula;
use wltl_core::translate::wts_to_wba;
use wltl_core::ExtRat;

fn main() -> wltl_core::Result<()> {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    let t = parse_wts(&std::fs::read_to_string(format!("{root}/robot.wts")).unwrap())?;
    let f = parse_formula(&std::fs::read_to_string(format!("{root}/robot.wltl")).unwrap())?;
    let start = Instant::now();
    let v = decide_formula_automaton(&f, &wts_to_wba(&t)?, &ExtRat::int(8))?;
    print!("{v}");
    println!("elapsed={:?}", start.elapsed());
    Ok(())
}
