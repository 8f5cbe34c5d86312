//! Brute-force reference implementations shared by the integration tests.
//!
//! The permanent never touches `Element` arithmetic: it walks every
//! permutation, sums rationals, and decides ghostliness by counting the
//! tracks that reach the maximum.

#![allow(dead_code)]

use supertrop::semiring::Rational;
use supertrop::{Element, Matrix};

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Max over tracks; ghost if two tracks tie at the max or a maximal track
/// passes through a ghost entry.
pub fn permanent(a: &Matrix) -> Element {
    let n = a.rows();
    let mut best: Option<Rational> = None;
    let mut ghost = false;
    for p in permutations(n) {
        let mut sum = Rational::from_integer(0);
        let mut through_ghost = false;
        let mut dead = false;
        for (i, &j) in p.iter().enumerate() {
            match a.get(i, j) {
                Element::NegInfinity => {
                    dead = true;
                    break;
                }
                Element::Tangible(v) => sum += v,
                Element::Ghost(v) => {
                    sum += v;
                    through_ghost = true;
                }
            }
        }
        if dead {
            continue;
        }
        match best {
            Some(b) if sum < b => {}
            Some(b) if sum == b => ghost = true,
            _ => {
                best = Some(sum);
                ghost = through_ghost;
            }
        }
    }
    match best {
        None => Element::NegInfinity,
        Some(v) if ghost => Element::Ghost(v),
        Some(v) => Element::Tangible(v),
    }
}

/// `a + xI`.
pub fn shifted(a: &Matrix, x: Element) -> Matrix {
    let mut m = a.clone();
    for i in 0..a.rows() {
        m.set(i, i, a.get(i, i) + x);
    }
    m
}
