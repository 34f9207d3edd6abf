use std::ops::ControlFlow;

use serde::Serialize;

use crate::coloring::{is_proper, ExactColorer};
use crate::graph::{build_g, Graph};

use super::AdversaryError;

#[derive(Clone, Debug, Serialize)]
pub struct Lemma2Report {
    pub n: usize,
    pub m: usize,
    /// Proper (n+1)-colorings of G_n visited.
    pub tight_colorings: u64,
    /// Every one of them gives e_l and e_r the same color.
    pub tight_colorings_agree: bool,
    /// Some (n+2)-coloring separates e_l and e_r.
    pub separable_with_n_plus_2: bool,
    pub holds: bool,
}

/// Enumerates every proper (n+1)-coloring of G_n and checks that e_l and e_r
/// always agree, then looks for an (n+2)-coloring that separates them.
pub fn lemma2_check(n: usize, colorer: &ExactColorer) -> Result<Lemma2Report, AdversaryError> {
    if n == 0 {
        return Err(AdversaryError::PreconditionViolated("G_n needs n >= 1".into()));
    }
    let gadget = build_g(n);
    let g = Graph::from_stream(&gadget.stream);
    let (el, er) = (gadget.e_left, gadget.e_right);
    let mut agree = true;
    let tight = colorer.enumerate(&g, n + 1, |c| {
        if c[el] != c[er] {
            agree = false;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    let separated = colorer.color_with(&g, n + 2, &[(el, 1), (er, 2)])?;
    let separable = separated.as_ref().is_some_and(|c| is_proper(&g, c) && c.get(el) != c.get(er));
    Ok(Lemma2Report {
        n,
        m: g.m(),
        tight_colorings: tight,
        tight_colorings_agree: agree,
        separable_with_n_plus_2: separable,
        holds: agree && tight > 0 && separable,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_gadgets() {
        for n in 1..=2 {
            let r = lemma2_check(n, &ExactColorer::default()).unwrap();
            assert!(r.holds, "{r:?}");
        }
        // G_1 is a 5-edge path: two 2-colorings.
        assert_eq!(lemma2_check(1, &ExactColorer::default()).unwrap().tight_colorings, 2);
    }
}
