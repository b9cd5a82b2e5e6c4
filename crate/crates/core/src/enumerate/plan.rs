//! Search plans for the backtracking engine.
//!
//! A plan fixes the order in which meridian images are chosen. Starting from
//! `x_1`, any crossing relator `x_a x_b x_a⁻¹ x_c⁻¹` with two known images
//! determines the third (`x_c = x_a x_b x_a⁻¹` or `x_b = x_a⁻¹ x_c x_a`), so
//! only a few generators are searched freely. Every other relator is checked
//! as soon as all of its generators have images.

use crate::presentation::{BtsPresentation, H};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Step {
    /// Try every element for this generator.
    Free(usize),
    /// `target = over^{±1} · from · over^{∓1}`; `inverse_conj` selects the
    /// lower sign.
    Derive {
        target: usize,
        over: usize,
        from: usize,
        inverse_conj: bool,
    },
}

#[derive(Debug, Clone)]
pub(crate) struct Plan {
    pub steps: Vec<Step>,
    /// Relators to check after each step.
    pub checks: Vec<Vec<usize>>,
    /// Relators involving only `h`, checked once up front.
    pub initial_checks: Vec<usize>,
}

type Crossing = (usize, (usize, usize, usize));

/// The derivable generator of lowest index, with its relator.
fn next_derivation(
    crossings: &[Crossing],
    assigned: &[bool],
    used: &[bool],
) -> Option<(usize, usize, Step)> {
    let mut best: Option<(usize, usize, Step)> = None;
    for &(ri, (a, b, c)) in crossings {
        if used[ri] || !assigned[a] {
            continue;
        }
        let candidate = if assigned[b] && !assigned[c] && c != a {
            Some((
                c,
                Step::Derive {
                    target: c,
                    over: a,
                    from: b,
                    inverse_conj: false,
                },
            ))
        } else if assigned[c] && !assigned[b] && b != a {
            Some((
                b,
                Step::Derive {
                    target: b,
                    over: a,
                    from: c,
                    inverse_conj: true,
                },
            ))
        } else {
            None
        };
        if let Some((t, step)) = candidate {
            if best.as_ref().is_none_or(|(bt, _, _)| t < *bt) {
                best = Some((t, ri, step));
            }
        }
    }
    best
}

fn reach_after_freeing(
    crossings: &[Crossing],
    assigned: &[bool],
    used: &[bool],
    g: usize,
) -> usize {
    let mut assigned = assigned.to_vec();
    let mut used = used.to_vec();
    assigned[g] = true;
    while let Some((t, ri, _)) = next_derivation(crossings, &assigned, &used) {
        assigned[t] = true;
        used[ri] = true;
    }
    assigned.iter().filter(|&&a| a).count()
}

impl Plan {
    pub fn new(p: &BtsPresentation) -> Plan {
        let l = p.meridians();
        let relators = p.relators();
        let mut assigned = vec![false; l + 1];
        assigned[H] = true;
        let mut steps = Vec::with_capacity(l);
        let mut used = vec![false; relators.len()];

        let crossings: Vec<Crossing> = relators
            .iter()
            .enumerate()
            .filter_map(|(i, w)| w.crossing_form().map(|c| (i, c)))
            .collect();

        while steps.len() < l {
            match next_derivation(&crossings, &assigned, &used) {
                Some((t, ri, step)) => {
                    used[ri] = true;
                    assigned[t] = true;
                    steps.push(step);
                }
                None => {
                    // free the generator whose image determines the most others
                    let g = (1..=l)
                        .filter(|&g| !assigned[g])
                        .max_by_key(|&g| {
                            let reach = reach_after_freeing(&crossings, &assigned, &used, g);
                            (reach, std::cmp::Reverse(g))
                        })
                        .expect("unassigned generator");
                    assigned[g] = true;
                    steps.push(Step::Free(g));
                }
            }
        }

        // position in `steps` at which each generator receives its image
        let mut when = vec![0usize; l + 1];
        for (i, s) in steps.iter().enumerate() {
            let g = match s {
                Step::Free(g) => *g,
                Step::Derive { target, .. } => *target,
            };
            when[g] = i;
        }
        let mut checks = vec![Vec::new(); steps.len()];
        let mut initial_checks = Vec::new();
        for (ri, w) in relators.iter().enumerate() {
            if used[ri] {
                continue;
            }
            let last = w
                .letters()
                .iter()
                .filter(|x| x.generator != H)
                .map(|x| when[x.generator])
                .max();
            match last {
                Some(step) => checks[step].push(ri),
                None => initial_checks.push(ri),
            }
        }
        Plan {
            steps,
            checks,
            initial_checks,
        }
    }

    #[cfg(test)]
    pub fn free_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, Step::Free(_)))
            .count()
    }
}
