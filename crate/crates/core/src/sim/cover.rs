use serde::Serialize;

/// Cover-time and re-switch diagnostics of an action sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverStats {
    /// `τ_1, …, τ_{m+1}` as 1-based rounds; `None` when the cover never
    /// completes.
    pub taus: Vec<Option<u64>>,
    /// Number of completed covers (finite `τ_j`).
    pub covers: usize,
    /// Arrivals at each arm from a different arm, counting the round-1
    /// choice.
    pub reswitches: Vec<u64>,
}

/// `τ_j` is the first round `t >= τ_{j-1}` such that every arm is played
/// somewhere in `[τ_{j-1}, t]`, with `τ_0 = 1`. Consecutive windows share
/// their boundary round.
pub fn cover_stats(actions: &[usize], k: usize, m: usize) -> CoverStats {
    let mut taus = Vec::with_capacity(m + 1);
    let mut start = 0usize;
    let mut complete = true;
    for _ in 0..=m {
        if !complete {
            taus.push(None);
            continue;
        }
        let mut seen = vec![false; k];
        let mut missing = k;
        let mut found = None;
        for (t, &a) in actions.iter().enumerate().skip(start) {
            if !seen[a] {
                seen[a] = true;
                missing -= 1;
            }
            if missing == 0 {
                found = Some(t);
                break;
            }
        }
        match found {
            Some(t) => {
                taus.push(Some(t as u64 + 1));
                start = t;
            }
            None => {
                complete = false;
                taus.push(None);
            }
        }
    }
    let mut reswitches = vec![0u64; k];
    let mut prev = None;
    for &a in actions {
        if prev != Some(a) {
            reswitches[a] += 1;
        }
        prev = Some(a);
    }
    let covers = taus.iter().filter(|t| t.is_some()).count();
    CoverStats { taus, covers, reswitches }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overlapping_windows() {
        let s = cover_stats(&[0, 1, 1, 0], 2, 1);
        assert_eq!(s.taus, vec![Some(2), Some(4)]);
        assert_eq!(s.covers, 2);
    }

    #[test]
    fn reswitches_count_first_round() {
        let s = cover_stats(&[0, 1, 0], 2, 0);
        assert_eq!(s.reswitches, vec![2, 1]);
    }

    #[test]
    fn constant_trace_never_covers() {
        let s = cover_stats(&[1; 50], 3, 2);
        assert_eq!(s.taus, vec![None, None, None]);
        assert_eq!(s.covers, 0);
        assert_eq!(s.reswitches, vec![0, 1, 0]);
    }
}
