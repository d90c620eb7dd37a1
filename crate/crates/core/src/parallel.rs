//! Deterministic work splitting over worker threads.
//!
//! Items are processed in contiguous chunks, one per worker, and results are
//! concatenated in chunk order, so output is identical for every worker
//! count including one.

/// Order-preserving parallel flat-map over a slice.
pub fn par_flat_map<T, R, F>(items: &[T], workers: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync,
{
    let workers = workers.max(1);
    if workers == 1 || items.len() <= 1 {
        return items.iter().flat_map(|t| f(t)).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let mut out = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|slice| scope.spawn(|| slice.iter().flat_map(|t| f(t)).collect::<Vec<R>>()))
            .collect();
        for h in handles {
            out.extend(h.join().expect("worker panicked"));
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn output_is_identical_across_worker_counts() {
        let items: Vec<u32> = (0..997).collect();
        let f = |x: &u32| vec![*x * 3, *x * 3 + 1];
        let baseline = par_flat_map(&items, 1, f);
        for workers in [2, 3, 8, 64] {
            assert_eq!(par_flat_map(&items, workers, f), baseline);
        }
    }

    #[test]
    fn empty_input() {
        let items: Vec<u32> = Vec::new();
        assert!(par_flat_map(&items, 4, |x| vec![*x]).is_empty());
    }
}
