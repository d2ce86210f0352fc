//! A minimal deterministic fork-join helper.
//!
//! Work items are split into contiguous chunks, one per worker; results come
//! back in input order, so downstream output is identical for any worker
//! count.

/// Applies `f` to every item, fanning out over `workers` threads.
/// `workers == 0` means available parallelism.
pub fn par_map<T, U, F>(items: Vec<T>, workers: usize, f: F) -> Vec<U>
where
    T: Send + Sync,
    U: Send,
    F: Fn(&T) -> U + Sync,
{
    let workers = effective_workers(workers, items.len());
    if workers <= 1 || items.len() <= 1 {
        return items.iter().map(|t| f(t)).collect();
    }
    let chunk = items.len().div_ceil(workers);
    let mut out: Vec<Option<U>> = Vec::with_capacity(items.len());
    out.resize_with(items.len(), || None);
    std::thread::scope(|scope| {
        let f = &f;
        for (inputs, outputs) in items.chunks(chunk).zip(out.chunks_mut(chunk)) {
            scope.spawn(move || {
                for (t, slot) in inputs.iter().zip(outputs.iter_mut()) {
                    *slot = Some(f(t));
                }
            });
        }
    });
    out.into_iter().map(|slot| slot.expect("worker filled every slot")).collect()
}

pub fn effective_workers(requested: usize, items: usize) -> usize {
    let available = std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1);
    let w = if requested == 0 { available } else { requested };
    w.min(items.max(1))
}
