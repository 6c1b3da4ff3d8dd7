use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

/// Evaluates `work` on every input with up to `jobs` threads and hands the
/// results to `sink` in input order, as soon as each prefix is complete.
pub fn ordered<I, R, W, S>(inputs: &[I], jobs: usize, work: W, mut sink: S)
where
    I: Sync,
    R: Send,
    W: Fn(&I) -> R + Sync,
    S: FnMut(&I, R, Duration),
{
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, R, Duration)>();
    thread::scope(|scope| {
        for _ in 0..jobs.clamp(1, inputs.len().max(1)) {
            let tx = tx.clone();
            let (next, work) = (&next, &work);
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                if i >= inputs.len() {
                    break;
                }
                let start = Instant::now();
                let r = work(&inputs[i]);
                if tx.send((i, r, start.elapsed())).is_err() {
                    break;
                }
            });
        }
        drop(tx);
        let mut pending: BTreeMap<usize, (R, Duration)> = BTreeMap::new();
        let mut emitted = 0;
        for (i, r, d) in rx {
            pending.insert(i, (r, d));
            while let Some((r, d)) = pending.remove(&emitted) {
                sink(&inputs[emitted], r, d);
                emitted += 1;
            }
        }
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_kept() {
        let inputs: Vec<u64> = (0..40).collect();
        let mut seen = Vec::new();
        ordered(
            &inputs,
            4,
            |&i| {
                thread::sleep(Duration::from_micros((40 - i) * 50));
                i * i
            },
            |&i, r, _| seen.push((i, r)),
        );
        let want: Vec<(u64, u64)> = inputs.iter().map(|&i| (i, i * i)).collect();
        assert_eq!(seen, want);
    }
}
