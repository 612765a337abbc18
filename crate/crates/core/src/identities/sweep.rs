use std::time::Instant;

use rayon::prelude::*;

use crate::exactnum::QPi2;

use super::{Failure, IdentityError, Status, VerifyReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Continue past the first failure, counting all failures.
    pub keep_going: bool,
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            keep_going: false,
            jobs: 1,
        }
    }
}

#[allow(clippy::large_enum_variant)]
enum Event {
    Fail(Failure),
    Fatal(IdentityError),
}

fn check_one<F>(eval: &F, n: u64) -> Option<Event>
where
    F: Fn(u64) -> Result<(QPi2, QPi2), IdentityError>,
{
    match eval(n) {
        Ok((lhs, rhs)) if lhs == rhs => None,
        Ok((lhs, rhs)) => Some(Event::Fail(Failure::Mismatch { n, lhs, rhs })),
        Err(IdentityError::Eval(message)) => Some(Event::Fail(Failure::EvalError { n, message })),
        Err(e) => Some(Event::Fatal(e)),
    }
}

/// Events of `lo..=hi` in increasing `n`, stopping early at a fatal error,
/// or at the first failure unless `keep_going`.
fn scan<F>(eval: &F, lo: u64, hi: u64, keep_going: bool) -> Vec<(u64, Event)>
where
    F: Fn(u64) -> Result<(QPi2, QPi2), IdentityError>,
{
    let mut events = Vec::new();
    for n in lo..=hi {
        if let Some(ev) = check_one(eval, n) {
            let stop = matches!(ev, Event::Fatal(_)) || !keep_going;
            events.push((n, ev));
            if stop {
                break;
            }
        }
    }
    events
}

/// Evaluates `eval` at every `n` in `lo..=hi`. Serial and parallel runs
/// produce identical verdicts: events are merged in increasing `n` and the
/// smallest failing `n` wins.
pub fn sweep<F>(
    identity: &str,
    form: Option<&str>,
    lo: u64,
    hi: u64,
    opts: SweepOptions,
    eval: F,
) -> Result<VerifyReport, IdentityError>
where
    F: Fn(u64) -> Result<(QPi2, QPi2), IdentityError> + Sync,
{
    if lo > hi {
        return Err(IdentityError::InvalidRange { lo, hi });
    }
    let start = Instant::now();
    let jobs = opts.jobs.max(1);
    let events: Vec<(u64, Event)> = if jobs == 1 || hi - lo < 2 {
        scan(&eval, lo, hi, opts.keep_going)
    } else {
        let chunks = chunk_bounds(lo, hi, jobs * 4);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| IdentityError::Argument(format!("cannot start worker pool: {e}")))?;
        pool.install(|| {
            chunks
                .par_iter()
                .map(|&(a, b)| scan(&eval, a, b, opts.keep_going))
                .collect::<Vec<_>>()
        })
        .into_iter()
        .flatten()
        .collect()
    };

    let mut first_failure = None;
    let mut failure_count = 0;
    let mut last_n = hi;
    for (n, ev) in events {
        match ev {
            Event::Fatal(e) => return Err(e),
            Event::Fail(f) => {
                failure_count += 1;
                if first_failure.is_none() {
                    first_failure = Some(f);
                }
                if !opts.keep_going {
                    last_n = n;
                    break;
                }
            }
        }
    }
    Ok(VerifyReport {
        identity: identity.to_string(),
        form: form.map(str::to_string),
        n_lo: lo,
        n_hi: hi,
        status: if first_failure.is_some() {
            Status::Fail
        } else {
            Status::Pass
        },
        first_failure,
        values_checked: last_n - lo + 1,
        failure_count,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
        note: None,
    })
}

/// Splits `lo..=hi` into at most `parts` contiguous inclusive ranges.
fn chunk_bounds(lo: u64, hi: u64, parts: usize) -> Vec<(u64, u64)> {
    let len = hi - lo + 1;
    let parts = (parts as u64).clamp(1, len);
    let size = len.div_ceil(parts);
    (0..parts)
        .map(|i| (lo + i * size, (lo + (i + 1) * size - 1).min(hi)))
        .filter(|(a, b)| a <= b)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::BigRat;

    fn equal_except(
        bad: &'static [u64],
    ) -> impl Fn(u64) -> Result<(QPi2, QPi2), IdentityError> + Sync {
        move |n| {
            let v = QPi2::rational(BigRat::from(n as i64));
            let w = if bad.contains(&n) {
                QPi2::rational(BigRat::from(-1))
            } else {
                v.clone()
            };
            Ok((v, w))
        }
    }

    #[test]
    fn chunks_cover_range() {
        let c = chunk_bounds(3, 20, 5);
        assert_eq!(c.first().unwrap().0, 3);
        assert_eq!(c.last().unwrap().1, 20);
        for w in c.windows(2) {
            assert_eq!(w[0].1 + 1, w[1].0);
        }
        assert_eq!(chunk_bounds(5, 5, 8), vec![(5, 5)]);
    }

    #[test]
    fn serial_and_parallel_agree() {
        for keep_going in [false, true] {
            let serial = sweep(
                "t",
                None,
                0,
                200,
                SweepOptions {
                    keep_going,
                    jobs: 1,
                },
                equal_except(&[57, 130]),
            )
            .unwrap();
            let par = sweep(
                "t",
                None,
                0,
                200,
                SweepOptions {
                    keep_going,
                    jobs: 4,
                },
                equal_except(&[57, 130]),
            )
            .unwrap();
            assert_eq!(serial.first_failure, par.first_failure);
            assert_eq!(serial.values_checked, par.values_checked);
            assert_eq!(serial.failure_count, par.failure_count);
            assert_eq!(serial.first_failure.as_ref().unwrap().n(), 57);
        }
    }

    #[test]
    fn stops_at_first_failure() {
        let r = sweep(
            "t",
            None,
            10,
            100,
            SweepOptions::default(),
            equal_except(&[12, 13]),
        )
        .unwrap();
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.values_checked, 3);
        assert_eq!(r.failure_count, 1);
        let r = sweep(
            "t",
            None,
            10,
            100,
            SweepOptions {
                keep_going: true,
                jobs: 1,
            },
            equal_except(&[12, 13]),
        )
        .unwrap();
        assert_eq!(r.failure_count, 2);
        assert_eq!(r.values_checked, 91);
    }

    #[test]
    fn invalid_range() {
        let r = sweep("t", None, 5, 4, SweepOptions::default(), equal_except(&[]));
        assert_eq!(r.unwrap_err(), IdentityError::InvalidRange { lo: 5, hi: 4 });
    }

    #[test]
    fn eval_errors_become_failures_and_residues_are_fatal() {
        let r = sweep("t", None, 0, 9, SweepOptions::default(), |n| {
            if n == 4 {
                Err(IdentityError::Eval("boom".into()))
            } else {
                Ok((QPi2::zero(), QPi2::zero()))
            }
        })
        .unwrap();
        assert_eq!(
            r.first_failure,
            Some(Failure::EvalError {
                n: 4,
                message: "boom".into()
            })
        );

        let r = sweep("t", None, 0, 9, SweepOptions::default(), |n| {
            Err(IdentityError::PiResidue {
                n,
                residue: "x".into(),
            })
        });
        assert!(matches!(r, Err(IdentityError::PiResidue { n: 0, .. })));
    }
}
