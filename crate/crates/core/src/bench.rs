//! Timing harness for the polynomial-time index and the reduction pipeline.

use std::time::{Duration, Instant};

use crate::error::Result;
use crate::generate::{random_4regular, random_graph, rng};
use crate::mu::k_index;
use crate::reduction::{count_tours, Caps, Method};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `G(n, 1/2)`, timing `k_index`.
    RandomGraph,
    /// Configuration-model 4-regular multigraphs, timing the full reduction.
    Random4Regular,
}

#[derive(Clone, Debug)]
pub struct Sample {
    pub size: usize,
    /// Median over repetitions.
    pub elapsed: Duration,
    /// The computed value, for the record.
    pub value: String,
}

fn median(mut xs: Vec<Duration>) -> Duration {
    xs.sort();
    xs[xs.len() / 2]
}

/// Times one instance per size, repeating each measurement `reps` times.
pub fn run(family: Family, sizes: &[usize], seed: u64, reps: usize) -> Result<Vec<Sample>> {
    let reps = reps.max(1);
    let mut out = Vec::with_capacity(sizes.len());
    for &size in sizes {
        let mut r = rng(seed ^ size as u64);
        let mut times = Vec::with_capacity(reps);
        let value = match family {
            Family::RandomGraph => {
                let g = random_graph(size, 0.5, &mut r);
                let mut k = None;
                for _ in 0..reps {
                    let start = Instant::now();
                    k = Some(k_index(&g));
                    times.push(start.elapsed());
                }
                format!("k has {} bits", k.expect("reps >= 1").bits())
            }
            Family::Random4Regular => {
                let f = random_4regular(size, &mut r);
                let mut count = None;
                for _ in 0..reps {
                    let start = Instant::now();
                    let rep = count_tours(&f, "bench", Method::Reduction, Caps::default())?;
                    times.push(start.elapsed());
                    count = rep.product();
                }
                format!("tours = {}", count.expect("reduction computes l*k"))
            }
        };
        out.push(Sample {
            size,
            elapsed: median(times),
            value,
        });
    }
    Ok(out)
}

/// Least-squares slope of `log(time)` against `log(size)`.
pub fn loglog_slope(samples: &[Sample]) -> Option<f64> {
    if samples.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = samples
        .iter()
        .map(|s| ((s.size as f64).ln(), s.elapsed.as_secs_f64().max(1e-9).ln()))
        .collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slope_of_exact_power_law() {
        let samples: Vec<Sample> = [10usize, 20, 40]
            .iter()
            .map(|&n| Sample {
                size: n,
                elapsed: Duration::from_nanos((n * n * n) as u64),
                value: String::new(),
            })
            .collect();
        assert!((loglog_slope(&samples).unwrap() - 3.0).abs() < 1e-9);
        assert_eq!(loglog_slope(&samples[..1]), None);
    }

    #[test]
    fn small_bench_runs() {
        let s = run(Family::Random4Regular, &[3, 5], 0, 1).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s[0].value.starts_with("tours = "));
    }
}
